"""Exact sparse linear algebra over the rationals.

Vectors are dicts ``{column: Fraction}`` with no stored zeros.  This is the
ground truth that the modular fast path is checked against.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from lanke.errors import StructuralError

SparseVector = dict[int, Fraction]


def sparse(entries: Mapping[int, int | Fraction]) -> SparseVector:
    """Copy with Fraction values and zeros dropped."""
    return {int(c): Fraction(v) for c, v in entries.items() if v}


def axpy(target: SparseVector, scale: Fraction, source: Mapping[int, Fraction]) -> None:
    """``target += scale * source`` in place."""
    for c, v in source.items():
        x = target.get(c, 0) + scale * v
        if x:
            target[c] = x
        else:
            target.pop(c, None)


class Subspace:
    """A row space kept in reduced row echelon form.

    Rows are inserted one at a time.  The pivot of a new row is its smallest
    surviving column, and the new pivot column is cleared from every stored
    row, so the basis stays fully reduced.
    """

    def __init__(self, ncols: int) -> None:
        self.ncols = ncols
        self.rows: dict[int, SparseVector] = {}
        # column -> pivots whose rows have a nonzero there
        self._occ: dict[int, set[int]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def nonpivots(self) -> list[int]:
        return [c for c in range(self.ncols) if c not in self.rows]

    def reduce(self, vec: Mapping[int, int | Fraction]) -> SparseVector:
        """Remainder of ``vec`` modulo the space; it has no pivot-column entries."""
        out = sparse(vec)
        for c in [c for c in out if c in self.rows]:
            coef = out.get(c)
            if coef:
                axpy(out, -coef, self.rows[c])
        return out

    def contains(self, vec: Mapping[int, int | Fraction]) -> bool:
        return not self.reduce(vec)

    def add(self, vec: Mapping[int, int | Fraction]) -> bool:
        """Insert a row; return True when it enlarges the space."""
        for c in vec:
            if not 0 <= c < self.ncols:
                raise IndexError(f"column {c} out of range")
        r = self.reduce(vec)
        if not r:
            return False
        piv = min(r)
        inv = 1 / r[piv]
        r = {c: v * inv for c, v in r.items()}
        for other in list(self._occ.get(piv, ())):
            row = self.rows[other]
            coef = row[piv]
            before = set(row)
            axpy(row, -coef, r)
            self._reindex(other, before, row)
        self.rows[piv] = r
        self._reindex(piv, set(), r)
        return True

    def _reindex(self, pivot: int, before: set[int], row: SparseVector) -> None:
        after = set(row)
        for c in before - after:
            self._occ[c].discard(pivot)
        for c in after - before:
            if c != pivot:
                self._occ.setdefault(c, set()).add(pivot)

    def extend(self, rows: Iterable[Mapping[int, int | Fraction]]) -> int:
        return sum(self.add(r) for r in rows)

    def basis(self) -> list[SparseVector]:
        return [dict(self.rows[c]) for c in self.pivots]

    def entry(self, pivot: int, col: int) -> Fraction:
        return self.rows[pivot].get(col, Fraction(0))

    def dump(self) -> str:
        return dump_rows(self.basis())


def echelonize(rows: Iterable[Mapping[int, int | Fraction]], ncols: int) -> Subspace:
    space = Subspace(ncols)
    space.extend(rows)
    return space


def rank(rows: Iterable[Mapping[int, int | Fraction]], ncols: int) -> int:
    return echelonize(rows, ncols).rank


def transpose(rows: Sequence[Mapping[int, int | Fraction]], ncols: int) -> list[SparseVector]:
    cols: list[SparseVector] = [{} for _ in range(ncols)]
    for i, row in enumerate(rows):
        for c, v in row.items():
            if v:
                cols[c][i] = Fraction(v)
    return cols


def apply(rows: Sequence[Mapping[int, int | Fraction]], vec: Mapping[int, int | Fraction]) -> SparseVector:
    """Matrix-vector product ``M v`` where ``rows`` are the rows of ``M``."""
    out = {}
    for i, row in enumerate(rows):
        s = sum((Fraction(v) * vec[c] for c, v in row.items() if c in vec), Fraction(0))
        if s:
            out[i] = s
    return out


def kernel_basis(rows: Sequence[Mapping[int, int | Fraction]], ncols: int) -> list[SparseVector]:
    """Basis of ``{v : M v = 0}``; every returned vector is checked exactly."""
    space = echelonize(rows, ncols)
    basis = []
    for f in space.nonpivots():
        v = {f: Fraction(1)}
        for p, row in space.rows.items():
            if f in row:
                v[p] = -row[f]
        basis.append(v)
    for v in basis:
        if apply(rows, v):
            raise StructuralError("kernel vector fails M v = 0")
    return basis


def quotient_dimension(ambient_dim: int, relations: Subspace) -> int:
    if relations.ncols != ambient_dim:
        raise ValueError("relations live in a different ambient space")
    return ambient_dim - relations.rank


def induced_action_on_quotient(
    relations: Subspace, action: Sequence[Mapping[int, int | Fraction]]
) -> list[SparseVector]:
    """Matrix of a linear map on ``V / relations`` in non-pivot coordinates.

    ``action[c]`` is the image of basis vector ``e_c``.  Row ``i`` of the
    result is the image of the ``i``-th non-pivot basis vector, expressed in
    the non-pivot coordinates.
    """
    if len(action) != relations.ncols:
        raise ValueError("action must give an image for every basis vector")
    for row in relations.basis():
        image: SparseVector = {}
        for c, v in row.items():
            axpy(image, v, sparse(action[c]))
        if not relations.contains(image):
            raise StructuralError("action does not preserve the relation subspace")
    nonpivots = relations.nonpivots()
    position = {c: i for i, c in enumerate(nonpivots)}
    return [{position[c]: v for c, v in relations.reduce(action[j]).items()} for j in nonpivots]


def format_value(v: int | Fraction) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def dump_rows(rows: Iterable[Mapping[int, int | Fraction]]) -> str:
    """One line per row of ``index:value`` pairs, rationals written ``p/q``."""
    lines = []
    for row in rows:
        lines.append(" ".join(f"{c}:{format_value(v)}" for c, v in sorted(row.items()) if v))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_rows(text: str) -> list[SparseVector]:
    rows = []
    for line in text.splitlines():
        row = {}
        for item in line.split():
            c, v = item.split(":")
            row[int(c)] = Fraction(v)
        rows.append(row)
    return rows
