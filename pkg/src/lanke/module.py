"""Concrete symmetric-group modules given by generators and relations.

Conventions used throughout the package:

* A permutation of ``[m]`` is the tuple of images of ``1..m``.
* Permutations act on the left by relabeling entries (letters), so
  ``(sigma tau) . x = sigma . (tau . x)``.  Position permutations, where
  needed, are called right actions and are spelled out at the call site.
* A quotient module is the span of signed basis symbols modulo a relation
  subspace.  Its basis is the set of non-pivot symbols of the reduced echelon
  form of the relations, and coordinates are indexed by position in that set.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from fractions import Fraction
from itertools import combinations
from typing import Callable, Hashable, Iterable, Mapping, Sequence

import numpy as np

from lanke.characters import (
    DEFAULT_MAX_DEGREE,
    ClassFunction,
    Decomposition,
    check_degree,
    class_representative,
    decompose,
)
from lanke.combinatorics import partitions_list
from lanke.errors import StructuralError
from lanke.linalg import Echelon, IntegerRows, echelonize
from lanke.linalg.modular import _verify

Perm = tuple[int, ...]
Symbol = Hashable
SignedSymbol = tuple[int, Symbol]

_INT64_SAFE = 1 << 62

# label of the distinguished letter b; larger than any real label and fixed by every perm
B = 1 << 20


def compose(sigma: Perm, tau: Perm) -> Perm:
    """``sigma tau``: apply ``tau`` first."""
    return tuple(sigma[t - 1] for t in tau)


def inverse(sigma: Perm) -> Perm:
    out = [0] * len(sigma)
    for i, s in enumerate(sigma, start=1):
        out[s - 1] = i
    return tuple(out)


def transposition(m: int, i: int, j: int) -> Perm:
    images = list(range(1, m + 1))
    images[i - 1], images[j - 1] = j, i
    return tuple(images)


def adjacent_transpositions(m: int) -> list[Perm]:
    return [transposition(m, i, i + 1) for i in range(1, m)]


def all_transpositions(m: int) -> list[Perm]:
    return [transposition(m, i, j) for i, j in combinations(range(1, m + 1), 2)]


def _axpy(target: dict, scale, source: Mapping) -> None:
    for c, v in source.items():
        x = target.get(c, 0) + scale * v
        if x:
            target[c] = x
        else:
            target.pop(c, None)


class Representation(ABC):
    """A finite-dimensional representation of ``S_degree`` with a fixed basis."""

    degree: int
    max_degree: int | None = DEFAULT_MAX_DEGREE

    @property
    @abstractmethod
    def dim(self) -> int: ...

    @abstractmethod
    def act(self, perm: Perm, i: int) -> dict[int, Fraction]:
        """Coordinates of ``perm . b_i``."""

    def trace(self, perm: Perm) -> Fraction:
        return sum((self.act(perm, i).get(i, 0) for i in range(self.dim)), Fraction(0))

    def apply(self, perm: Perm, vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, v in vec.items():
            _axpy(out, v, self.act(perm, i))
        return out

    def apply_class_sum(self, perms: Iterable[Perm], vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for perm in perms:
            _axpy(out, 1, self.apply(perm, vec))
        return out

    def character(self) -> ClassFunction:
        check_degree(self.degree, self.max_degree)
        return ClassFunction(
            self.degree, {mu: _as_int(self.trace(class_representative(mu))) for mu in partitions_list(self.degree)}
        )

    def decomposition(self) -> Decomposition:
        return decompose(self.character())


def _as_int(x) -> int | Fraction:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


class QuotientModule(Representation):
    """Span of signed symbols, permuted monomially, modulo a relation subspace.

    Args:
        degree: the symmetric group is ``S_degree``.
        symbols: ambient basis symbols, in the column order used for elimination.
        act_symbol: ``(perm, symbol) -> (sign, symbol)`` with sign 0 for zero.
        relations: relation vectors as ``{symbol index: coefficient}``.
        mode: ``"multimodular"`` (certified) or ``"rational"``.
    """

    def __init__(
        self,
        degree: int,
        symbols: Sequence[Symbol],
        act_symbol: Callable[[Perm, Symbol], SignedSymbol],
        relations: Iterable[Mapping[int, int | Fraction]],
        mode: str = "multimodular",
        max_degree: int | None = DEFAULT_MAX_DEGREE,
        check: bool = True,
    ) -> None:
        self.degree = degree
        self.symbols = list(symbols)
        self.index = {s: i for i, s in enumerate(self.symbols)}
        if len(self.index) != len(self.symbols):
            raise ValueError("ambient symbols must be distinct")
        self.act_symbol = act_symbol
        self.relations = [r for r in relations if any(r.values())]
        self.mode = mode
        self.max_degree = max_degree
        self.echelon: Echelon = echelonize(self.relations, len(self.symbols), mode)
        if check:
            self.check_invariance()

    @property
    def ambient_dim(self) -> int:
        return len(self.symbols)

    @property
    def rank(self) -> int:
        return self.echelon.rank

    @property
    def dim(self) -> int:
        return self.echelon.quotient_dim

    def summary(self) -> dict:
        return {"ambient_dim": self.ambient_dim, "rank": self.rank, "quotient_dim": self.dim}

    def basis_symbol(self, i: int) -> Symbol:
        return self.symbols[int(self.echelon.nonpivots[i])]

    def symbol_image(self, perm: Perm, col: int) -> tuple[int, int]:
        """``perm . e_col`` as ``(sign, column)``; column -1 when the image is zero."""
        sign, sym = self.act_symbol(perm, self.symbols[col])
        if sign == 0:
            return 0, -1
        try:
            return sign, self.index[sym]
        except KeyError:
            raise StructuralError(f"action leaves the ambient basis: {sym!r}") from None

    def vector(self, terms: Iterable[tuple[int | Fraction, Symbol]]) -> dict[int, Fraction]:
        """Ambient vector from ``(coefficient, symbol)`` pairs."""
        out: dict[int, Fraction] = {}
        for coef, sym in terms:
            _axpy(out, 1, {self.index[sym]: Fraction(coef)})
        return out

    def normal_form(self, vec: Mapping[int, int | Fraction]) -> dict[int, Fraction]:
        """Quotient coordinates of an ambient vector."""
        return self.echelon.normal_form(vec)

    def act(self, perm: Perm, i: int) -> dict[int, Fraction]:
        sign, col = self.symbol_image(perm, int(self.echelon.nonpivots[i]))
        if sign == 0:
            return {}
        return self.normal_form({col: sign})

    def permutation_table(self, perm: Perm) -> tuple[np.ndarray, np.ndarray]:
        """Signs and target columns of ``perm`` on every ambient symbol."""
        signs = np.zeros(self.ambient_dim, dtype=np.int64)
        targets = np.zeros(self.ambient_dim, dtype=np.int64)
        for c in range(self.ambient_dim):
            s, t = self.symbol_image(perm, c)
            signs[c], targets[c] = s, max(t, 0)
        return signs, targets

    def check_invariance(self, perms: Iterable[Perm] | None = None) -> None:
        """Raise ``StructuralError`` unless the relation space is stable under ``perms``.

        Defaults to the adjacent transpositions, which generate the group.
        """
        if not self.relations:
            return
        rows = IntegerRows.from_rows(self.relations, self.ambient_dim)
        for perm in adjacent_transpositions(self.degree) if perms is None else perms:
            signs, targets = self.permutation_table(perm)
            row_signs = signs[rows.indices]
            if isinstance(rows.data, np.ndarray):
                data = rows.data * row_signs
            else:
                data = [v * s for v, s in zip(rows.data, row_signs.tolist())]
            image = IntegerRows(self.ambient_dim, rows.indptr, targets[rows.indices], data)
            try:
                _verify(image, self.echelon)
            except StructuralError:
                raise StructuralError(f"relations are not invariant under {perm}") from None

    def _images(self, perm: Perm) -> tuple[np.ndarray, np.ndarray]:
        """Signs and target columns of ``perm`` on the non-pivot symbols."""
        nonpivots = self.echelon.nonpivots
        signs = np.zeros(len(nonpivots), dtype=np.int64)
        targets = np.zeros(len(nonpivots), dtype=np.int64)
        for j, c in enumerate(nonpivots):
            signs[j], targets[j] = self.symbol_image(perm, int(c))
        return signs, targets

    def trace(self, perm: Perm) -> Fraction:
        ech = self.echelon
        signs, targets = self._images(perm)
        total = 0
        for j in range(ech.quotient_dim):
            s, t = int(signs[j]), int(targets[j])
            if s == 0:
                continue
            jj = ech.np_pos[t]
            if jj >= 0:
                if jj == j:
                    total += s * ech.denom
            else:
                total -= s * int(ech.num[ech.row_of[t], j])
        return Fraction(total, ech.denom)

    def span(self, vectors: Iterable[Mapping[int, int | Fraction]]) -> "QuotientSpan":
        """The submodule of the quotient spanned by the images of ambient vectors.

        The caller is responsible for the vectors spanning an invariant subspace
        (e.g. a union of orbits); this is checked on adjacent transpositions.
        """
        return QuotientSpan(self, vectors)

    def symbol_span(self, symbols: Iterable[Symbol]) -> "QuotientSpan":
        return self.span({self.index[s]: 1} for s in symbols)


class QuotientSpan:
    """An invariant subspace of a ``QuotientModule``, in its quotient coordinates."""

    def __init__(self, module: QuotientModule, vectors: Iterable[Mapping[int, int | Fraction]]) -> None:
        self.module = module
        ech = module.echelon
        rows = []
        for vec in vectors:
            nf = module.normal_form(vec)
            if nf:
                rows.append(nf)
        self.generators = rows
        self.echelon: Echelon = echelonize(rows, ech.quotient_dim, module.mode)
        self._check()

    @property
    def dim(self) -> int:
        return self.echelon.rank

    def contains(self, vec: Mapping[int, int | Fraction]) -> bool:
        """Whether the image of an ambient vector lies in the span."""
        return not self.echelon.normal_form(self.module.normal_form(vec))

    def _full_rows(self) -> np.ndarray:
        """Integer rows ``denom * u_q`` over all quotient coordinates."""
        U = self.echelon
        exact = U.num.dtype == object
        full = np.zeros((U.rank, self.module.dim), dtype=object if exact else np.int64)
        if U.rank:
            full[np.arange(U.rank), U.pivots] = U.denom
            full[:, U.nonpivots] = U.num
        return full

    def _action_columns(self, perm: Perm) -> tuple[np.ndarray, int]:
        """``D * (perm . e_j)[c_q]`` for every quotient coordinate ``j`` and pivot ``c_q``."""
        module, ech, U = self.module, self.module.echelon, self.echelon
        signs, targets = module._images(perm)
        exact = ech.num.dtype == object
        M = np.zeros((ech.quotient_dim, U.rank), dtype=object if exact else np.int64)
        pivot_pos = {int(c): q for q, c in enumerate(U.pivots)}
        for j in range(ech.quotient_dim):
            s, t = int(signs[j]), int(targets[j])
            if s == 0:
                continue
            jj = int(ech.np_pos[t])
            if jj >= 0:
                q = pivot_pos.get(jj)
                if q is not None:
                    M[j, q] = s * ech.denom
            elif U.rank:
                M[j] = -s * ech.num[ech.row_of[t], U.pivots]
        return M, ech.denom

    def apply(self, perm: Perm, row: np.ndarray) -> np.ndarray:
        """``denom(M) * perm . v`` for a vector given as an integer coordinate row."""
        ech = self.module.echelon
        signs, targets = self.module._images(perm)
        out = np.zeros(ech.quotient_dim, dtype=object)
        for j in np.flatnonzero(row):
            s, t = int(signs[j]), int(targets[j])
            if s == 0:
                continue
            jj = int(ech.np_pos[t])
            if jj >= 0:
                out[jj] += s * ech.denom * int(row[j])
            else:
                out -= s * int(row[j]) * ech.num[ech.row_of[t]].astype(object)
        return out

    def _check(self) -> None:
        # each reduced basis row must map back into the span
        U = self.echelon
        if U.rank == 0:
            return
        full = self._full_rows()
        for perm in adjacent_transpositions(self.module.degree):
            images = [dict((j, int(v)) for j, v in enumerate(self.apply(perm, full[q])) if v) for q in range(U.rank)]
            try:
                _verify(IntegerRows.from_rows(images, self.module.dim), U)
            except StructuralError:
                raise StructuralError("spanning set does not generate an invariant subspace") from None

    def trace(self, perm: Perm) -> Fraction:
        U = self.echelon
        if U.rank == 0:
            return Fraction(0)
        full = self._full_rows()
        M, denom = self._action_columns(perm)
        bound = int(np.abs(full).max()) * int(np.abs(M).max() if M.size else 0) * max(1, self.module.dim)
        if full.dtype == object or M.dtype == object or bound >= _INT64_SAFE:
            full, M = full.astype(object), M.astype(object)
        total = int(np.sum(full * M.T))
        return Fraction(total, denom * U.denom)

    def character(self) -> ClassFunction:
        m = self.module.degree
        check_degree(m, self.module.max_degree)
        return ClassFunction(m, {mu: _as_int(self.trace(class_representative(mu))) for mu in partitions_list(m)})

    def decomposition(self) -> Decomposition:
        return decompose(self.character())

    def __add__(self, other: "QuotientSpan") -> "QuotientSpan":
        if other.module is not self.module:
            raise ValueError("spans of different modules")
        ech = self.module.echelon
        vecs = [{int(ech.nonpivots[j]): v for j, v in row.items()} for row in self.generators + other.generators]
        return QuotientSpan(self.module, vecs)


def intersection_character(a: QuotientSpan, b: QuotientSpan) -> ClassFunction:
    """``char(A ∩ B) = char A + char B - char(A + B)``."""
    return a.character() + b.character() - (a + b).character()


class DirectSum(Representation):
    """External direct sum of representations of the same degree."""

    def __init__(self, *parts: Representation) -> None:
        if not parts or len({p.degree for p in parts}) != 1:
            raise ValueError("summands must share a degree")
        self.parts = parts
        self.degree = parts[0].degree
        self.offsets = np.cumsum([0] + [p.dim for p in parts]).tolist()

    @property
    def dim(self) -> int:
        return self.offsets[-1]

    def _locate(self, i: int) -> tuple[int, int]:
        for k in range(len(self.parts)):
            if i < self.offsets[k + 1]:
                return k, i - self.offsets[k]
        raise IndexError(i)

    def act(self, perm: Perm, i: int) -> dict[int, Fraction]:
        k, local = self._locate(i)
        off = self.offsets[k]
        return {off + j: v for j, v in self.parts[k].act(perm, local).items()}

    def trace(self, perm: Perm) -> Fraction:
        return sum((p.trace(perm) for p in self.parts), Fraction(0))


class SignRepresentation(Representation):
    """The one-dimensional sign representation."""

    def __init__(self, degree: int) -> None:
        self.degree = degree

    @property
    def dim(self) -> int:
        return 1

    def act(self, perm: Perm, i: int) -> dict[int, Fraction]:
        return {0: Fraction(sign(perm))}


def sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    s = 1
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j] - 1
                length += 1
            if length % 2 == 0:
                s = -s
    return s


def linear_map_kernel(rep: Representation, images: Sequence[Mapping[int, Fraction]], mode: str = "multimodular"):
    """Kernel of the linear map sending basis vector ``i`` to ``images[i]``.

    Returns an ``InvariantSubspace`` of ``rep``; invariance is checked.
    """
    transposed: list[dict[int, Fraction]] = [{} for _ in range(rep.dim)]
    for i, img in enumerate(images):
        for c, v in img.items():
            if v:
                transposed[c][i] = Fraction(v)
    ech = echelonize(transposed, rep.dim, mode)
    return InvariantSubspace(rep, ech.kernel_vectors(), mode)


class InvariantSubspace:
    """An invariant subspace of an arbitrary ``Representation``, by spanning vectors."""

    def __init__(self, rep: Representation, vectors: Iterable[Mapping[int, Fraction]], mode: str = "multimodular") -> None:
        self.rep = rep
        self.mode = mode
        self.echelon = echelonize(list(vectors), rep.dim, mode)
        self.basis = self.echelon.rows()
        for perm in adjacent_transpositions(rep.degree):
            for u in self.basis:
                img = rep.apply(perm, u)
                if self.echelon.normal_form(img):
                    raise StructuralError("subspace is not invariant")

    @property
    def dim(self) -> int:
        return self.echelon.rank

    def trace(self, perm: Perm) -> Fraction:
        total = Fraction(0)
        for c, u in zip(self.echelon.pivots, self.basis):
            total += self.rep.apply(perm, u).get(int(c), 0)
        return total

    def character(self) -> ClassFunction:
        m = self.rep.degree
        return ClassFunction(m, {mu: _as_int(self.trace(class_representative(mu))) for mu in partitions_list(m)})

    def decomposition(self) -> Decomposition:
        return decompose(self.character())
