"""Modular elimination and the certified exact reduced echelon form.

The compiled kernel is used when available; ``LANKE_PURE_PYTHON=1`` forces the
pure-Python twin.  A reduced echelon form computed modulo two primes is lifted
to the rationals and then proved correct by an exact integer check, so every
result returned here is exact.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterable, Mapping, Sequence

import numpy as np
import scipy.sparse as sp

from lanke.errors import StructuralError
from lanke.linalg import _modkernel_py

if os.environ.get("LANKE_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from lanke.linalg import _modkernel as _compiled
    except ImportError:  # pragma: no cover - depends on the build
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"

PRIMES = (2147483647, 2147483629, 2147483587, 2147483579, 2147483563)

BLOCK_ROWS = 4096

_INT64_SAFE = 1 << 62


def echelon_class(backend: str | None = None):
    """The ``ModEchelon`` implementation for ``backend`` (default: best available)."""
    backend = backend or BACKEND
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not available")
        return _compiled.ModEchelon
    if backend == "python":
        return _modkernel_py.ModEchelon
    raise ValueError(f"unknown backend {backend!r}")


@dataclass
class IntegerRows:
    """Integer matrix in CSR form, with rows kept shortest first for elimination."""

    ncols: int
    indptr: np.ndarray
    indices: np.ndarray
    data: list[int] | np.ndarray

    @classmethod
    def from_rows(cls, rows: Iterable[Mapping[int, int | Fraction]], ncols: int) -> "IntegerRows":
        """Clear denominators row by row and drop zero rows."""
        scaled = []
        for row in rows:
            if all(type(v) is int for v in row.values()):
                items = sorted((int(c), v) for c, v in row.items() if v)
                if items:
                    scaled.append(items)
                continue
            items = [(int(c), Fraction(v)) for c, v in row.items() if v]
            if not items:
                continue
            den = lcm(*(v.denominator for _, v in items))
            scaled.append(sorted((c, int(v * den)) for c, v in items))
        scaled.sort(key=len)
        indptr = np.zeros(len(scaled) + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(r) for r in scaled])
        indices = np.fromiter((c for r in scaled for c, _ in r), dtype=np.int64, count=int(indptr[-1]))
        values = [v for r in scaled for _, v in r]
        if values and max(abs(v) for v in values) < _INT64_SAFE:
            data: list[int] | np.ndarray = np.array(values, dtype=np.int64)
        else:
            data = values
        if indices.size and (indices.min() < 0 or indices.max() >= ncols):
            raise IndexError("column index out of range")
        return cls(ncols, indptr, indices, data)

    @property
    def nrows(self) -> int:
        return len(self.indptr) - 1

    def mod(self, p: int) -> np.ndarray:
        if isinstance(self.data, np.ndarray):
            return np.mod(self.data, p)
        return np.array([v % p for v in self.data], dtype=np.int64)

    def max_abs(self) -> int:
        if len(self.data) == 0:
            return 0
        if isinstance(self.data, np.ndarray):
            return int(np.abs(self.data).max())
        return max(abs(v) for v in self.data)

    def select(self, rows: np.ndarray) -> "IntegerRows":
        lengths = self.indptr[rows + 1] - self.indptr[rows]
        indptr = np.zeros(len(rows) + 1, dtype=np.int64)
        indptr[1:] = np.cumsum(lengths)
        take = np.concatenate([np.arange(self.indptr[r], self.indptr[r + 1]) for r in rows]) if len(rows) else np.zeros(0, dtype=np.int64)
        take = take.astype(np.int64)
        data = self.data[take] if isinstance(self.data, np.ndarray) else [self.data[i] for i in take]
        return IntegerRows(self.ncols, indptr, self.indices[take], data)


def _mod_matmul(A: sp.csr_matrix, R: np.ndarray, p: int) -> np.ndarray:
    """``A @ R mod p`` for entries in ``[0, p)`` without int64 overflow."""
    lo = R & 0xFFFF
    hi = R >> 16
    x_hi = np.mod(A @ hi, p)
    x_lo = np.mod(A @ lo, p)
    return np.mod(np.mod(x_hi * (1 << 16), p) + x_lo, p)


@dataclass
class ModularEchelon:
    """Reduced echelon form of a row space modulo ``p``."""

    p: int
    ncols: int
    pivots: np.ndarray
    nonpivots: np.ndarray
    R: np.ndarray
    stats: dict = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _residual_rows(rows: IntegerRows, ech: ModularEchelon, chunk: int = BLOCK_ROWS) -> np.ndarray:
    """Indices of rows that are not in the span of ``ech`` modulo ``p``."""
    p = ech.p
    if rows.nrows == 0:
        return np.zeros(0, dtype=np.int64)
    A = sp.csr_matrix((rows.mod(p), rows.indices, rows.indptr), shape=(rows.nrows, rows.ncols), dtype=np.int64)
    A_P = A[:, ech.pivots]
    A_N = A[:, ech.nonpivots]
    bad = []
    for lo in range(0, rows.nrows, chunk):
        hi = min(lo + chunk, rows.nrows)
        lhs = A_N[lo:hi].toarray() if ech.nonpivots.size else np.zeros((hi - lo, 0), dtype=np.int64)
        rhs = _mod_matmul(A_P[lo:hi], ech.R, p) if ech.pivots.size else np.zeros_like(lhs)
        diff = np.any(np.mod(lhs - rhs, p) != 0, axis=1) if lhs.shape[1] else np.zeros(hi - lo, dtype=bool)
        bad.extend((np.flatnonzero(diff) + lo).tolist())
    return np.array(bad, dtype=np.int64)


def modular_echelon(rows: IntegerRows, p: int, backend: str | None = None) -> ModularEchelon:
    """Row space modulo ``p`` by blockwise insertion and a final membership sweep.

    Rows go in shortest first, ``BLOCK_ROWS`` at a time.  Once a block adds no
    rank the remaining rows are tested against the current reduced form in one
    vectorized pass; any that fail are inserted and the sweep repeats.
    """
    kernel = echelon_class(backend)(rows.ncols, p)
    data = rows.mod(p)
    inserted = 0
    for lo in range(0, rows.nrows, BLOCK_ROWS):
        hi = min(lo + BLOCK_ROWS, rows.nrows)
        start, stop = rows.indptr[lo], rows.indptr[hi]
        added = kernel.add_rows_csr(rows.indptr[lo : hi + 1] - start, rows.indices[start:stop], data[start:stop])
        inserted = hi
        if added == 0:
            break
    sweeps = 0
    while True:
        pivots, nonpivots, R = kernel.rref_nonpivot()
        ech = ModularEchelon(p, rows.ncols, pivots, nonpivots, R)
        if inserted >= rows.nrows:
            break
        rest = rows.select(np.arange(inserted, rows.nrows))
        bad = _residual_rows(rest, ech)
        sweeps += 1
        if bad.size == 0:
            break
        for i in bad + inserted:
            a, b = rows.indptr[i], rows.indptr[i + 1]
            kernel.add_row(rows.indices[a:b], data[a:b])
    ech.stats = {"rows": rows.nrows, "inserted": inserted, "sweeps": sweeps, "nnz": kernel.nnz}
    return ech


def modular_rank(rows: Iterable[Mapping[int, int | Fraction]], ncols: int, p: int = PRIMES[0]) -> int:
    return modular_echelon(IntegerRows.from_rows(rows, ncols), p).rank


def rational_reconstruction(a: int, m: int) -> Fraction | None:
    """The fraction ``n/d`` with ``n = a d mod m`` and ``|n|, d <= sqrt(m/2)``, if any."""
    a %= m
    bound = isqrt(m // 2)
    r0, r1 = m, a
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound or gcd(r1, abs(t1)) != 1:
        return None
    return Fraction(r1, t1)


def _symmetric(R: np.ndarray, p: int) -> np.ndarray:
    return np.where(R > p // 2, R - p, R)


@dataclass
class Echelon:
    """Exact reduced row echelon form.

    The reduced row for ``pivots[i]`` is
    ``e_{pivots[i]} + sum_j (num[i, j] / denom) e_{nonpivots[j]}``.
    ``num`` is an int64 array, or an object array of Python ints when the
    entries are too large.
    """

    ncols: int
    pivots: np.ndarray
    nonpivots: np.ndarray
    num: np.ndarray
    denom: int
    method: str

    def __post_init__(self) -> None:
        self.pivots = np.asarray(self.pivots, dtype=np.int64)
        self.nonpivots = np.asarray(self.nonpivots, dtype=np.int64)
        self.row_of = np.full(self.ncols, -1, dtype=np.int64)
        self.row_of[self.pivots] = np.arange(len(self.pivots))
        self.np_pos = np.full(self.ncols, -1, dtype=np.int64)
        self.np_pos[self.nonpivots] = np.arange(len(self.nonpivots))

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def quotient_dim(self) -> int:
        return len(self.nonpivots)

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(int(self.num[i, j]), self.denom)

    def rows(self) -> list[dict[int, Fraction]]:
        out = []
        for i, c in enumerate(self.pivots):
            row = {int(c): Fraction(1)}
            for j in np.flatnonzero(self.num[i]):
                row[int(self.nonpivots[j])] = self.entry(i, j)
            out.append(row)
        return out

    def normal_form(self, vec: Mapping[int, int | Fraction]) -> dict[int, Fraction]:
        """Coordinates of ``vec`` modulo the row space, keyed by non-pivot position."""
        acc: dict[int, Fraction] = {}
        for c, v in vec.items():
            if not v:
                continue
            j = self.np_pos[c]
            if j >= 0:
                acc[int(j)] = acc.get(int(j), 0) + Fraction(v)
            else:
                i = self.row_of[c]
                for jj in np.flatnonzero(self.num[i]):
                    acc[int(jj)] = acc.get(int(jj), 0) - Fraction(v) * self.entry(i, jj)
        return {j: v for j, v in acc.items() if v}

    def scaled_normal_form(self, vec: Mapping[int, int]) -> np.ndarray:
        """``denom`` times the normal form of an integer vector, as a dense integer row."""
        num_bound = int(np.abs(self.num).max()) if self.num.size else 0
        vec_bound = sum(abs(int(v)) for v in vec.values())
        exact = self.num.dtype == object or vec_bound * max(num_bound, self.denom, 1) >= _INT64_SAFE
        out = np.zeros(self.quotient_dim, dtype=object if exact else np.int64)
        for c, v in vec.items():
            j = self.np_pos[c]
            if j >= 0:
                out[j] += v * self.denom
            else:
                row = self.num[self.row_of[c]]
                out -= int(v) * (row.astype(object) if exact else row)
        return out

    def kernel_vectors(self) -> list[dict[int, Fraction]]:
        """Basis of ``{x : M x = 0}`` where ``M`` is the echelonized matrix."""
        out = []
        for j, f in enumerate(self.nonpivots):
            v = {int(f): Fraction(1)}
            for i in np.flatnonzero(self.num[:, j]):
                v[int(self.pivots[i])] = -self.entry(i, j)
            out.append(v)
        return out


def _lift(found: Sequence[ModularEchelon]) -> tuple[np.ndarray, int] | None:
    """Exact candidate (numerators, common denominator) by CRT over agreeing primes.

    Returns ``None`` when some entry does not yet reconstruct.
    """
    first = found[0]
    L = _symmetric(first.R, first.p)
    if all(np.array_equal(_symmetric(e.R, e.p), L) for e in found[1:]):
        return L, 1
    m = first.p
    acc = first.R.astype(object)
    for e in found[1:]:
        inv = pow(m, -1, e.p)
        acc = acc + m * (((e.R.astype(object) - acc) * inv) % e.p)
        m *= e.p
    fracs = {}
    for (i, j), x in np.ndenumerate(acc):
        if x:
            f = rational_reconstruction(int(x), m)
            if f is None:
                return None
            fracs[(i, j)] = f
    denom = lcm(*(f.denominator for f in fracs.values())) if fracs else 1
    num = np.zeros(L.shape, dtype=object)
    for (i, j), f in fracs.items():
        num[i, j] = f.numerator * (denom // f.denominator)
    if num.size == 0 or int(np.abs(num).max()) < _INT64_SAFE:
        num = num.astype(np.int64)
    return num, denom


def _verify(rows: IntegerRows, ech: Echelon) -> None:
    """Prove every row lies in the span of the candidate form.

    Checks ``A_N * denom == A_P @ num`` exactly.  Together with
    ``rank_Q >= rank_p`` this shows the candidate is the exact reduced form.
    """
    if rows.nrows == 0:
        return
    row_bound = int((np.diff(rows.indptr)).max()) * rows.max_abs()
    num_bound = int(np.abs(ech.num).max()) if ech.num.size else 0
    fits = (
        isinstance(rows.data, np.ndarray)
        and ech.num.dtype != object
        and row_bound * max(num_bound, ech.denom, 1) < _INT64_SAFE
    )
    if fits:
        A = sp.csr_matrix((rows.data, rows.indices, rows.indptr), shape=(rows.nrows, rows.ncols), dtype=np.int64)
        A_P = A[:, ech.pivots]
        A_N = A[:, ech.nonpivots]
        for lo in range(0, rows.nrows, BLOCK_ROWS):
            hi = min(lo + BLOCK_ROWS, rows.nrows)
            lhs = A_N[lo:hi].toarray() * ech.denom
            rhs = A_P[lo:hi] @ ech.num if ech.rank else np.zeros_like(lhs)
            if not np.array_equal(lhs, rhs):
                raise StructuralError("certification of the reduced echelon form failed")
        return
    for i in range(rows.nrows):
        a, b = rows.indptr[i], rows.indptr[i + 1]
        vec = {int(c): int(v) for c, v in zip(rows.indices[a:b], rows.data[a:b])}
        if any(ech.scaled_normal_form(vec)):
            raise StructuralError("certification of the reduced echelon form failed")


def certified_echelon(
    rows: Iterable[Mapping[int, int | Fraction]] | IntegerRows,
    ncols: int,
    primes: Sequence[int] = PRIMES,
    backend: str | None = None,
) -> Echelon:
    """Exact reduced echelon form via two primes, lifting and an exact check."""
    if not isinstance(rows, IntegerRows):
        rows = IntegerRows.from_rows(rows, ncols)
    found: list[ModularEchelon] = []
    for p in primes:
        ech = modular_echelon(rows, p, backend)
        found.append(ech)
        best = max(e.rank for e in found)
        agreeing = [e for e in found if e.rank == best and np.array_equal(e.pivots, ech.pivots)]
        if ech.rank < best or len(agreeing) < 2:
            continue
        lifted = _lift(agreeing)
        if lifted is None:
            continue
        exact = Echelon(ncols, ech.pivots, ech.nonpivots, lifted[0], lifted[1], "multimodular")
        try:
            _verify(rows, exact)
        except StructuralError:
            continue
        return exact
    # the primes ran out: entries too large for their product
    from lanke.linalg.rational import Subspace

    space = Subspace(ncols)
    for i in range(rows.nrows):
        a, b = rows.indptr[i], rows.indptr[i + 1]
        space.add({int(c): int(v) for c, v in zip(rows.indices[a:b], rows.data[a:b])})
    return echelon_from_subspace(space)


def echelon_from_subspace(space) -> Echelon:
    """Package a rational ``Subspace`` in the common ``Echelon`` layout."""
    pivots = np.array(space.pivots, dtype=np.int64)
    nonpivots = np.array(space.nonpivots(), dtype=np.int64)
    pos = {int(c): j for j, c in enumerate(nonpivots)}
    dens = [v.denominator for row in space.rows.values() for v in row.values()]
    denom = lcm(*dens) if dens else 1
    num = np.zeros((len(pivots), len(nonpivots)), dtype=object)
    for i, c in enumerate(pivots):
        for col, v in space.rows[int(c)].items():
            if col != c:
                num[i, pos[col]] = int(v * denom)
    if num.size == 0 or int(np.abs(num).max()) < _INT64_SAFE:
        num = num.astype(np.int64)
    return Echelon(space.ncols, pivots, nonpivots, num, denom, "rational")
