"""Pure-Python twin of the compiled modular echelon kernel.

Same algorithm and API as ``_modkernel.ModEchelon``; used when the extension
is unavailable or ``LANKE_PURE_PYTHON`` is set.
"""

from __future__ import annotations

import heapq

import numpy as np


class ModEchelon:
    """Row echelon form of a growing set of sparse rows modulo a prime ``p < 2**31``."""

    def __init__(self, ncols: int, p: int) -> None:
        if p < 2 or p >= 1 << 31:
            raise ValueError("modulus must satisfy 2 <= p < 2**31")
        self.ncols = int(ncols)
        self.p = int(p)
        self._rows: dict[int, list[tuple[int, int]]] = {}
        self._lead: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._lead)

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._rows.values())

    def _scatter(self, cols, vals) -> dict[int, int]:
        p = self.p
        spa: dict[int, int] = {}
        for c, v in zip(np.asarray(cols, dtype=np.int64).tolist(), np.asarray(vals, dtype=np.int64).tolist()):
            if c < 0 or c >= self.ncols:
                raise IndexError(f"column {c} out of range")
            spa[c] = (spa.get(c, 0) + v) % p
        return spa

    def _sweep(self, spa: dict[int, int], stop_at_new: bool) -> tuple[int, list[tuple[int, int]]]:
        # returns (new pivot or -1, residual entries in increasing column order)
        p = self.p
        heap = list(spa)
        heapq.heapify(heap)
        queued = set(heap)
        residual = []
        while heap:
            c = heapq.heappop(heap)
            queued.discard(c)
            f = spa.pop(c, 0)
            if not f:
                continue
            row = self._rows.get(c)
            if row is None:
                if stop_at_new:
                    spa[c] = f
                    return c, []
                residual.append((c, f))
                continue
            g = p - f
            for c2, v2 in row[1:]:
                spa[c2] = (spa.get(c2, 0) + g * v2) % p
                if c2 not in queued:
                    queued.add(c2)
                    heapq.heappush(heap, c2)
        return -1, residual

    def _insert(self, spa: dict[int, int]) -> bool:
        c, _ = self._sweep(spa, stop_at_new=True)
        if c < 0:
            return False
        p = self.p
        inv = pow(spa[c], -1, p)
        row = [(c, 1)]
        for c2 in sorted(spa):
            v = spa[c2]
            if c2 != c and v:
                row.append((c2, v * inv % p))
        self._rows[c] = row
        self._lead.append(c)
        return True

    def add_row(self, cols, vals) -> bool:
        """Insert a row; return True when it enlarges the row space."""
        return self._insert(self._scatter(cols, vals))

    def add_rows_csr(self, indptr, indices, data, stop_at_rank: int = -1) -> int:
        """Insert the rows of a CSR triple; return how many enlarged the span."""
        indptr = np.asarray(indptr, dtype=np.int64)
        added = 0
        for i in range(len(indptr) - 1):
            if 0 <= stop_at_rank <= self.rank:
                break
            lo, hi = indptr[i], indptr[i + 1]
            added += self._insert(self._scatter(indices[lo:hi], data[lo:hi]))
        return added

    def reduce(self, cols, vals):
        """Remainder of a row after elimination; it has no pivot-column entries."""
        _, residual = self._sweep(self._scatter(cols, vals), stop_at_new=False)
        rc = np.array([c for c, _ in residual], dtype=np.int64)
        rv = np.array([v for _, v in residual], dtype=np.int64)
        return rc, rv

    def pivot_columns(self) -> np.ndarray:
        return np.array(sorted(self._lead), dtype=np.int64)

    def rref_nonpivot(self):
        """Reduced echelon form restricted to non-pivot columns; see the compiled kernel."""
        p = self.p
        pivots = self.pivot_columns()
        is_pivot = np.zeros(self.ncols, dtype=bool)
        is_pivot[pivots] = True
        nonpivots = np.flatnonzero(~is_pivot).astype(np.int64)
        pos_np = {int(c): j for j, c in enumerate(nonpivots)}
        pos_pv = {int(c): i for i, c in enumerate(pivots)}
        R = np.zeros((len(pivots), len(nonpivots)), dtype=np.int64)
        for i in range(len(pivots) - 1, -1, -1):
            acc = np.zeros(len(nonpivots), dtype=np.int64)
            for c, v in self._rows[int(pivots[i])][1:]:
                j = pos_np.get(c)
                if j is not None:
                    acc[j] = (acc[j] + v) % p
                else:
                    acc = (acc + (p - v) * R[pos_pv[c]]) % p
            R[i] = acc
        return pivots, nonpivots, R
