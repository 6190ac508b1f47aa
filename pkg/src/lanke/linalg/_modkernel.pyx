# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled incremental row echelon form over a prime field.

Pivot rows are normalized to a leading 1 and store only columns at or after
their pivot.  Reducing a row scans its support in increasing column order with
a min-heap, so each pivot row is applied at most once.
"""

from libc.stdint cimport int32_t, int64_t
from libcpp.vector cimport vector

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef extern from "<queue>" namespace "std" nogil:
    cdef cppclass min_heap "std::priority_queue<int32_t, std::vector<int32_t>, std::greater<int32_t> >":
        min_heap() except +
        bint empty()
        int32_t top()
        void push(int32_t)
        void pop()


cdef inline int64_t _inverse(int64_t a, int64_t p) nogil:
    cdef int64_t t = 0, new_t = 1, r = p, new_r = a, q, tmp
    while new_r != 0:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    if t < 0:
        t += p
    return t


cdef class ModEchelon:
    """Row echelon form of a growing set of sparse rows modulo a prime ``p < 2**31``."""

    cdef readonly int ncols
    cdef readonly int64_t p
    cdef vector[int64_t] spa
    cdef vector[char] mark
    cdef vector[int32_t] pivot_row
    cdef vector[vector[int32_t]] row_cols
    cdef vector[vector[int64_t]] row_vals
    cdef vector[int32_t] lead
    cdef min_heap heap

    def __cinit__(self, int ncols, int64_t p):
        if p < 2 or p >= (1 << 31):
            raise ValueError("modulus must satisfy 2 <= p < 2**31")
        self.ncols = ncols
        self.p = p
        self.spa.assign(ncols, 0)
        self.mark.assign(ncols, 0)
        self.pivot_row.assign(ncols, -1)

    @property
    def rank(self) -> int:
        return self.lead.size()

    @property
    def nnz(self) -> int:
        cdef size_t total = 0
        cdef size_t i
        for i in range(self.row_cols.size()):
            total += self.row_cols[i].size()
        return total

    cdef inline void _touch(self, int32_t c) nogil:
        if not self.mark[c]:
            self.mark[c] = 1
            self.heap.push(c)

    cdef void _scatter(self, const int64_t[:] cols, const int64_t[:] vals) except *:
        cdef Py_ssize_t i
        cdef int64_t c, v
        cdef int64_t p = self.p
        for i in range(cols.shape[0]):
            c = cols[i]
            if c < 0 or c >= self.ncols:
                self._clear()
                raise IndexError(f"column {c} out of range")
            v = vals[i] % p
            if v < 0:
                v += p
            self.spa[c] = (self.spa[c] + v) % p
            self._touch(<int32_t>c)

    cdef void _clear(self) nogil:
        cdef int32_t c
        while not self.heap.empty():
            c = self.heap.top()
            self.heap.pop()
            self.spa[c] = 0
            self.mark[c] = 0

    cdef inline void _eliminate(self, int32_t c, int64_t f) nogil:
        # spa -= f * (pivot row at c)
        cdef int32_t r = self.pivot_row[c]
        cdef size_t j
        cdef int32_t c2
        cdef int64_t p = self.p
        cdef int64_t g = p - f
        cdef vector[int32_t]* rc = &self.row_cols[r]
        cdef vector[int64_t]* rv = &self.row_vals[r]
        for j in range(1, rc.size()):
            c2 = rc[0][j]
            self.spa[c2] = (self.spa[c2] + g * rv[0][j]) % p
            self._touch(c2)

    cdef int32_t _reduce_to_new_pivot(self) nogil:
        """Reduce the workspace; return the new pivot column or -1 if it vanished."""
        cdef int32_t c
        cdef int64_t f
        while not self.heap.empty():
            c = self.heap.top()
            self.heap.pop()
            self.mark[c] = 0
            f = self.spa[c]
            if f == 0:
                continue
            self.spa[c] = 0
            if self.pivot_row[c] >= 0:
                self._eliminate(c, f)
            else:
                self.spa[c] = f
                return c
        return -1

    cdef void _store(self, int32_t c) nogil:
        cdef int64_t p = self.p
        cdef int64_t inv = _inverse(self.spa[c], p)
        cdef vector[int32_t] cols
        cdef vector[int64_t] vals
        cdef int32_t c2
        cdef int64_t v
        cols.push_back(c)
        vals.push_back(1)
        self.spa[c] = 0
        while not self.heap.empty():
            c2 = self.heap.top()
            self.heap.pop()
            self.mark[c2] = 0
            v = self.spa[c2]
            if v != 0:
                self.spa[c2] = 0
                cols.push_back(c2)
                vals.push_back((v * inv) % p)
        self.pivot_row[c] = <int32_t>self.lead.size()
        self.lead.push_back(c)
        self.row_cols.push_back(cols)
        self.row_vals.push_back(vals)

    def add_row(self, cols, vals) -> bool:
        """Insert a row; return True when it enlarges the row space."""
        cdef int64_t[:] cc = np.ascontiguousarray(cols, dtype=np.int64)
        cdef int64_t[:] vv = np.ascontiguousarray(vals, dtype=np.int64)
        self._scatter(cc, vv)
        cdef int32_t c
        with nogil:
            c = self._reduce_to_new_pivot()
            if c >= 0:
                self._store(c)
        return c >= 0

    def add_rows_csr(self, indptr, indices, data, Py_ssize_t stop_at_rank=-1) -> int:
        """Insert the rows of a CSR triple; return how many enlarged the span."""
        cdef int64_t[:] ptr = np.ascontiguousarray(indptr, dtype=np.int64)
        cdef int64_t[:] idx = np.ascontiguousarray(indices, dtype=np.int64)
        cdef int64_t[:] val = np.ascontiguousarray(data, dtype=np.int64)
        cdef Py_ssize_t i
        cdef int added = 0
        cdef int32_t c
        for i in range(ptr.shape[0] - 1):
            if stop_at_rank >= 0 and <Py_ssize_t>self.lead.size() >= stop_at_rank:
                break
            self._scatter(idx[ptr[i]:ptr[i + 1]], val[ptr[i]:ptr[i + 1]])
            with nogil:
                c = self._reduce_to_new_pivot()
                if c >= 0:
                    self._store(c)
                    added += 1
        return added

    def reduce(self, cols, vals):
        """Remainder of a row after elimination; it has no pivot-column entries."""
        cdef int64_t[:] cc = np.ascontiguousarray(cols, dtype=np.int64)
        cdef int64_t[:] vv = np.ascontiguousarray(vals, dtype=np.int64)
        self._scatter(cc, vv)
        cdef vector[int32_t] out_c
        cdef vector[int64_t] out_v
        cdef int32_t c
        cdef int64_t f
        with nogil:
            while not self.heap.empty():
                c = self.heap.top()
                self.heap.pop()
                self.mark[c] = 0
                f = self.spa[c]
                if f == 0:
                    continue
                self.spa[c] = 0
                if self.pivot_row[c] >= 0:
                    self._eliminate(c, f)
                else:
                    out_c.push_back(c)
                    out_v.push_back(f)
        rc = np.empty(out_c.size(), dtype=np.int64)
        rv = np.empty(out_c.size(), dtype=np.int64)
        cdef size_t i
        for i in range(out_c.size()):
            rc[i] = out_c[i]
            rv[i] = out_v[i]
        return rc, rv

    def pivot_columns(self):
        return np.sort(np.array([self.lead[i] for i in range(self.lead.size())], dtype=np.int64))

    def rref_nonpivot(self):
        """Reduced echelon form restricted to non-pivot columns.

        Returns ``(pivots, nonpivots, R)`` with both index arrays increasing and
        ``R`` of shape ``(rank, len(nonpivots))``: the reduced row for
        ``pivots[i]`` is ``e_{pivots[i]} + sum_j R[i, j] e_{nonpivots[j]}``.
        """
        cdef Py_ssize_t rank = self.lead.size()
        cdef int64_t p = self.p
        pivots = self.pivot_columns()
        is_pivot = np.zeros(self.ncols, dtype=bool)
        is_pivot[pivots] = True
        nonpivots = np.flatnonzero(~is_pivot).astype(np.int64)
        cdef Py_ssize_t nnp = nonpivots.shape[0]
        # position of each column among pivots / nonpivots; first nonpivot slot after each column
        pos_np = np.full(self.ncols, -1, dtype=np.int64)
        pos_np[nonpivots] = np.arange(nnp, dtype=np.int64)
        pos_pv = np.full(self.ncols, -1, dtype=np.int64)
        pos_pv[pivots] = np.arange(rank, dtype=np.int64)
        first_after = np.searchsorted(nonpivots, np.arange(self.ncols), side="right").astype(np.int64)
        R_arr = np.zeros((rank, nnp), dtype=np.int64)
        cdef int64_t[:, :] R = R_arr
        cdef int64_t[:] npos = pos_np
        cdef int64_t[:] ppos = pos_pv
        cdef int64_t[:] after = first_after
        cdef int64_t[:] piv = pivots
        cdef Py_ssize_t i, j, t, r, r2, start
        cdef int32_t c
        cdef int64_t v, g
        with nogil:
            for i in range(rank - 1, -1, -1):
                r = self.pivot_row[piv[i]]
                for t in range(1, self.row_cols[r].size()):
                    c = self.row_cols[r][t]
                    v = self.row_vals[r][t]
                    if npos[c] >= 0:
                        R[i, npos[c]] = (R[i, npos[c]] + v) % p
                    else:
                        r2 = ppos[c]
                        g = p - v
                        start = after[c]
                        for j in range(start, nnp):
                            if R[r2, j] != 0:
                                R[i, j] = (R[i, j] + g * R[r2, j]) % p
        return pivots, nonpivots, R_arr
