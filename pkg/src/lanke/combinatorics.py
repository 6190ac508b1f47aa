"""Partitions, Young tableaux and Littlewood-Richardson counting."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache
from itertools import combinations
from math import factorial, gcd, prod
from typing import Iterable, Iterator, Sequence

_EXPONENT = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


class Partition(tuple):
    """An integer partition, stored as its weakly decreasing positive parts.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.  The empty partition is the partition of 0.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,3,1"`` or the exponent form ``"3^2,1"``."""
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        parts: list[int] = []
        for chunk in text.split(","):
            match = _EXPONENT.match(chunk)
            if match is None:
                raise ValueError(f"cannot parse partition component {chunk!r}")
            part, times = int(match.group(1)), int(match.group(2) or 1)
            parts.extend([part] * times)
        return cls(parts)

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def compact(self) -> str:
        """Exponent notation, e.g. ``3^2,2,1^3``."""
        out = []
        i = 0
        while i < len(self):
            j = i
            while j < len(self) and self[j] == self[i]:
                j += 1
            out.append(str(self[i]) if j - i == 1 else f"{self[i]}^{j - i}")
            i = j
        return ",".join(out)

    def size(self) -> int:
        return sum(self)

    @property
    def num_columns(self) -> int:
        return self[0] if self else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells ``(row, col)``, 1-indexed, in row-major order."""
        for r, length in enumerate(self, start=1):
            for c in range(1, length + 1):
                yield r, c

    def contains(self, other: Sequence[int]) -> bool:
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))


def as_partition(value: Partition | Sequence[int] | str) -> Partition:
    if isinstance(value, Partition):
        return value
    if isinstance(value, str):
        return Partition.parse(value)
    return Partition(value)


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in lexicographically decreasing order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + tuple(rest))


@cache
def partitions_list(n: int) -> tuple[Partition, ...]:
    return tuple(partitions(n))


def conjugate(lam: Sequence[int]) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for part in lam if part > c) for c in range(lam[0]))


def content_sum(lam: Sequence[int]) -> int:
    """Sum of ``col - row`` over the cells of ``lam``."""
    return sum(c - r for r, c in as_partition(lam).cells())


def column_lengths(lam: Sequence[int]) -> Partition:
    return conjugate(lam)


def is_compatible(left: Sequence[int], right: Sequence[int]) -> bool:
    """True iff the last column of ``left`` is at least as long as the first column of ``right``."""
    left, right = as_partition(left), as_partition(right)
    last_column = conjugate(left)[-1] if left else 0
    return last_column >= len(right)


def concat(left: Sequence[int], right: Sequence[int]) -> Partition:
    """Place ``right`` immediately to the right of ``left`` (componentwise sum)."""
    left, right = as_partition(left), as_partition(right)
    if right and not is_compatible(left, right):
        raise ValueError(f"{left} and {right} are not compatible for concatenation")
    width = max(len(left), len(right))
    padded_l = tuple(left) + (0,) * (width - len(left))
    padded_r = tuple(right) + (0,) * (width - len(right))
    return Partition(a + b for a, b in zip(padded_l, padded_r))


def hook_lengths(lam: Sequence[int]) -> list[int]:
    lam = as_partition(lam)
    conj = conjugate(lam)
    return [lam[r - 1] - c + conj[c - 1] - r + 1 for r, c in lam.cells()]


@cache
def _hook_dimension(lam: Partition) -> int:
    return factorial(sum(lam)) // prod(hook_lengths(lam))


def hook_length_dimension(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape ``lam``, via the hook length formula."""
    return _hook_dimension(as_partition(lam))


def remove_first_row(lam: Sequence[int]) -> Partition:
    return Partition(as_partition(lam)[1:])


def add_first_row(lam: Sequence[int], length: int) -> Partition:
    lam = as_partition(lam)
    if lam and lam[0] > length:
        raise ValueError(f"cannot put a row of length {length} on top of {lam}")
    return Partition((length,) + tuple(lam))


@dataclass(frozen=True)
class YoungTableau:
    """A filling of a Young diagram, stored row by row.

    Repeated entries are allowed so the same type can hold tableaux of a
    general content; ``is_standard`` checks the usual conditions.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        Partition(len(row) for row in rows)

    @property
    def shape(self) -> Partition:
        return Partition(len(row) for row in self.rows)

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def __len__(self) -> int:
        return sum(len(row) for row in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [
            tuple(row[c] for row in self.rows if len(row) > c)
            for c in range(len(self.rows[0]) if self.rows else 0)
        ]

    def is_standard(self) -> bool:
        n = len(self)
        if sorted(self.entries) != list(range(1, n + 1)):
            return False
        for row in self.rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                return False
        for col in self.columns():
            if any(a >= b for a, b in zip(col, col[1:])):
                return False
        return True

    def row_of(self) -> dict[int, int]:
        return {x: r for r, row in enumerate(self.rows) for x in row}

    def descents(self) -> list[int]:
        if not self.is_standard():
            raise ValueError("descents are defined for standard tableaux only")
        row = self.row_of()
        return [j for j in range(1, len(self)) if row[j + 1] > row[j]]

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def syt_enumerate(lam: Sequence[int]) -> Iterator[YoungTableau]:
    """Standard Young tableaux of shape ``lam``, lexicographic in the row-major entry sequence."""
    lam = as_partition(lam)
    yield from (YoungTableau(rows) for rows in _syt_rows(lam))


@cache
def _syt_rows(lam: Partition) -> tuple[tuple[tuple[int, ...], ...], ...]:
    n = sum(lam)
    if n == 0:
        return ((),)
    found = []
    # the largest entry sits in some corner; recurse on the shape with that corner removed
    for r in range(len(lam)):
        below = lam[r + 1] if r + 1 < len(lam) else 0
        if lam[r] > below:
            smaller = list(lam)
            smaller[r] -= 1
            for rows in _syt_rows(Partition(smaller)):
                rows = list(rows) + [()] * (len(lam) - len(rows))
                rows[r] = rows[r] + (n,)
                found.append(tuple(rows))
    found.sort(key=lambda rows: tuple(x for row in rows for x in row))
    return tuple(found)


def major_index(t: YoungTableau) -> int:
    """Sum of the entries ``j`` for which ``j + 1`` lies in a lower row."""
    return sum(t.descents())


def kw_multiplicity(lam: Sequence[int], i: int = 1) -> int:
    """Multiplicity of the irreducible ``lam`` in the Lie representation ``Lie_m``, ``m = |lam|``.

    Counts standard tableaux of shape ``lam`` whose major index is congruent
    to ``i`` modulo ``m``; ``i`` must be coprime to ``m``.
    """
    lam = as_partition(lam)
    m = sum(lam)
    if m < 2:
        raise ValueError("the Lie representation count needs m >= 2")
    if gcd(i, m) != 1:
        raise ValueError(f"i={i} is not coprime to m={m}")
    return sum(1 for t in syt_enumerate(lam) if (major_index(t) - i) % m == 0)


def kw_table(m: int, i: int = 1) -> dict[Partition, int]:
    table = {}
    for lam in partitions(m):
        mult = kw_multiplicity(lam, i)
        if mult:
            table[lam] = mult
    return table


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", as_partition(self.outer))
        object.__setattr__(self, "inner", as_partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def row_bounds(self) -> list[tuple[int, int]]:
        """Per row, the half-open column range ``[start, end)`` (0-indexed) of skew cells."""
        inner = tuple(self.inner) + (0,) * (len(self.outer) - len(self.inner))
        return [(a, b) for a, b in zip(inner, self.outer)]

    def cells(self) -> list[tuple[int, int]]:
        return [(r + 1, c + 1) for r, (a, b) in enumerate(self.row_bounds()) for c in range(a, b)]


def lr_fillings(shape: SkewShape, content: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Littlewood-Richardson fillings of ``shape`` with the given content.

    A filling is semistandard (rows weak, columns strict) and its reverse
    reading word (rows right to left, top to bottom) is a lattice word.
    Each filling is returned as one tuple of entries per row of the outer
    shape, covering only the skew cells of that row.
    """
    content = as_partition(content)
    if shape.size() != sum(content):
        raise ValueError(f"skew shape has {shape.size()} cells but content has {sum(content)}")
    bounds = shape.row_bounds()
    n_letters = len(content)

    def fill(r: int, rows: list[tuple[int, ...]], counts: list[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if r == len(bounds):
            if counts == list(content):
                yield tuple(rows)
            return
        start, end = bounds[r]
        above = rows[r - 1] if r else ()
        above_start = bounds[r - 1][0] if r else 0

        def entry_above(col: int) -> int:
            if r == 0 or col < above_start or col >= bounds[r - 1][1]:
                return 0
            return above[col - above_start]

        length = end - start
        # build the row right to left so the lattice condition is checked in reading order
        def place(pos: int, row: list[int], counts: list[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
            if pos < 0:
                yield from fill(r + 1, rows + [tuple(row)], counts)
                return
            col = start + pos
            upper = row[pos + 1] if pos + 1 < length else n_letters
            lower = entry_above(col) + 1
            for value in range(lower, min(upper, n_letters) + 1):
                if counts[value - 1] >= content[value - 1]:
                    continue
                if value > 1 and counts[value - 1] + 1 > counts[value - 2]:
                    continue
                counts[value - 1] += 1
                row[pos] = value
                yield from place(pos - 1, row, counts)
                counts[value - 1] -= 1
            row[pos] = 0

        yield from place(length - 1, [0] * length, counts)

    yield from fill(0, [], [0] * n_letters)


def lr_coefficient(outer: Sequence[int], inner: Sequence[int], content: Sequence[int]) -> int:
    """``c^{outer}_{inner, content}``; zero when the shapes do not nest."""
    outer, inner, content = as_partition(outer), as_partition(inner), as_partition(content)
    if not outer.contains(inner) or sum(outer) - sum(inner) != sum(content):
        return 0
    return sum(1 for _ in lr_fillings(SkewShape(outer, inner), content))


def lr_product(left: Sequence[int], right: Sequence[int]) -> dict[Partition, int]:
    """Expansion of the induction product of two irreducibles, by the LR rule."""
    left, right = as_partition(left), as_partition(right)
    total = sum(left) + sum(right)
    out = {}
    for nu in partitions(total):
        c = lr_coefficient(nu, left, right)
        if c:
            out[nu] = c
    return out


def pieri_column(lam: Sequence[int], r: int) -> list[Partition]:
    """Shapes obtained from ``lam`` by adding a vertical strip of ``r`` cells.

    These index the irreducibles of ``S^lam`` induced up with ``sgn_r``.
    """
    lam = as_partition(lam)
    if r < 1:
        raise ValueError("strip size must be positive")
    padded = tuple(lam) + (0,) * r
    out = []
    for rows in combinations(range(len(padded)), r):
        mu = list(padded)
        for row in rows:
            mu[row] += 1
        if all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1)):
            out.append(Partition(mu))
    return sorted(set(out), reverse=True)


def pieri_row(lam: Sequence[int], r: int) -> list[Partition]:
    """Shapes obtained by adding a horizontal strip of ``r`` cells."""
    return sorted((conjugate(mu) for mu in pieri_column(conjugate(lam), r)), reverse=True)
