"""Characters of the symmetric group and decomposition of class functions."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from itertools import combinations
from math import factorial, prod
from typing import Callable, Iterable, Mapping, Sequence

from lanke.combinatorics import Partition, as_partition, hook_length_dimension, partitions_list
from lanke.errors import CapExceeded, NotACharacter

DEFAULT_MAX_DEGREE = 13

Number = int | Fraction


def check_degree(m: int, max_degree: int | None = DEFAULT_MAX_DEGREE) -> None:
    if max_degree is not None and m > max_degree:
        raise CapExceeded(f"degree {m} exceeds the cap {max_degree}")


def z_value(mu: Sequence[int]) -> int:
    """Order of the centralizer of a permutation of cycle type ``mu``."""
    counts = Counter(mu)
    return prod(part**mult * factorial(mult) for part, mult in counts.items())


@cache
def class_size(mu: Partition) -> int:
    return factorial(sum(mu)) // z_value(mu)


def class_representative(mu: Sequence[int]) -> tuple[int, ...]:
    """A permutation of cycle type ``mu`` in one-line notation (images of 1..m).

    Cycles are taken on consecutive blocks: ``(1 2 .. mu_1)(mu_1+1 ..)...``.
    """
    images = []
    start = 1
    for part in mu:
        block = list(range(start, start + part))
        images.extend(block[1:] + block[:1])
        start += part
    return tuple(images)


def cycle_type(perm: Sequence[int]) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j] - 1
                length += 1
            lengths.append(length)
    return Partition(sorted(lengths, reverse=True))


def _beta_set(lam: Partition, length: int) -> tuple[int, ...]:
    padded = tuple(lam) + (0,) * (length - len(lam))
    return tuple(part + length - 1 - i for i, part in enumerate(padded))


@cache
def _mn_value(beta: tuple[int, ...], mu: tuple[int, ...]) -> int:
    # beta: strictly decreasing bead positions; mu: remaining cycle lengths
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    occupied = set(beta)
    total = 0
    for bead in beta:
        target = bead - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for b in beta if target < b < bead)
        moved = tuple(sorted((b if b != bead else target for b in beta), reverse=True))
        total += (-1) ** height * _mn_value(moved, rest)
    return total


def character_value(lam: Sequence[int], mu: Sequence[int]) -> int:
    """``chi^lam`` at cycle type ``mu`` by the Murnaghan-Nakayama rule."""
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"{lam} and {mu} have different sizes")
    return _mn_value(_beta_set(lam, len(lam)), tuple(mu))


@dataclass(frozen=True)
class ClassFunction:
    """A class function of ``S_m`` stored as values on cycle types."""

    degree: int
    values: Mapping[Partition, Number]

    def __post_init__(self) -> None:
        values = {as_partition(mu): v for mu, v in self.values.items()}
        missing = set(partitions_list(self.degree)) - set(values)
        if missing:
            raise ValueError(f"class function of degree {self.degree} is missing classes {sorted(missing)}")
        object.__setattr__(self, "values", values)

    def __getitem__(self, mu: Sequence[int]) -> Number:
        return self.values[as_partition(mu)]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        _same_degree(self, other)
        return ClassFunction(self.degree, {mu: v + other.values[mu] for mu, v in self.values.items()})

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        _same_degree(self, other)
        return ClassFunction(self.degree, {mu: v - other.values[mu] for mu, v in self.values.items()})

    def __mul__(self, scalar: Number) -> "ClassFunction":
        return ClassFunction(self.degree, {mu: v * scalar for mu, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.degree == other.degree and all(self.values[mu] == other.values[mu] for mu in self.values)

    def __hash__(self) -> int:
        return hash((self.degree, tuple(sorted(self.values.items()))))

    def dimension(self) -> Number:
        return self.values[Partition((1,) * self.degree)]

    def is_integral(self) -> bool:
        return all(Fraction(v).denominator == 1 for v in self.values.values())


def _same_degree(f: ClassFunction, g: ClassFunction) -> None:
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")


def class_function(degree: int, value: Callable[[Partition], Number]) -> ClassFunction:
    return ClassFunction(degree, {mu: value(mu) for mu in partitions_list(degree)})


@cache
def irreducible_character(lam: Partition) -> ClassFunction:
    lam = as_partition(lam)
    m = sum(lam)
    return class_function(m, lambda mu: character_value(lam, mu))


def sign_character(m: int) -> ClassFunction:
    return class_function(m, lambda mu: (-1) ** (m - len(mu)))


def trivial_character(m: int) -> ClassFunction:
    return class_function(m, lambda mu: 1)


def regular_character(m: int) -> ClassFunction:
    return class_function(m, lambda mu: factorial(m) if all(p == 1 for p in mu) else 0)


def zero_character(m: int) -> ClassFunction:
    return class_function(m, lambda mu: 0)


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    _same_degree(f, g)
    total = sum(class_size(mu) * f.values[mu] * g.values[mu] for mu in f.values)
    return Fraction(total, factorial(f.degree))


@dataclass(frozen=True)
class Decomposition:
    """A multiset of irreducibles of ``S_m``, i.e. a map ``lambda -> multiplicity``."""

    degree: int
    multiplicities: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        mults = {}
        for lam, mult in self.multiplicities.items():
            lam = as_partition(lam)
            if sum(lam) != self.degree:
                raise ValueError(f"{lam} is not a partition of {self.degree}")
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {lam}")
            if mult:
                mults[lam] = int(mult)
        object.__setattr__(self, "multiplicities", dict(sorted(mults.items(), reverse=True)))

    @classmethod
    def of(cls, *shapes: Sequence[int] | str) -> "Decomposition":
        """Multiplicity-one decomposition from a list of shapes."""
        shapes = [as_partition(s) for s in shapes]
        degree = sum(shapes[0]) if shapes else 0
        return cls(degree, Counter(shapes))

    def __getitem__(self, lam: Sequence[int]) -> int:
        return self.multiplicities.get(as_partition(lam), 0)

    def __iter__(self):
        return iter(self.multiplicities.items())

    def __len__(self) -> int:
        return len(self.multiplicities)

    def __bool__(self) -> bool:
        return bool(self.multiplicities)

    def __add__(self, other: "Decomposition") -> "Decomposition":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        total = Counter(self.multiplicities)
        total.update(other.multiplicities)
        return Decomposition(self.degree, total)

    def difference(self, other: "Decomposition") -> dict[Partition, int]:
        """Signed componentwise difference ``self - other`` (may be negative)."""
        keys = set(self.multiplicities) | set(other.multiplicities)
        diff = {lam: self[lam] - other[lam] for lam in keys}
        return {lam: d for lam, d in sorted(diff.items(), reverse=True) if d}

    def __le__(self, other: "Decomposition") -> bool:
        return self.degree == other.degree and all(mult <= other[lam] for lam, mult in self)

    def dimension(self) -> int:
        return sum(mult * hook_length_dimension(lam) for lam, mult in self)

    def character(self) -> ClassFunction:
        total = zero_character(self.degree)
        for lam, mult in self:
            total = total + irreducible_character(lam) * mult
        return total

    def column_counts(self) -> set[int]:
        return {lam[0] for lam in self.multiplicities}

    def to_json(self) -> list[dict]:
        return [{"lambda": list(lam), "mult": mult} for lam, mult in self]

    @classmethod
    def from_json(cls, degree: int, items: Iterable[Mapping]) -> "Decomposition":
        return cls(degree, {Partition(item["lambda"]): item["mult"] for item in items})

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def __str__(self) -> str:
        if not self.multiplicities:
            return "0"
        terms = []
        for lam, mult in self:
            terms.append(("" if mult == 1 else f"{mult}*") + lam.compact())
        return " + ".join(terms)


def decompose(f: ClassFunction) -> Decomposition:
    """Multiplicities of the irreducibles in the character ``f``.

    Raises ``NotACharacter`` when some inner product is negative or not an
    integer, which for a trace-computed character signals an upstream bug.
    """
    mults = {}
    for lam in partitions_list(f.degree):
        c = inner_product(f, irreducible_character(lam))
        if c.denominator != 1 or c < 0:
            raise NotACharacter(f"multiplicity of {lam} is {c}")
        if c:
            mults[lam] = int(c)
    return Decomposition(f.degree, mults)


def _splittings(mu: Partition, a: int) -> Iterable[tuple[Partition, Partition]]:
    """Ways to split the multiset of parts of ``mu`` into a partition of ``a`` and the rest."""
    counts = sorted(Counter(mu).items(), reverse=True)

    def rec(i: int, remaining: int, chosen: list[int]) -> Iterable[list[int]]:
        if i == len(counts):
            if remaining == 0:
                yield chosen
            return
        part, mult = counts[i]
        for take in range(min(mult, remaining // part) + 1):
            yield from rec(i + 1, remaining - take * part, chosen + [part] * take)

    for chosen in rec(0, a, []):
        rest = Counter(mu)
        rest.subtract(chosen)
        yield Partition(chosen), Partition(sorted(rest.elements(), reverse=True))


def induction_product_character(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    """Character of ``(F tensor G)`` induced from ``S_a x S_b`` to ``S_{a+b}``."""
    a, b = f.degree, g.degree

    def value(mu: Partition) -> Number:
        total = 0
        for alpha, beta in _splittings(mu, a):
            total += Fraction(z_value(mu), z_value(alpha) * z_value(beta)) * f.values[alpha] * g.values[beta]
        return total.numerator if isinstance(total, Fraction) and total.denominator == 1 else total

    return class_function(a + b, value)


def induction_product(*factors: ClassFunction) -> ClassFunction:
    result = factors[0]
    for factor in factors[1:]:
        result = induction_product_character(result, factor)
    return result


def row_prepend(decomposition: Decomposition, length: int) -> Decomposition:
    """Add a row of the given length on top of every diagram."""
    return Decomposition(
        decomposition.degree + length,
        {Partition((length,) + tuple(lam)): mult for lam, mult in decomposition},
    )


def sgn2_plethysm_sgn(n: int) -> Decomposition:
    """Closed form for ``sgn_2[sgn_n]``: shapes ``2^{n-i} 1^{2i}`` over odd ``i`` in ``1..n``."""
    if n < 1:
        raise ValueError("n must be positive")
    return Decomposition(
        2 * n,
        {Partition((2,) * (n - i) + (1,) * (2 * i)): 1 for i in range(1, n + 1, 2)},
    )


def sgn2_plethysm_sgn_character(n: int) -> ClassFunction:
    """Brute-force character of ``sgn_2[sgn_n]`` from its monomial basis.

    Basis vectors are ``[A],[B]`` for splittings of ``[2n]`` into two
    ``n``-sets, alternating inside each block and under swapping the blocks.
    """
    ground = range(1, 2 * n + 1)
    basis = [frozenset(a) for a in combinations(ground, n) if 1 in a]

    def block_sign(images: list[int]) -> int:
        inversions = sum(1 for i in range(len(images)) for j in range(i + 1, len(images)) if images[i] > images[j])
        return -1 if inversions % 2 else 1

    def trace(perm: tuple[int, ...]) -> int:
        total = 0
        for block in basis:
            first = sorted(block)
            second = sorted(set(ground) - block)
            img_first = [perm[x - 1] for x in first]
            img_second = [perm[x - 1] for x in second]
            if set(img_first) == block:
                total += block_sign(img_first) * block_sign(img_second)
            elif set(img_second) == block:
                total -= block_sign(img_first) * block_sign(img_second)
        return total

    return class_function(2 * n, lambda mu: trace(class_representative(mu)))
