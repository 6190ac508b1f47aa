"""Specht modules by generators and relations, induction products, and ``phi_d``.

A column tabloid is stored as a tuple of columns, each a tuple of entries.
Its canonical form has every column increasing; the sign is the parity of the
column sorts, and a repeated entry inside a column makes the tabloid zero.
Columns are listed left to right, so an ordinary shape ``lam`` uses the
column lengths ``conjugate(lam)``.

Two presentations of ``S^lam`` are provided as quotients of ``M^lam``:

* ``"fulton"``: ``t - sum s`` where ``s`` exchanges an entry of column ``c``
  with the top entry of column ``c + 1``;
* ``"new"``: ``(c - 1) l_c t - sum s`` where ``s`` exchanges an entry of
  column ``c`` with an entry of any earlier column.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from lanke.characters import (
    DEFAULT_MAX_DEGREE,
    Decomposition,
    check_degree,
    character_value,
    cycle_type,
    irreducible_character,
)
from lanke.combinatorics import (
    Partition,
    as_partition,
    concat,
    conjugate,
    content_sum,
    hook_length_dimension,
    is_compatible,
    lr_product,
    remove_first_row,
)
from lanke.module import (
    B,
    DirectSum,
    InvariantSubspace,
    Perm,
    QuotientModule,
    Representation,
    _axpy,
    all_transpositions,
    linear_map_kernel,
)

Columns = tuple[tuple[int, ...], ...]
Combination = dict[Columns, int]
Term = tuple[int, Sequence[Sequence[int]]]

KINDS = ("fulton", "new")


# ---------------------------------------------------------------- tabloids


def canonical_columns(columns: Sequence[Sequence[int]]) -> tuple[int, Columns]:
    """Sort every column; return ``(sign, columns)`` with sign 0 for a repeated entry."""
    sign = 1
    out = []
    for col in columns:
        col = list(col)
        if len(set(col)) != len(col):
            return 0, ()
        # parity of the sorting permutation via inversion count
        inversions = sum(1 for i in range(len(col)) for j in range(i + 1, len(col)) if col[i] > col[j])
        if inversions % 2:
            sign = -sign
        out.append(tuple(sorted(col)))
    return sign, tuple(out)


def relabel_columns(columns: Columns, perm: Perm) -> list[tuple[int, ...]]:
    """Replace entry ``x`` by ``perm(x)``; entries beyond ``len(perm)`` (such as ``b``) stay fixed."""
    m = len(perm)
    return [tuple(perm[x - 1] if x <= m else x for x in col) for col in columns]


def act_columns(perm: Perm, columns: Columns) -> tuple[int, Columns]:
    return canonical_columns(relabel_columns(columns, perm))


def combination(terms: Iterable[Term]) -> Combination:
    """Canonical signed sum of raw ``(coefficient, columns)`` terms."""
    out: Combination = {}
    for coef, cols in terms:
        s, key = canonical_columns(cols)
        if s:
            _axpy(out, 1, {key: s * coef})
    return out


def format_tabloid(columns: Sequence[Sequence[int]]) -> str:
    """Text form ``1,2,3,4|5,6|7``; the letter ``b`` is written ``b``."""
    return "|".join(",".join("b" if x == B else str(x) for x in col) for col in columns)


def parse_tabloid(text: str) -> Columns:
    cols = []
    for part in text.strip().split("|"):
        items = [x.strip() for x in part.split(",") if x.strip()]
        if not items:
            raise ValueError(f"empty column in {text!r}")
        cols.append(tuple(B if x == "b" else int(x) for x in items))
    return tuple(cols)


@dataclass(frozen=True)
class ColumnTabloid:
    """A signed column tabloid in canonical form; ``sign == 0`` is the zero tabloid."""

    columns: Columns
    sign: int = 1

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "ColumnTabloid":
        s, cols = canonical_columns(columns)
        return cls(cols, s)

    @classmethod
    def parse(cls, text: str) -> "ColumnTabloid":
        return cls.from_columns(parse_tabloid(text))

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.columns)

    @property
    def shape(self) -> Partition:
        """The shape, when the column lengths weakly decrease."""
        lengths = self.lengths
        if list(lengths) != sorted(lengths, reverse=True):
            raise ValueError("column lengths do not form a Young diagram")
        return conjugate(lengths)

    def act(self, perm: Perm) -> "ColumnTabloid":
        s, cols = act_columns(perm, self.columns)
        return ColumnTabloid(cols, s * self.sign)

    def __str__(self) -> str:
        text = format_tabloid(self.columns)
        return text if self.sign == 1 else f"{self.sign}*{text}"


def fillings(lengths: Sequence[int], entries: Sequence[int]) -> list[Columns]:
    """All canonical fillings of columns of the given lengths by the multiset ``entries``.

    Fillings with a repeated entry in a column are zero and omitted.
    """
    if sum(lengths) != len(entries):
        raise ValueError("column lengths do not match the number of entries")
    out: list[Columns] = []

    def fill(i: int, remaining: Counter, acc: list[tuple[int, ...]]) -> None:
        if i == len(lengths):
            out.append(tuple(acc))
            return
        available = sorted(x for x, c in remaining.items() if c)
        for col in combinations(available, lengths[i]):
            remaining.subtract(col)
            acc.append(col)
            fill(i + 1, remaining, acc)
            acc.pop()
            remaining.update(col)

    fill(0, Counter(entries), [])
    return out


def tabloid_module(
    lengths: Sequence[int],
    entries: Sequence[int],
    degree: int,
    relations: Callable[[Columns], Iterable[Combination]],
    mode: str = "multimodular",
    max_degree: int | None = DEFAULT_MAX_DEGREE,
) -> QuotientModule:
    """Column tabloids of the given column lengths modulo generated relations.

    ``relations(t)`` is called for every canonical filling ``t`` and yields
    relation vectors keyed by canonical tabloids.
    """
    check_degree(degree, max_degree)
    symbols = fillings(lengths, entries)
    index = {s: i for i, s in enumerate(symbols)}
    rows = {}
    for t in symbols:
        for rel in relations(t):
            vec = {index[k]: v for k, v in rel.items() if v}
            if vec:
                items = sorted(vec.items())
                if items[0][1] < 0:
                    items = [(c, -v) for c, v in items]
                rows[tuple(items)] = vec
    return QuotientModule(degree, symbols, act_columns, rows.values(), mode=mode, max_degree=max_degree)


# ---------------------------------------------------------------- Garnir relations


def _swap(columns: Sequence[Sequence[int]], a: tuple[int, int], b: tuple[int, int]) -> list[list[int]]:
    cols = [list(c) for c in columns]
    (ca, ia), (cb, ib) = a, b
    cols[ca][ia], cols[cb][ib] = cols[cb][ib], cols[ca][ia]
    return cols


def top_swap_terms(t: Sequence[Sequence[int]], source: int, target: int) -> list[Term]:
    """``t - sum s`` over ``s`` exchanging an entry of column ``source`` with the top of column ``target`` (0-based)."""
    terms: list[Term] = [(1, t)]
    for i in range(len(t[source])):
        terms.append((-1, _swap(t, (source, i), (target, 0))))
    return terms


def all_swap_terms(t: Sequence[Sequence[int]], column: int, others: Iterable[int], scale: int) -> list[Term]:
    """``scale t - sum s`` over ``s`` exchanging an entry of ``column`` with any entry of the ``others`` (0-based)."""
    terms: list[Term] = [(scale, t)]
    for o in others:
        for i in range(len(t[column])):
            for j in range(len(t[o])):
                terms.append((-1, _swap(t, (column, i), (o, j))))
    return terms


def garnir_first(t: Sequence[Sequence[int]], c: int) -> Combination:
    """Fulton's relation ``g^t_c`` for columns ``c`` and ``c + 1`` (1-based).

    ``t`` is taken literally: the top entry of column ``c + 1`` is ``t[c][0]``.
    """
    if not 1 <= c < len(t):
        raise ValueError(f"column {c} must lie in 1..{len(t) - 1}")
    return combination(top_swap_terms(t, c - 1, c))


def garnir_new(t: Sequence[Sequence[int]], c: int) -> Combination:
    """The relation ``(c - 1) l_c t - sum s`` with ``s`` swapping column ``c`` into earlier columns (1-based)."""
    if not 2 <= c <= len(t):
        raise ValueError(f"column {c} must lie in 2..{len(t)}")
    return combination(all_swap_terms(t, c - 1, range(c - 1), (c - 1) * len(t[c - 1])))


def with_top(t: Columns, column: int, i: int) -> list[tuple[int, ...]]:
    """``t`` with entry ``i`` of ``column`` moved to the top (other order kept)."""
    cols = list(t)
    col = cols[column]
    cols[column] = (col[i],) + col[:i] + col[i + 1 :]
    return cols


def fulton_relations(t: Columns) -> Iterator[Combination]:
    # the top entry of the next column matters, so every choice of it is used
    for c in range(1, len(t)):
        for i in range(len(t[c])):
            yield garnir_first(with_top(t, c, i), c)


def new_relations(t: Columns) -> Iterator[Combination]:
    for c in range(2, len(t) + 1):
        yield garnir_new(t, c)


_RELATIONS = {"fulton": fulton_relations, "new": new_relations}


# ---------------------------------------------------------------- modules


def m_space(lam: Sequence[int] | str, mode: str = "multimodular") -> QuotientModule:
    """``M^lam``: column tabloids subject only to the column relations."""
    lam = as_partition(lam)
    m = lam.size()
    return tabloid_module(conjugate(lam), range(1, m + 1), m, lambda t: (), mode)


def specht_module(
    lam: Sequence[int] | str, kind: str = "fulton", mode: str = "multimodular", max_degree: int | None = DEFAULT_MAX_DEGREE
) -> QuotientModule:
    """``M^lam`` modulo the Garnir relations of the given kind."""
    if kind not in _RELATIONS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    return _specht(as_partition(lam), kind, mode, max_degree)


@cache
def _specht(lam: Partition, kind: str, mode: str, max_degree: int | None) -> QuotientModule:
    m = lam.size()
    return tabloid_module(conjugate(lam), range(1, m + 1), m, _RELATIONS[kind], mode, max_degree)


def hat_specht(lam: Sequence[int] | str, k: int, mode: str = "multimodular") -> QuotientModule:
    """``S^lam`` with entries ``1..|lam| - k`` and the letter ``b`` repeated ``k`` times.

    The group is ``S_{|lam| - k}``, fixing ``b``.  When ``lam`` has exactly
    ``k`` columns this is isomorphic to ``S^{lam minus its first row}``; with
    fewer columns every tabloid repeats ``b`` in a column and the module is 0.
    """
    lam = as_partition(lam)
    m = lam.size() - k
    if m < 0:
        raise ValueError("more b letters than boxes")
    entries = list(range(1, m + 1)) + [B] * k
    return tabloid_module(conjugate(lam), entries, m, fulton_relations, mode)


def hat_specht_check(lam: Sequence[int] | str, k: int, mode: str = "multimodular") -> bool:
    """Compare the ``b``-letter module with ``S^{lam^-}`` (or with 0 below ``k`` columns)."""
    lam = as_partition(lam)
    hat = hat_specht(lam, k, mode)
    if lam.num_columns < k:
        return hat.dim == 0
    if lam.num_columns > k:
        raise ValueError("the comparison needs at most k columns")
    minus = remove_first_row(lam)
    if hat.dim != hook_length_dimension(minus):
        return False
    return hat.dim == 0 or hat.character() == irreducible_character(minus)


# ---------------------------------------------------------------- induction products


def _rank_map(subset: Sequence[int]) -> dict[int, int]:
    return {x: i for i, x in enumerate(subset, start=1)}


class InducedModule(Representation):
    """The induction product ``A • B`` with an explicit basis.

    Basis vectors are ``(S, i, j)``: ``S`` runs over the ``n1``-subsets of
    ``[n1 + n2]`` in lexicographic order and ``i``, ``j`` over the bases of the
    factors.  ``S`` records which letters the first factor uses; a permutation
    maps ``S`` to ``sigma(S)`` and acts on the factors by the induced
    order-preserving relabelings.
    """

    def __init__(self, left: Representation, right: Representation) -> None:
        self.left, self.right = left, right
        self.n1, self.n2 = left.degree, right.degree
        self.degree = self.n1 + self.n2
        full = set(range(1, self.degree + 1))
        self.subsets = list(combinations(range(1, self.degree + 1), self.n1))
        self.complements = [tuple(sorted(full - set(s))) for s in self.subsets]
        self.subset_index = {s: q for q, s in enumerate(self.subsets)}
        self._cache: dict = {}

    @property
    def dim(self) -> int:
        return len(self.subsets) * self.left.dim * self.right.dim

    def split(self, index: int) -> tuple[int, int, int]:
        q, rest = divmod(index, self.left.dim * self.right.dim)
        i, j = divmod(rest, self.right.dim)
        return q, i, j

    def join(self, q: int, i: int, j: int) -> int:
        return (q * self.left.dim + i) * self.right.dim + j

    def _factor_act(self, which: Representation, perm: Perm, i: int) -> dict[int, Fraction]:
        key = (id(which), perm, i)
        if key not in self._cache:
            self._cache[key] = which.act(perm, i)
        return self._cache[key]

    def _coset_action(self, perm: Perm, q: int) -> tuple[int, Perm, Perm]:
        subset, comp = self.subsets[q], self.complements[q]
        image = tuple(sorted(perm[x - 1] for x in subset))
        image_comp = tuple(sorted(perm[x - 1] for x in comp))
        r1, r2 = _rank_map(image), _rank_map(image_comp)
        tau1 = tuple(r1[perm[x - 1]] for x in subset)
        tau2 = tuple(r2[perm[x - 1]] for x in comp)
        return self.subset_index[image], tau1, tau2

    def act(self, perm: Perm, index: int) -> dict[int, Fraction]:
        q, i, j = self.split(index)
        target, tau1, tau2 = self._coset_action(perm, q)
        a = self._factor_act(self.left, tau1, i)
        b = self._factor_act(self.right, tau2, j)
        return {self.join(target, ii, jj): u * v for ii, u in a.items() for jj, v in b.items()}

    def trace(self, perm: Perm) -> Fraction:
        total = Fraction(0)
        for q in range(len(self.subsets)):
            target, tau1, tau2 = self._coset_action(perm, q)
            if target == q:
                total += self.left.trace(tau1) * self.right.trace(tau2)
        return total

    def factor_class_sum(self, index: int) -> dict[int, Fraction]:
        """Sum of all transpositions of ``S_{n1}`` and of ``S_{n2}`` applied inside the factors.

        This is how the transpositions of the Young subgroup act on the right.
        """
        q, i, j = self.split(index)
        out: dict[int, Fraction] = {}
        for t in all_transpositions(self.n1):
            _axpy(out, 1, {self.join(q, ii, j): v for ii, v in self._factor_act(self.left, t, i).items()})
        for t in all_transpositions(self.n2):
            _axpy(out, 1, {self.join(q, i, jj): v for jj, v in self._factor_act(self.right, t, j).items()})
        return out


def induce(left: Representation, right: Representation) -> InducedModule:
    return InducedModule(left, right)


def cross_operator(module: InducedModule) -> list[dict[int, Fraction]]:
    """Images of the basis under ``sum (i, j)``, ``i <= n1 < j``, acting on the right.

    Uses ``sum_cross = sum_all - sum_{S_n1} - sum_{S_n2}``; the full class sum
    is central, so its left and right actions agree.
    """
    transpositions = all_transpositions(module.degree)
    images = []
    for b in range(module.dim):
        out: dict[int, Fraction] = {}
        for t in transpositions:
            _axpy(out, 1, module.act(t, b))
        _axpy(out, -1, module.factor_class_sum(b))
        images.append(out)
    return images


def phi_images(module: InducedModule, d: int, cross: list[dict[int, Fraction]] | None = None) -> list[dict[int, Fraction]]:
    """Images of the basis under ``phi_d = d n2 I - sum_cross``."""
    cross = cross_operator(module) if cross is None else cross
    images = []
    for b, c in enumerate(cross):
        out = {k: -v for k, v in c.items()}
        _axpy(out, 1, {b: Fraction(d * module.n2)})
        images.append(out)
    return images


def phi_kernel(module: InducedModule, d: int, mode: str = "multimodular", cross=None) -> InvariantSubspace:
    return linear_map_kernel(module, phi_images(module, d, cross), mode)


def phi_scalar(lam: Sequence[int], lam1: Sequence[int], lam2: Sequence[int], d: int) -> int:
    """The scalar by which ``phi_d`` acts on the ``lam``-isotypic part of ``S^lam1 • S^lam2``."""
    return d * sum(as_partition(lam2)) - content_sum(lam) + content_sum(lam1) + content_sum(lam2)


def expected_kernel(lam1: Sequence[int], lam2: Sequence[int], d: int) -> Decomposition:
    lam1, lam2 = as_partition(lam1), as_partition(lam2)
    n = lam1.size() + lam2.size()
    if is_compatible(lam1, lam2) and lam1.num_columns == d:
        return Decomposition.of(concat(lam1, lam2))
    return Decomposition(n, {})


@dataclass
class KernelCase:
    """Outcome of one ``phi_d`` kernel computation."""

    lam1: Partition
    lam2: Partition
    d: int
    kernel: Decomposition
    expected: Decomposition
    scalars: dict[Partition, int]

    @property
    def ok(self) -> bool:
        return self.kernel == self.expected and all(a >= 0 for a in self.scalars.values())


@cache
def _specht_product(lam1: Partition, lam2: Partition, mode: str) -> tuple[InducedModule, list]:
    module = InducedModule(specht_module(lam1, mode=mode), specht_module(lam2, mode=mode))
    return module, cross_operator(module)


def phi_kernel_case(lam1: Sequence[int], lam2: Sequence[int], d: int, mode: str = "multimodular") -> KernelCase:
    """Kernel of ``phi_d`` on ``S^lam1 • S^lam2`` together with the predicted answer."""
    lam1, lam2 = as_partition(lam1), as_partition(lam2)
    if d < lam1.num_columns:
        raise ValueError(f"d = {d} is below the {lam1.num_columns} columns of {lam1}")
    module, cross = _specht_product(lam1, lam2, mode)
    kernel = phi_kernel(module, d, mode, cross)
    scalars = {lam: phi_scalar(lam, lam1, lam2, d) for lam in lr_product(lam1, lam2)}
    return KernelCase(lam1, lam2, d, kernel.decomposition(), expected_kernel(lam1, lam2, d), scalars)


def direct_sum_kernel(
    shapes1: Sequence[Sequence[int]], lam2: Sequence[int], d: int, mode: str = "multimodular"
) -> tuple[Decomposition, Decomposition]:
    """``ker phi_d`` on ``(sum_i S^{shapes1[i]}) • S^lam2`` and the predicted decomposition."""
    shapes1 = [as_partition(s) for s in shapes1]
    lam2 = as_partition(lam2)
    if d < max(s.num_columns for s in shapes1):
        raise ValueError("d is below the column count of a summand")
    left = DirectSum(*(specht_module(s, mode=mode) for s in shapes1))
    module = InducedModule(left, specht_module(lam2, mode=mode))
    kernel = phi_kernel(module, d, mode).decomposition()
    expected = Decomposition(module.degree, {})
    for s in shapes1:
        expected = expected + expected_kernel(s, lam2, d)
    return kernel, expected


def isotypic_projection(rep: Representation, lam: Sequence[int], vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
    """``(dim lam / m!) sum_g chi^lam(g) g . vec`` by summing over the whole group."""
    lam = as_partition(lam)
    m = rep.degree
    out: dict[int, Fraction] = {}
    for perm in permutations(range(1, m + 1)):
        chi = character_value(lam, cycle_type(perm))
        if chi:
            _axpy(out, chi, rep.apply(perm, vec))
    scale = Fraction(hook_length_dimension(lam), factorial(m))
    return {k: v * scale for k, v in out.items()}


def check_phi_scalars(lam1: Sequence[int], lam2: Sequence[int], d: int, mode: str = "multimodular") -> dict[Partition, bool]:
    """Apply ``phi_d`` to isotypic projections and compare with the closed-form scalar.

    Returns, for each constituent ``lam``, whether ``phi_d P v = a_lam P v``
    on a basis vector ``v`` with nonzero projection.
    """
    lam1, lam2 = as_partition(lam1), as_partition(lam2)
    module, cross = _specht_product(lam1, lam2, mode)
    images = phi_images(module, d, cross)
    out = {}
    for lam in lr_product(lam1, lam2):
        a = phi_scalar(lam, lam1, lam2, d)
        for b in range(module.dim):
            p = isotypic_projection(module, lam, {b: Fraction(1)})
            if p:
                break
        image: dict[int, Fraction] = {}
        for k, v in p.items():
            _axpy(image, v, images[k])
        out[lam] = image == {k: a * v for k, v in p.items() if a}
    return out


# ---------------------------------------------------------------- positional cross-check


def positional_phi(lengths1: Sequence[int], lengths2: Sequence[int], d: int, mode: str = "multimodular") -> tuple[QuotientModule, list]:
    """``phi_d`` on ``M^{lengths1} • M^{lengths2}`` realized on tabloids, with positions swapped directly.

    The tabloids have columns ``lengths1 + lengths2``; the first block holds
    positions ``1..n1``.  Returns the tabloid module and the images of its basis.
    """
    lengths = list(lengths1) + list(lengths2)
    n = sum(lengths)
    n2 = sum(lengths2)
    module = tabloid_module(lengths, range(1, n + 1), n, lambda t: (), mode)
    first = [(c, i) for c in range(len(lengths1)) for i in range(lengths[c])]
    second = [(c, i) for c in range(len(lengths1), len(lengths)) for i in range(lengths[c])]
    images = []
    for t in module.symbols:
        terms: list[Term] = [(d * n2, t)]
        terms += [(-1, _swap(t, a, b)) for a in first for b in second]
        images.append({module.index[k]: Fraction(v) for k, v in combination(terms).items()})
    return module, images


def positional_phi_kernel(lengths1: Sequence[int], lengths2: Sequence[int], d: int, mode: str = "multimodular") -> Decomposition:
    module, images = positional_phi(lengths1, lengths2, d, mode)
    return linear_map_kernel(module, images, mode).decomposition()


def m_space_dimension(lam: Sequence[int]) -> int:
    """Multinomial ``m! / prod (column length)!``."""
    lam = as_partition(lam)
    out = factorial(lam.size())
    for c in conjugate(lam):
        out //= factorial(c)
    return out


def induced_dimension(left: Representation, right: Representation) -> int:
    return comb(left.degree + right.degree, left.degree) * left.dim * right.dim
