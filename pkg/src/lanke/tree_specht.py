"""Tree Specht modules of the first and second kind, and the bridge from bracket shapes.

A plane rooted tree is a nested tuple of its children, so a single node is
``()``.  Nodes are numbered in preorder and a ``T``-partition ``mu`` is the
tuple of node values in that order; values weakly increase from a node to
its children.  A ``mu``-tableau stores one column per node, in preorder, so
the tabloid machinery of ``lanke.specht`` applies unchanged.

For a path the root is the last column of a Young diagram and each child sits
immediately to the left of its parent.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterator, Sequence

from lanke.characters import DEFAULT_MAX_DEGREE, Decomposition, decompose
from lanke.combinatorics import Partition, conjugate
from lanke.filippov import (
    Shape,
    build_rho,
    internal_count,
    is_increasing,
    lex_lower_span,
    shape_quotient_character,
)
from lanke.module import QuotientModule, _axpy
from lanke.specht import (
    Columns,
    Combination,
    all_swap_terms,
    canonical_columns,
    combination,
    fillings,
    format_tabloid,
    tabloid_module,
    top_swap_terms,
    with_top,
)

PlaneTree = tuple
KINDS = ("first", "second")


# ---------------------------------------------------------------- trees


def preorder(tree: PlaneTree) -> list[tuple[PlaneTree, int]]:
    """``(subtree, parent index)`` for every node in preorder; the root has parent -1."""
    out: list[tuple[PlaneTree, int]] = []

    def walk(node: PlaneTree, parent: int) -> None:
        me = len(out)
        out.append((node, parent))
        for child in node:
            walk(child, me)

    walk(tree, -1)
    return out


def parents(tree: PlaneTree) -> list[int]:
    return [p for _, p in preorder(tree)]


def size(tree: PlaneTree) -> int:
    return 1 + sum(size(c) for c in tree)


def descendants(tree: PlaneTree) -> list[list[int]]:
    """Preorder indices of the proper descendants of every node."""
    nodes = preorder(tree)
    # in preorder the descendants of node a are the next size(a) - 1 nodes
    return [list(range(a + 1, a + size(node))) for a, (node, _) in enumerate(nodes)]


def is_path(tree: PlaneTree) -> bool:
    return len(tree) == 0 or (len(tree) == 1 and is_path(tree[0]))


def path(length: int) -> PlaneTree:
    tree: PlaneTree = ()
    for _ in range(length - 1):
        tree = (tree,)
    return tree


@cache
def plane_trees(nodes: int) -> tuple[PlaneTree, ...]:
    """All plane rooted trees with the given number of nodes."""
    if nodes < 1:
        return ()
    return tuple((*forest,) for forest in _forests(nodes - 1))


def _forests(nodes: int) -> Iterator[tuple[PlaneTree, ...]]:
    if nodes == 0:
        yield ()
        return
    for first in range(1, nodes + 1):
        for head in plane_trees(first):
            for rest in _forests(nodes - first):
                yield (head, *rest)


# ---------------------------------------------------------------- T-partitions


@dataclass(frozen=True)
class TPartition:
    """Positive node values in preorder, weakly increasing from parent to child."""

    tree: PlaneTree
    mu: tuple[int, ...]

    def __post_init__(self) -> None:
        par = parents(self.tree)
        if len(self.mu) != len(par):
            raise ValueError("one value per node is required")
        if any(v < 1 for v in self.mu):
            raise ValueError("values must be positive")
        if any(p >= 0 and self.mu[p] > self.mu[a] for a, p in enumerate(par)):
            raise ValueError("values must weakly increase from parent to child")

    @property
    def total(self) -> int:
        return sum(self.mu)

    def __str__(self) -> str:
        return format_tree(self.tree, self.mu)


def t_partitions(tree: PlaneTree, total: int) -> Iterator[TPartition]:
    """All ``T``-partitions of ``total``, in lexicographic order of the value tuples."""
    par = parents(tree)
    count = len(par)
    values = [0] * count

    def assign(a: int, remaining: int) -> Iterator[TPartition]:
        if a == count:
            if remaining == 0:
                yield TPartition(tree, tuple(values))
            return
        low = values[par[a]] if par[a] >= 0 else 1
        for v in range(low, remaining - (count - a - 1) + 1):
            values[a] = v
            yield from assign(a + 1, remaining - v)

    yield from assign(0, total)


_TOKEN = re.compile(r"\s*(\(|\)|\d+)")


def format_tree(tree: PlaneTree, mu: Sequence[int]) -> str:
    """Nested text form, e.g. ``(2 (2) (3 (4)))``."""
    it = iter(mu)

    def walk(node: PlaneTree) -> str:
        head = str(next(it))
        parts = [walk(c) for c in node]
        return "(" + " ".join([head, *parts]) + ")"

    return walk(tree)


def parse_tree(text: str) -> TPartition:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"unexpected character at {pos} in {text!r}")
        tokens.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    values: list[int] = []
    i = 0

    def node() -> PlaneTree:
        nonlocal i
        if i + 1 >= len(tokens) or tokens[i] != "(" or not tokens[i + 1].isdigit():
            raise ValueError(f"malformed tree {text!r}")
        values.append(int(tokens[i + 1]))
        i += 2
        children = []
        while i < len(tokens) and tokens[i] == "(":
            children.append(node())
        if i >= len(tokens) or tokens[i] != ")":
            raise ValueError(f"malformed tree {text!r}")
        i += 1
        return tuple(children)

    tree = node()
    if i != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return TPartition(tree, tuple(values))


# ---------------------------------------------------------------- tableaux and relations


@dataclass(frozen=True)
class MuTableau:
    """A signed ``mu``-tabloid: one increasing column per node, in preorder."""

    shape: TPartition
    columns: Columns
    sign: int = 1

    @classmethod
    def from_columns(cls, shape: TPartition, columns: Sequence[Sequence[int]]) -> "MuTableau":
        if tuple(len(c) for c in columns) != shape.mu:
            raise ValueError("column lengths must equal the node values")
        entries = sorted(x for c in columns for x in c)
        if entries != list(range(1, shape.total + 1)):
            raise ValueError("entries must be 1..N, each once")
        s, cols = canonical_columns(columns)
        return cls(shape, cols, s)

    def __str__(self) -> str:
        text = format_tabloid(self.columns)
        return text if self.sign == 1 else f"{self.sign}*{text}"


def tree_garnir_first(tree: PlaneTree, t: Sequence[Sequence[int]], a: int) -> Combination:
    """``t - sum s``: an entry of ``Col(a)`` exchanged with the top entry of the parent column."""
    parent = parents(tree)[a]
    if parent < 0:
        raise ValueError("the root has no first-kind relation")
    return combination(top_swap_terms(t, a, parent))


def tree_garnir_second(tree: PlaneTree, t: Sequence[Sequence[int]], a: int) -> Combination:
    """``|D_a| mu(a) t - sum s``: an entry of ``Col(a)`` exchanged with any entry of a descendant column."""
    below = descendants(tree)[a]
    if not below:
        raise ValueError("a leaf has no second-kind relation")
    return combination(all_swap_terms(t, a, below, len(below) * len(t[a])))


def root_split_relation(tree: PlaneTree, t: Sequence[Sequence[int]], i: int) -> Combination:
    """The part of the root relation that only swaps with the ``i``-th child subtree."""
    nodes = preorder(tree)
    children = [a for a, (_, p) in enumerate(nodes) if p == 0]
    start = children[i]
    block = list(range(start, start + size(nodes[start][0])))
    return combination(all_swap_terms(t, 0, block, len(block) * len(t[0])))


def _first_relations(tree: PlaneTree):
    par = parents(tree)

    def relations(t: Columns):
        for a, p in enumerate(par):
            if p < 0:
                continue
            # every choice of the parent's top entry
            for i in range(len(t[p])):
                yield tree_garnir_first(tree, with_top(t, p, i), a)

    return relations


def _second_relations(tree: PlaneTree):
    internal = [a for a, below in enumerate(descendants(tree)) if below]

    def relations(t: Columns):
        for a in internal:
            yield tree_garnir_second(tree, t, a)

    return relations


def tabloid_space(shape: TPartition) -> list[Columns]:
    return fillings(shape.mu, range(1, shape.total + 1))


def tree_specht(
    tree: PlaneTree, mu: Sequence[int], kind: str = "first", mode: str = "multimodular",
    max_degree: int | None = DEFAULT_MAX_DEGREE,
) -> QuotientModule:
    """``M^{T,mu}`` modulo the tree Garnir relations of the given kind."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    shape = TPartition(tree, tuple(mu))
    return _tree_specht(shape, kind, mode, max_degree)


@cache
def _tree_specht(shape: TPartition, kind: str, mode: str, max_degree: int | None) -> QuotientModule:
    relations = _first_relations(shape.tree) if kind == "first" else _second_relations(shape.tree)
    n = shape.total
    return tabloid_module(shape.mu, range(1, n + 1), n, relations, mode, max_degree)


def tree_specht_decomposition(tree: PlaneTree, mu: Sequence[int], kind: str = "first", mode: str = "multimodular") -> Decomposition:
    return tree_specht(tree, mu, kind, mode).decomposition()


def path_shape(mu: Sequence[int]) -> Partition:
    """The ordinary shape of a path ``T``-partition: the conjugate of ``mu`` sorted decreasingly."""
    return conjugate(sorted(mu, reverse=True))


def last_column_length(lam: Sequence[int]) -> int:
    return conjugate(lam)[-1]


def second_kind_columns_ok(tree: PlaneTree, mu: Sequence[int], mode: str = "multimodular") -> bool:
    """Every irreducible of the second-kind module has ``|T|`` columns and last column ``mu(root)``."""
    dec = tree_specht_decomposition(tree, mu, "second", mode)
    nodes = size(tree)
    return all(lam.num_columns == nodes and last_column_length(lam) == mu[0] for lam, _ in dec)


@dataclass
class EmbedResult:
    shape: TPartition
    first: Decomposition
    second: Decomposition

    @property
    def contained(self) -> bool:
        return self.first <= self.second

    @property
    def strict(self) -> bool:
        return self.contained and self.first != self.second

    @property
    def ok(self) -> bool:
        if not self.contained:
            return False
        return not is_path(self.shape.tree) or self.first == self.second


def embed_check(tree: PlaneTree, mu: Sequence[int], mode: str = "multimodular") -> EmbedResult:
    """Compare the two kinds: first is contained in second, with equality on paths."""
    shape = TPartition(tree, tuple(mu))
    return EmbedResult(
        shape,
        tree_specht_decomposition(tree, mu, "first", mode),
        tree_specht_decomposition(tree, mu, "second", mode),
    )


# ---------------------------------------------------------------- bracket shapes


def _internal(node) -> bool:
    return isinstance(node, tuple)


def prune(shape: Shape) -> tuple[PlaneTree, tuple[int, ...]]:
    """Remove the leaves; return the pruned tree and the leaf-children counts in preorder."""
    if not _internal(shape):
        raise ValueError("a single leaf has nothing to prune")
    counts: list[int] = []

    def walk(node) -> PlaneTree:
        counts.append(sum(1 for c in node if not _internal(c)))
        return tuple(walk(c) for c in node if _internal(c))

    tree = walk(shape)
    return tree, tuple(counts)


def bridge_word(shape: Shape, columns: Sequence[Sequence[int]]):
    """Label the ``i``-th leaf child of each internal node by the ``i``-th entry of its column."""
    it = iter(columns)

    def walk(node):
        col = iter(next(it))
        # preorder of the pruned tree matches the order in which internal nodes are entered
        out = []
        for c in node:
            out.append(walk(c) if _internal(c) else next(col))
        return tuple(out)

    return walk(shape)


@dataclass
class BridgeResult:
    """The pruned tree of an increasing shape and the comparison of the two modules."""

    tree: PlaneTree
    mu: tuple[int, ...]
    quotient: Decomposition
    tree_module: Decomposition
    relations_in_lower: bool

    @property
    def contained(self) -> bool:
        return self.quotient <= self.tree_module

    @property
    def ok(self) -> bool:
        return self.relations_in_lower and self.contained


def prune_and_bridge(n: int, k: int, shape: Shape, mode: str = "multimodular") -> BridgeResult:
    """Relate ``rho_T / (rho_T ∩ rho_{D(T)})`` to the first-kind module of the pruned tree.

    Checks that every first-kind relation maps into ``rho_{D(T)}`` under the
    leaf labeling map and that the quotient is contained in the tree module.
    """
    if internal_count(shape) != k:
        raise ValueError("shape does not have k internal nodes")
    if not is_increasing(shape):
        raise ValueError("shape is not increasing")
    tree, mu = prune(shape)
    if min(mu) < 1:
        raise ValueError("every internal node needs a leaf child")
    model = build_rho(n, k, mode)
    lower = lex_lower_span(n, k, shape, mode)

    def coords(columns) -> dict[int, Fraction]:
        return {c: Fraction(v) for c, v in model.coordinates(bridge_word(shape, columns)).items()}

    in_lower = True
    relations = _first_relations(tree)
    for t in tabloid_space(TPartition(tree, mu)):
        for rel in relations(t):
            vec: dict[int, Fraction] = {}
            for cols, coef in rel.items():
                _axpy(vec, coef, coords(cols))
            if vec and not lower.contains(vec):
                in_lower = False
                break
        if not in_lower:
            break
    quotient = decompose(shape_quotient_character(n, k, shape, mode))
    return BridgeResult(tree, mu, quotient, tree_specht_decomposition(tree, mu, "first", mode), in_lower)

