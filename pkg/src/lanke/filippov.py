"""Bracketed words of the free Filippov n-algebra and the modules they span.

A word is a nested tuple: a leaf is a positive integer label and an internal
node is a tuple of exactly ``n`` children.  Canonical words have the children
of every node sorted by ``(shape signature, minimal label)``.  The shape
signature of a leaf is ``(1,)`` and of a node ``(0,) + child signatures``, so
internal children come first.  A comb is a word in which every node has at
most one internal child; canonically it reads ``[[..[[a..],b..]..],z..]``.

Repeated labels are allowed for the variant with a distinguished letter
``b`` (see ``B``); two equal sibling subtrees make a word vanish.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import comb, factorial
from typing import Iterable, Iterator, Mapping, Sequence

from lanke.characters import (
    DEFAULT_MAX_DEGREE,
    ClassFunction,
    Decomposition,
    check_degree,
    decompose,
    row_prepend,
    trivial_character,
)
from lanke.errors import StructuralError
from lanke.module import B, Perm, QuotientModule, QuotientSpan, intersection_character

Word = int | tuple
Shape = None | tuple
Combination = dict[Word, int]


# ---------------------------------------------------------------- shapes


def shape_of(word: Word) -> Shape:
    if isinstance(word, int):
        return None
    return tuple(shape_of(c) for c in word)


def internal_count(tree) -> int:
    if tree is None or isinstance(tree, int):
        return 0
    return 1 + sum(internal_count(c) for c in tree)


def leaf_count(tree) -> int:
    if tree is None or isinstance(tree, int):
        return 1
    return sum(leaf_count(c) for c in tree)


def enumerate_shapes(n: int, k: int) -> list[Shape]:
    """All plane rooted ``n``-ary trees with ``k`` internal nodes."""
    if n < 2 or k < 0:
        raise ValueError("need n >= 2 and k >= 0")
    return list(_shapes(n, k))


@cache
def _shapes(n: int, k: int) -> tuple[Shape, ...]:
    if k == 0:
        return (None,)
    out = []
    for split in _compositions(k - 1, n):
        for children in itertools.product(*(_shapes(n, part) for part in split)):
            out.append(tuple(children))
    return tuple(out)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def fuss_catalan(n: int, k: int) -> int:
    return comb(n * k, k) // (k * (n - 1) + 1)


def comb_shape(n: int, k: int) -> Shape:
    shape: Shape = None
    for layer in range(k):
        shape = (shape,) + (None,) * (n - 1) if layer else (None,) * n
    return shape


def depth_vector(tree) -> tuple[int, ...]:
    """Number of leaves at each depth ``1..depth``."""
    counts: dict[int, int] = {}

    def walk(node, depth: int) -> None:
        if node is None or isinstance(node, int):
            counts[depth] = counts.get(depth, 0) + 1
            return
        for child in node:
            walk(child, depth + 1)

    if tree is None or isinstance(tree, int):
        return ()
    walk(tree, 0)
    return tuple(counts.get(d, 0) for d in range(1, max(counts) + 1))


def subtree(tree, path: Sequence[int]):
    for i in path:
        tree = tree[i]
    return tree


def mu(tree, path: Sequence[int] = ()) -> int:
    """Number of leaf children of the internal node at ``path``."""
    node = subtree(tree, path)
    if node is None or isinstance(node, int):
        raise ValueError("mu is defined on internal nodes")
    return sum(1 for c in node if c is None or isinstance(c, int))


def internal_paths(tree, path: tuple[int, ...] = ()) -> Iterator[tuple[int, ...]]:
    if tree is None or isinstance(tree, int):
        return
    yield path
    for i, child in enumerate(tree):
        yield from internal_paths(child, path + (i,))


def is_increasing(tree) -> bool:
    """Leaf-children counts weakly increase from each internal node to its internal children."""
    for path in internal_paths(tree):
        node = subtree(tree, path)
        for i, child in enumerate(node):
            if isinstance(child, tuple) and mu(tree, path) > mu(tree, path + (i,)):
                return False
    return True


def is_comb(tree) -> bool:
    if tree is None or isinstance(tree, int):
        return True
    internal = [c for c in tree if isinstance(c, tuple)]
    return len(internal) <= 1 and all(is_comb(c) for c in internal)


# ---------------------------------------------------------------- words


def signature(word) -> tuple:
    if word is None or isinstance(word, int):
        return (1,)
    return (0,) + tuple(signature(c) for c in word)


def min_label(word: Word) -> int:
    return word if isinstance(word, int) else min(min_label(c) for c in word)


def permutation_sign(order: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(order)
    for i in range(len(order)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = order[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def canonicalize(word: Word) -> tuple[int, Word]:
    """Signed canonical form ``(sign, word)``; sign 0 means the word vanishes."""
    sign, out, _ = _canon(word)
    return sign, (out if sign else word)


def _canon(word: Word) -> tuple[int, Word, tuple]:
    # returns (sign, canonical word, sort key)
    if isinstance(word, int):
        return 1, word, ((1,), word)
    sign = 1
    items = []
    for child in word:
        s, c, key = _canon(child)
        if s == 0:
            return 0, word, ()
        sign *= s
        items.append((key, c))
    order = sorted(range(len(items)), key=lambda i: items[i][0])
    for a, b in zip(order, order[1:]):
        if items[a][0] == items[b][0]:
            if items[a][1] == items[b][1]:
                return 0, word, ()
            raise StructuralError(f"ambiguous canonical key in {word!r}")
    children = tuple(items[i][1] for i in order)
    key = ((0,) + tuple(items[i][0][0] for i in order), min(k[1] for k, _ in items))
    return sign * permutation_sign(order), children, key


def relabel(word: Word, perm: Perm) -> Word:
    """Apply ``perm`` to every label it covers; other labels (such as ``B``) are fixed."""
    if isinstance(word, int):
        return perm[word - 1] if word <= len(perm) else word
    return tuple(relabel(c, perm) for c in word)


def act_word(perm: Perm, word: Word) -> tuple[int, Word]:
    return canonicalize(relabel(word, perm))


def labels(word: Word) -> list[int]:
    if isinstance(word, int):
        return [word]
    return [x for c in word for x in labels(c)]


def format_word(word: Word) -> str:
    if isinstance(word, int):
        return "b" if word == B else str(word)
    return "[" + ",".join(format_word(c) for c in word) + "]"


def format_shape(shape: Shape) -> str:
    if shape is None:
        return "*"
    return "[" + ",".join(format_shape(c) for c in shape) + "]"


_TOKEN = re.compile(r"\s*(\[|\]|,|\*|b|\d+)")


def _parse(text: str, leaf):
    tokens = _TOKEN.findall(text)
    if "".join(tokens) != re.sub(r"\s+", "", text):
        raise ValueError(f"cannot parse {text!r}")
    pos = 0

    def node():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        if tok == "[":
            children = [node()]
            while tokens[pos] == ",":
                pos += 1
                children.append(node())
            if tokens[pos] != "]":
                raise ValueError(f"expected ] in {text!r}")
            pos += 1
            return tuple(children)
        return leaf(tok)

    result = node()
    if pos != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return result


def parse_word(text: str) -> Word:
    """Parse ``[[1,2,3],[4,5,6],7,8,9]``; the letter ``b`` stands for ``B``."""

    def leaf(tok):
        if tok == "b":
            return B
        if tok == "*":
            raise ValueError("shapes use '*', words need labels")
        return int(tok)

    return _parse(text, leaf)


def parse_shape(text: str) -> Shape:
    def leaf(tok):
        if tok != "*":
            raise ValueError("shape leaves are written '*'")
        return None

    return _parse(text, leaf)


def fill_shape(shape: Shape, letters: Sequence[int]) -> Word:
    """Label the leaves of ``shape`` left to right."""
    it = iter(letters)

    def walk(node):
        if node is None:
            return next(it)
        return tuple(walk(c) for c in node)

    return walk(shape)


# ---------------------------------------------------------------- enumeration


def degree(n: int, k: int) -> int:
    return k * (n - 1) + 1


def canonical_words(n: int, letters: Sequence[int]) -> list[Word]:
    """All nonzero canonical words on the multiset ``letters``, each once."""
    return sorted(_words(n, tuple(sorted(letters))), key=_word_order)


def _word_order(word: Word):
    return (signature(word), labels(word))


@cache
def _words(n: int, letters: tuple[int, ...]) -> frozenset:
    if len(letters) == 1:
        return frozenset(letters)
    if (len(letters) - 1) % (n - 1):
        return frozenset()
    out = set()
    for blocks in _block_splits(n, letters):
        for children in itertools.product(*(_words(n, b) for b in blocks)):
            s, w = canonicalize(children)
            if s:
                out.add(w)
    return frozenset(out)


def _block_splits(n: int, letters: tuple[int, ...]) -> Iterator[list[tuple[int, ...]]]:
    """Split into ``n`` blocks of sizes 1 mod ``n - 1``; the first block holds ``letters[0]``."""

    def rec(rest: tuple[int, ...], blocks: list) -> Iterator[list]:
        if not rest:
            if len(blocks) == n:
                yield list(blocks)
            return
        if len(blocks) >= n:
            return
        head, others = rest[0], rest[1:]
        seen = set()
        for r in range(0, len(others) + 1, n - 1):
            for idx in itertools.combinations(range(len(others)), r):
                block = (head,) + tuple(others[i] for i in idx)
                if block in seen:
                    continue
                seen.add(block)
                left = tuple(x for i, x in enumerate(others) if i not in idx)
                yield from rec(left, blocks + [block])

    yield from rec(letters, [])


def comb_words(n: int, letters: Sequence[int]) -> list[Word]:
    return [w for w in canonical_words(n, letters) if is_comb(w)]


def comb_layers(word: Word) -> tuple[tuple[int, ...], ...]:
    """Leaf labels of a comb by layer, outermost first."""
    out = []
    while isinstance(word, tuple):
        out.append(tuple(c for c in word if isinstance(c, int)))
        inner = [c for c in word if isinstance(c, tuple)]
        if not inner:
            break
        word = inner[0]
    return tuple(out)


# ---------------------------------------------------------------- relations


def _add(acc: Combination, vec: Mapping[Word, int], coef: int) -> None:
    for w, v in vec.items():
        x = acc.get(w, 0) + coef * v
        if x:
            acc[w] = x
        else:
            acc.pop(w, None)


def _replace(word: Word, path: Sequence[int], new: Word) -> Word:
    if not path:
        return new
    children = list(word)
    children[path[0]] = _replace(word[path[0]], path[1:], new)
    return tuple(children)


def _signed_sum(terms: Iterable[tuple[int, Word]]) -> Combination:
    out: Combination = {}
    for coef, w in terms:
        s, c = canonicalize(w)
        if s:
            _add(out, {c: 1}, coef * s)
    return out


def jacobi_relations(word: Word, form: str = "alternative") -> Iterator[Combination]:
    """Jacobi relations applied at every node of ``word`` that has an internal child.

    ``form="classical"`` gives ``[[x..], y..] - sum_i [x.., [x_i, y..], ..]``.
    ``form="alternative"`` gives, for each choice of ``y1`` among the siblings,
    ``[[x..], y1, y..] - sum_i [[x.., y1 (at i), ..], x_i, y..]``.
    Each combination is over canonical words and vanishes in the algebra.
    """
    if form not in ("classical", "alternative"):
        raise ValueError(f"unknown form {form!r}")
    for path in internal_paths(word):
        node = subtree(word, path)
        for bi, b in enumerate(node):
            if isinstance(b, int):
                continue
            others = [c for j, c in enumerate(node) if j != bi]
            if form == "classical":
                terms = [(1, (b,) + tuple(others))]
                for i in range(len(b)):
                    inner = list(b)
                    inner[i] = (b[i],) + tuple(others)
                    terms.append((-1, tuple(inner)))
                rel = _signed_sum((c, _replace(word, path, t)) for c, t in terms)
                if rel:
                    yield rel
                continue
            for yi, y1 in enumerate(others):
                ys = tuple(others[:yi] + others[yi + 1 :])
                terms = [(1, (b, y1) + ys)]
                for i in range(len(b)):
                    inner = list(b)
                    xi = inner[i]
                    inner[i] = y1
                    terms.append((-1, (tuple(inner), xi) + ys))
                rel = _signed_sum((c, _replace(word, path, t)) for c, t in terms)
                if rel:
                    yield rel


class CombRewriter:
    """Rewrites canonical words as combinations of combs using Jacobi relations.

    A node with one internal child is handled by rewriting that child.  A node
    with several internal children moves one of them, ``w1``, to the front and
    applies the alternative Jacobi identity with ``y1`` the internal child of
    most brackets; every resulting term has fewer internal children at that
    node or deeper nesting, so the recursion terminates.
    """

    def __init__(self) -> None:
        self.memo: dict[Word, Combination] = {}

    def __call__(self, word: Word) -> Combination:
        return self.rewrite(word)

    def rewrite(self, word: Word) -> Combination:
        if isinstance(word, int):
            return {word: 1}
        hit = self.memo.get(word)
        if hit is not None:
            return hit
        internal = [i for i, c in enumerate(word) if isinstance(c, tuple)]
        res: Combination = {}
        if not internal:
            res = {word: 1}
        elif len(internal) == 1:
            i0 = internal[0]
            rest = tuple(c for i, c in enumerate(word) if i != i0)
            sign0 = -1 if i0 % 2 else 1
            for c, v in self.rewrite(word[i0]).items():
                s, cw = canonicalize((c,) + rest)
                if s:
                    _add(res, {cw: 1}, sign0 * s * v)
        else:
            i2 = max(internal, key=lambda i: internal_count(word[i]))
            i1 = next(i for i in internal if i != i2)
            order = [i1, i2] + [i for i in range(len(word)) if i not in (i1, i2)]
            s0 = permutation_sign(order)
            w1, w2 = word[i1], word[i2]
            rest = tuple(word[i] for i in order[2:])
            for i in range(len(w1)):
                inner = list(w1)
                ui = inner[i]
                inner[i] = w2
                s, tw = canonicalize((tuple(inner), ui) + rest)
                if s:
                    _add(res, self.rewrite(tw), s0 * s)
        self.memo[word] = res
        return res

    def rewrite_combination(self, vec: Mapping[Word, int]) -> Combination:
        out: Combination = {}
        for w, v in vec.items():
            _add(out, self.rewrite(w), v)
        return out


def comb_rewrite(word: Word) -> Combination:
    s, w = canonicalize(word)
    if s == 0:
        return {}
    return {c: s * v for c, v in CombRewriter().rewrite(w).items()}


# ---------------------------------------------------------------- modules


@dataclass
class FilippovModel:
    """``rho`` for one ``(n, k)`` or its ``b``-letter variant, in comb coordinates."""

    n: int
    k: int
    letters: tuple[int, ...]
    module: QuotientModule
    words: list[Word]
    rewriter: CombRewriter
    relation_count: int

    @property
    def group_degree(self) -> int:
        return self.module.degree

    @property
    def dim(self) -> int:
        return self.module.dim

    def summary(self) -> dict:
        return {"n": self.n, "k": self.k, **self.module.summary()}

    def coordinates(self, word: Word) -> dict[int, int]:
        """Ambient (comb) coordinates of any word."""
        s, w = canonicalize(word)
        if s == 0:
            return {}
        index = self.module.index
        return {index[c]: s * v for c, v in self.rewriter.rewrite(w).items()}

    def word_span(self, words: Iterable[Word]) -> QuotientSpan:
        return self.module.span(self.coordinates(w) for w in words)

    def words_of_shape(self, shape: Shape) -> list[Word]:
        sig = signature(canonical_shape(shape))
        return [w for w in self.words if signature(w) == sig]


def canonical_shape(shape: Shape) -> Shape:
    """Shape with children sorted the way canonical words sort them."""
    if shape is None:
        return None
    return tuple(sorted((canonical_shape(c) for c in shape), key=signature))


def _build(n: int, k: int, letters: tuple[int, ...], group_degree: int, mode: str, max_degree: int | None) -> FilippovModel:
    words = canonical_words(n, letters)
    combs = sorted((w for w in words if is_comb(w)), key=lambda w: (comb_layers(w), _word_order(w)))
    index = {c: i for i, c in enumerate(combs)}
    rewriter = CombRewriter()
    rows = {}
    for w in words:
        for rel in jacobi_relations(w, "alternative"):
            vec = {index[c]: v for c, v in rewriter.rewrite_combination(rel).items()}
            if vec:
                rows[_row_key(vec)] = vec
    module = QuotientModule(
        group_degree, combs, act_word, rows.values(), mode=mode, max_degree=max_degree
    )
    return FilippovModel(n, k, letters, module, words, rewriter, len(rows))


def _row_key(vec: Mapping[int, int]) -> tuple:
    items = sorted(vec.items())
    if items[0][1] < 0:
        items = [(c, -v) for c, v in items]
    return tuple(items)


def build_rho(n: int, k: int, mode: str = "multimodular", max_degree: int | None = DEFAULT_MAX_DEGREE) -> FilippovModel:
    """``rho_{n,k}`` as combs modulo the comb images of all Jacobi relations."""
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    m = degree(n, k)
    check_degree(m, max_degree)
    return _cached_rho(n, k, mode, max_degree)


@cache
def _cached_rho(n: int, k: int, mode: str, max_degree: int | None) -> FilippovModel:
    m = degree(n, k)
    return _build(n, k, tuple(range(1, m + 1)), m, mode, max_degree)


def build_hat_rho(n: int, k: int, mode: str = "multimodular") -> FilippovModel:
    """Words with one extra letter ``b`` of multiplicity ``k`` and distinct letters ``1..k(n-2)+1``."""
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    m = k * (n - 2) + 1
    letters = tuple(range(1, m + 1)) + (B,) * k
    return _build(n, k, letters, m, mode, DEFAULT_MAX_DEGREE)


def rho_character(n: int, k: int, mode: str = "multimodular") -> ClassFunction:
    if n == 1:
        return trivial_character(1)
    return build_rho(n, k, mode).module.character()


def rho_decompose(n: int, k: int, mode: str = "multimodular") -> Decomposition:
    if n == 1:
        return Decomposition.of((1,))
    return decompose(rho_character(n, k, mode))


def rho_dimension(n: int, k: int, mode: str = "multimodular", max_degree: int | None = DEFAULT_MAX_DEGREE) -> int:
    return build_rho(n, k, mode, max_degree).dim


def rho_dimension_full_words(n: int, k: int, mode: str = "multimodular") -> int:
    """Independent route: all canonical words modulo every classical Jacobi instance."""
    m = degree(n, k)
    words = canonical_words(n, range(1, m + 1))
    index = {w: i for i, w in enumerate(words)}
    rows = []
    for w in words:
        for rel in jacobi_relations(w, "classical"):
            rows.append({index[c]: v for c, v in rel.items()})
    module = QuotientModule(m, words, act_word, rows, mode=mode, check=False)
    return module.dim


def noncomb_submodule(n: int, k: int, mode: str = "multimodular") -> QuotientSpan:
    """The submodule of ``rho_{n,k}`` spanned by the non-comb words."""
    model = build_rho(n, k, mode)
    return model.word_span(w for w in model.words if not is_comb(w))


def shape_submodule(n: int, k: int, shape: Shape, mode: str = "multimodular") -> QuotientSpan:
    """``rho_T``: the span of the words of shape ``T``."""
    model = build_rho(n, k, mode)
    if internal_count(shape) != k or any(len(node) != n for node in _nodes(shape)):
        raise ValueError("shape is not an n-ary tree with k internal nodes")
    return model.word_span(model.words_of_shape(shape))


def lex_lower_span(n: int, k: int, shape: Shape, mode: str = "multimodular") -> QuotientSpan:
    """``rho_{D(T)}``: the span of the words whose shape has a lexicographically smaller depth vector."""
    model = build_rho(n, k, mode)
    target = depth_vector(shape)
    return model.word_span(w for w in model.words if depth_vector(w) < target)


def _nodes(tree) -> Iterator[tuple]:
    if isinstance(tree, tuple):
        yield tree
        for c in tree:
            yield from _nodes(c)


def shape_quotient_character(n: int, k: int, shape: Shape, mode: str = "multimodular") -> ClassFunction:
    """Character of ``rho_T / (rho_T ∩ rho_{D(T)})``."""
    rho_t = shape_submodule(n, k, shape, mode)
    lower = lex_lower_span(n, k, shape, mode)
    return rho_t.character() - intersection_character(rho_t, lower)


def distinct_shapes(n: int, k: int) -> list[Shape]:
    """One plane tree per shape up to reordering children, in canonical order."""
    seen = {}
    for shape in enumerate_shapes(n, k):
        c = canonical_shape(shape)
        seen.setdefault(signature(c), c)
    return [seen[s] for s in sorted(seen)]


def remove_b(word: Word) -> Word:
    """Drop every ``b`` leaf, turning an ``n``-ary word into an ``(n-1)``-ary one."""
    if isinstance(word, int):
        return word
    kept = tuple(remove_b(c) for c in word if c != B)
    return kept[0] if len(kept) == 1 else kept


def hat_rho_check(n: int, k: int, mode: str = "multimodular") -> bool:
    """Compare the ``b``-letter module with ``rho_{n-1,k}`` and test the ``b``-removal bijection."""
    hat = build_hat_rho(n, k, mode)
    if n == 2:
        return hat.dim == 1 and hat.module.character() == trivial_character(1)
    target = build_rho(n - 1, k, mode)
    images = {}
    for w in hat.words:
        s, v = canonicalize(remove_b(w))
        if s == 0 or v in images:
            return False
        images[v] = w
    if set(images) != set(target.words):
        return False
    return hat.module.character() == target.module.character()


def beta_gamma(n: int, k: int, mode: str = "multimodular") -> tuple[Decomposition, Decomposition]:
    """``beta_{n,k}`` (a row of length ``k`` on top of ``rho_{n-1,k}``) and the remainder ``gamma``."""
    rho = rho_decompose(n, k, mode)
    beta = row_prepend(rho_decompose(n - 1, k, mode), k)
    diff = rho.difference(beta)
    negative = {lam: d for lam, d in diff.items() if d < 0}
    if negative:
        raise StructuralError(f"beta is not contained in rho_{n},{k}: {negative}")
    gamma = Decomposition(rho.degree, diff)
    wide = [lam for lam, _ in gamma if lam[0] > k - 1]
    if wide:
        raise StructuralError(f"gamma has irreducibles with more than {k - 1} columns: {wide}")
    return beta, gamma


def three_bracket_dimension(n: int) -> int:
    """``4 / prod_{i=1..3}(n+i) * (3n)! / (n!)^3``."""
    value = Fraction(4, (n + 1) * (n + 2) * (n + 3)) * Fraction(factorial(3 * n), factorial(n) ** 3)
    if value.denominator != 1:
        raise ArithmeticError("formula is not integral")
    return int(value)


def column_counts(decomposition: Decomposition) -> set[int]:
    return {lam[0] for lam, _ in decomposition}


def table_row(n: int, k: int) -> Decomposition:
    """Expected decomposition of ``rho_{n,k}`` for ``k <= 4`` in closed form."""
    if k == 1:
        return Decomposition.of((1,) * n)
    if k == 2:
        return Decomposition.of((2,) * (n - 1) + (1,))
    if k == 3:
        return Decomposition.of((3,) * (n - 1) + (1,), (3,) * (n - 2) + (2, 1, 1))
    if k == 4:
        shapes = [
            (4,) * (n - 1) + (1,),
            (4,) * (n - 2) + (3, 2),
            (4,) * (n - 2) + (3, 1, 1),
            (4,) * (n - 2) + (2, 2, 1),
            (4,) * (n - 2) + (2, 1, 1, 1),
        ]
        if n >= 3:
            shapes += [(4,) * (n - 3) + (3, 3, 1, 1, 1), (4,) * (n - 3) + (3, 2, 2, 2)]
        return Decomposition.of(*shapes)
    raise ValueError("closed form known only for k <= 4")


def r_alpha(n: int, alpha: Perm) -> Combination:
    """``2(n-2) v_alpha - sum v_{alpha (i,j)}`` over ``i <= 2n < j``, with swaps on positions."""
    m = 3 * n - 2

    def v(images: Sequence[int]) -> Word:
        return (tuple(images[:n]), tuple(images[n : 2 * n])) + tuple(images[2 * n :])

    terms = [(2 * (n - 2), v(alpha))]
    for i in range(2 * n):
        for j in range(2 * n, m):
            swapped = list(alpha)
            swapped[i], swapped[j] = swapped[j], swapped[i]
            terms.append((-1, v(swapped)))
    return _signed_sum(terms)
