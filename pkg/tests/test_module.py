from fractions import Fraction

import pytest

from lanke.characters import Decomposition, irreducible_character, regular_character, sign_character
from lanke.errors import StructuralError
from lanke.module import (
    DirectSum,
    QuotientModule,
    SignRepresentation,
    compose,
    intersection_character,
    inverse,
    linear_map_kernel,
    sign,
    transposition,
)


def permutation_module(m: int, relations=(), check=True):
    symbols = list(range(1, m + 1))
    return QuotientModule(m, symbols, lambda perm, s: (1, perm[s - 1]), relations, check=check)


def test_permutation_helpers():
    s = (2, 3, 1)
    assert compose(s, inverse(s)) == (1, 2, 3)
    assert sign(transposition(4, 1, 3)) == -1
    assert sign(s) == 1


def test_permutation_module_character():
    module = permutation_module(3)
    assert module.dim == 3
    assert module.decomposition() == Decomposition.of("3", "2,1")


def test_quotient_by_sum_vector():
    module = permutation_module(3, [{0: 1, 1: 1, 2: 1}])
    assert module.dim == 2
    assert module.character() == irreducible_character((2, 1))
    assert module.summary() == {"ambient_dim": 3, "rank": 1, "quotient_dim": 2}


def test_non_invariant_relations_are_rejected():
    with pytest.raises(StructuralError):
        permutation_module(3, [{0: 1, 1: -1}])


def test_span_and_intersection():
    module = permutation_module(3)
    total = module.span([{0: 1, 1: 1, 2: 1}])
    diff = module.span([{0: 1, 1: -1}, {1: 1, 2: -1}])
    assert total.dim == 1 and diff.dim == 2
    assert (total + diff).dim == 3
    assert intersection_character(total, diff).dimension() == 0
    assert diff.contains({0: 1, 2: -1})
    assert not diff.contains({0: 1})


def test_span_must_be_invariant():
    module = permutation_module(3)
    with pytest.raises(StructuralError):
        module.span([{0: 1}])


def test_direct_sum_and_sign():
    rep = DirectSum(SignRepresentation(3), permutation_module(3))
    assert rep.dim == 4
    assert rep.character() == sign_character(3) + irreducible_character((3,)) + irreducible_character((2, 1))


def test_linear_map_kernel():
    module = permutation_module(3)
    # the augmentation map sends every basis vector to 1
    images = [{0: Fraction(1)}] * 3
    kernel = linear_map_kernel(module, images)
    assert kernel.dim == 2
    assert kernel.decomposition() == Decomposition.of("2,1")


def test_rational_mode_quotient():
    module = QuotientModule(
        3, [1, 2, 3], lambda perm, s: (1, perm[s - 1]), [{0: 1, 1: 1, 2: 1}], mode="rational"
    )
    assert module.character() == irreducible_character((2, 1))
    assert module.character() + irreducible_character((3,)) == regular_character(3) - irreducible_character((2, 1)) - irreducible_character((1, 1, 1))
