from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lanke.characters import (
    ClassFunction,
    Decomposition,
    character_value,
    check_degree,
    class_representative,
    class_size,
    cycle_type,
    decompose,
    induction_product,
    induction_product_character,
    inner_product,
    irreducible_character,
    regular_character,
    row_prepend,
    sgn2_plethysm_sgn,
    sgn2_plethysm_sgn_character,
    sign_character,
    trivial_character,
)
from lanke.combinatorics import Partition, conjugate, hook_length_dimension, lr_product, partitions_list
from lanke.errors import CapExceeded, NotACharacter

partition_strategy = st.integers(1, 7).flatmap(lambda n: st.sampled_from(partitions_list(n)))


def test_small_character_values():
    assert character_value((2, 1), (3,)) == -1
    assert character_value((2, 1), (1, 1, 1)) == 2
    assert character_value((2, 1), (2, 1)) == 0


@pytest.mark.parametrize("m", range(1, 8))
def test_class_sizes_sum_to_group_order(m):
    assert sum(class_size(mu) for mu in partitions_list(m)) == factorial(m)


@given(st.integers(1, 8).flatmap(lambda n: st.sampled_from(partitions_list(n))))
def test_class_representative_has_its_cycle_type(mu):
    assert cycle_type(class_representative(mu)) == mu


@pytest.mark.parametrize("m", range(1, 7))
def test_orthonormality(m):
    chars = [irreducible_character(lam) for lam in partitions_list(m)]
    for i, f in enumerate(chars):
        for j, g in enumerate(chars):
            assert inner_product(f, g) == (1 if i == j else 0)


@given(partition_strategy)
def test_irreducible_dimension_and_sign_twist(lam):
    chi = irreducible_character(lam)
    assert chi.dimension() == hook_length_dimension(lam)
    twisted = ClassFunction(chi.degree, {mu: chi[mu] * sign_character(chi.degree)[mu] for mu in chi.values})
    assert twisted == irreducible_character(conjugate(lam))


def test_regular_representation_decomposes_by_dimension():
    dec = decompose(regular_character(3))
    assert dec == Decomposition(3, {(3,): 1, (2, 1): 2, (1, 1, 1): 1})
    assert str(dec) == "3 + 2*2,1 + 1^3"


def test_decompose_rejects_non_characters():
    with pytest.raises(NotACharacter):
        decompose(irreducible_character((2, 1)) * Fraction(1, 2))
    with pytest.raises(NotACharacter):
        decompose(trivial_character(3) - sign_character(3))


def test_decomposition_json_round_trip():
    dec = Decomposition.of("3^2,1", "3,2,1^2")
    assert dec.to_json() == [{"lambda": [3, 3, 1], "mult": 1}, {"lambda": [3, 2, 1, 1], "mult": 1}]
    assert Decomposition.from_json(7, dec.to_json()) == dec
    assert dec.dimension() == 21 + 35
    assert dec.character() == irreducible_character((3, 3, 1)) + irreducible_character((3, 2, 1, 1))


def test_decomposition_order_and_difference():
    small = Decomposition.of("2,1")
    big = Decomposition(3, {(2, 1): 2, (3,): 1})
    assert small <= big
    assert not big <= small
    assert big.difference(small) == {Partition((3,)): 1, Partition((2, 1)): 1}
    assert big.column_counts() == {2, 3}


@given(partition_strategy, partition_strategy)
def test_induction_product_matches_littlewood_richardson(lam, mu):
    if sum(lam) + sum(mu) > 8:
        return
    product = induction_product_character(irreducible_character(lam), irreducible_character(mu))
    assert decompose(product) == Decomposition(sum(lam) + sum(mu), lr_product(lam, mu))


def test_induction_of_signs_is_regular():
    assert induction_product(sign_character(1), sign_character(1)) == regular_character(2)


def test_row_prepend():
    assert row_prepend(Decomposition.of("3,1", "2,1,1"), 3) == Decomposition.of("3,3,1", "3,2,1,1")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sgn2_plethysm_closed_form_matches_brute_force(n):
    assert decompose(sgn2_plethysm_sgn_character(n)) == sgn2_plethysm_sgn(n)


def test_degree_cap():
    check_degree(13)
    with pytest.raises(CapExceeded):
        check_degree(14)
    check_degree(20, None)
