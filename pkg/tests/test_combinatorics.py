from math import factorial, gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lanke.combinatorics import (
    Partition,
    SkewShape,
    YoungTableau,
    add_first_row,
    concat,
    conjugate,
    content_sum,
    hook_length_dimension,
    is_compatible,
    kw_multiplicity,
    kw_table,
    lr_coefficient,
    lr_fillings,
    lr_product,
    major_index,
    partitions_list,
    pieri_column,
    pieri_row,
    remove_first_row,
    syt_enumerate,
)

partition_strategy = st.integers(1, 8).flatmap(lambda n: st.sampled_from(partitions_list(n)))

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_partition_parse_and_compact():
    lam = Partition.parse("3^2,1")
    assert lam == (3, 3, 1)
    assert lam.compact() == "3^2,1"
    assert Partition.parse("2,1,1").compact() == "2,1^2"
    assert Partition((2, 1, 0)) == Partition((2, 1))


def test_partition_rejects_bad_parts():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition.parse("a,b")


@pytest.mark.parametrize("n", range(10))
def test_partition_counts(n):
    assert len(partitions_list(n)) == PARTITION_COUNTS[n]


def test_partitions_are_lexicographically_decreasing():
    lams = partitions_list(6)
    assert list(lams) == sorted(lams, reverse=True)


@given(partition_strategy)
def test_conjugate_is_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


@given(partition_strategy)
def test_hook_length_matches_tableau_count(lam):
    assert hook_length_dimension(lam) == sum(1 for _ in syt_enumerate(lam))


@pytest.mark.parametrize("n", range(1, 8))
def test_sum_of_squared_dimensions(n):
    assert sum(hook_length_dimension(lam) ** 2 for lam in partitions_list(n)) == factorial(n)


def test_syt_are_standard_and_distinct():
    tableaux = list(syt_enumerate((3, 2)))
    assert len(tableaux) == 5
    assert len(set(tableaux)) == 5
    assert all(t.is_standard() for t in tableaux)


def test_major_index_example():
    t = YoungTableau(((1, 2), (3,)))
    assert t.descents() == [2]
    assert major_index(t) == 2


def test_content_sum():
    assert content_sum((2,)) == 1
    assert content_sum((1, 1)) == -1
    assert content_sum((3, 1)) == 2


@given(partition_strategy)
def test_content_sum_conjugate_negates(lam):
    assert content_sum(conjugate(lam)) == -content_sum(lam)


def test_compatibility_and_concatenation():
    lam1 = (3, 3, 3, 2, 2, 1)
    assert is_compatible(lam1, (3, 2))
    assert not is_compatible(lam1, (3, 2, 2, 2))
    assert concat(lam1, (3, 2)) == (6, 5, 3, 2, 2, 1)
    with pytest.raises(ValueError):
        concat((2, 1), (1, 1))


def test_first_row_helpers():
    assert add_first_row((2, 1), 3) == (3, 2, 1)
    assert remove_first_row((3, 2, 1)) == (2, 1)
    with pytest.raises(ValueError):
        add_first_row((4,), 3)


def test_kw_small_tables():
    assert kw_table(2) == {Partition((1, 1)): 1}
    assert kw_table(3) == {Partition((2, 1)): 1}
    assert kw_table(5) == {lam: 1 for lam in map(Partition, [(4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1)])}


@pytest.mark.parametrize("m", range(3, 9))
def test_kw_table_is_independent_of_i_and_has_dimension_m_minus_1_factorial(m):
    tables = [kw_table(m, i) for i in range(1, m) if gcd(i, m) == 1]
    assert all(t == tables[0] for t in tables)
    assert sum(mult * hook_length_dimension(lam) for lam, mult in tables[0].items()) == factorial(m - 1)


def test_kw_rejects_non_coprime():
    with pytest.raises(ValueError):
        kw_multiplicity((2, 2), 2)


def test_lr_known_values():
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2
    assert lr_product((1,), (1,)) == {Partition((2,)): 1, Partition((1, 1)): 1}
    assert sum(1 for _ in lr_fillings(SkewShape((2, 1), (1,)), (1, 1))) == 1


@given(partition_strategy, partition_strategy)
def test_lr_product_dimension(lam, mu):
    from math import comb

    if sum(lam) + sum(mu) > 9:
        return
    total = sum(c * hook_length_dimension(nu) for nu, c in lr_product(lam, mu).items())
    assert total == comb(sum(lam) + sum(mu), sum(lam)) * hook_length_dimension(lam) * hook_length_dimension(mu)


def test_lr_symmetry():
    assert lr_product((2, 1), (2,)) == lr_product((2,), (2, 1))


@given(partition_strategy, st.integers(1, 3))
def test_pieri_rules_agree_with_lr(lam, r):
    assert sorted(pieri_column(lam, r)) == sorted(lr_product(lam, (1,) * r))
    assert sorted(pieri_row(lam, r)) == sorted(lr_product(lam, (r,)))


def test_skew_shape_containment():
    with pytest.raises(ValueError):
        SkewShape((2,), (1, 1))
