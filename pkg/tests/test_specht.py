import pytest
from hypothesis import given
from hypothesis import strategies as st

from lanke.characters import Decomposition, induction_product_character, irreducible_character
from lanke.combinatorics import hook_length_dimension, partitions_list
from lanke.specht import (
    B,
    ColumnTabloid,
    InducedModule,
    canonical_columns,
    check_phi_scalars,
    direct_sum_kernel,
    fillings,
    format_tabloid,
    fulton_relations,
    garnir_first,
    garnir_new,
    hat_specht_check,
    induced_dimension,
    m_space,
    m_space_dimension,
    new_relations,
    parse_tabloid,
    phi_kernel_case,
    phi_scalar,
    positional_phi_kernel,
    specht_module,
)


def test_canonical_columns_sign_and_zero():
    assert canonical_columns([(2, 1), (3,)]) == (-1, ((1, 2), (3,)))
    assert canonical_columns([(1, 1), (2,)])[0] == 0
    # columns keep their positions; only entries inside a column are sorted
    assert canonical_columns([(3,), (1,)]) == (1, ((3,), (1,)))


def test_tabloid_text_round_trip():
    text = "1,2,3|4,b|5"
    cols = parse_tabloid(text)
    assert cols == ((1, 2, 3), (4, B), (5,))
    assert format_tabloid(cols) == text
    with pytest.raises(ValueError):
        parse_tabloid("1,2||3")


def test_column_tabloid():
    t = ColumnTabloid.parse("2,1|3")
    assert t.sign == -1 and t.columns == ((1, 2), (3,))
    assert t.shape == (2, 1)
    assert t.act((2, 1, 3)).sign == 1
    assert str(t) == "-1*1,2|3"


@pytest.mark.parametrize("lam", [(2, 1), (2, 2), (3, 1, 1), (2, 2, 1)])
def test_m_space_dimension(lam):
    assert m_space(lam).dim == m_space_dimension(lam)


def test_fillings_with_repeated_letters():
    assert len(fillings((2, 1), [1, B, B])) == 1
    assert len(fillings((2,), [B, B])) == 0


def test_relation_index_errors():
    t = ((1, 2), (3,))
    with pytest.raises(ValueError):
        garnir_first(t, 2)
    with pytest.raises(ValueError):
        garnir_new(t, 1)
    with pytest.raises(ValueError):
        specht_module((2, 1), kind="other")


def test_garnir_first_small_example():
    rel = garnir_first(((1, 2), (3,)), 1)
    assert rel == {((1, 2), (3,)): 1, ((2, 3), (1,)): 1, ((1, 3), (2,)): -1}


@pytest.mark.parametrize("kind", ["fulton", "new"])
@pytest.mark.parametrize("lam", [p for m in range(1, 6) for p in partitions_list(m)])
def test_presentations_give_the_irreducible(lam, kind):
    module = specht_module(lam, kind)
    assert module.dim == hook_length_dimension(lam)
    assert module.character() == irreducible_character(lam)


def test_each_kind_kills_the_other_relations():
    for lam in [(2, 2, 1), (3, 2), (2, 1, 1)]:
        for kind, other in (("fulton", new_relations), ("new", fulton_relations)):
            module = specht_module(lam, kind)
            for t in module.symbols:
                for rel in other(t):
                    vec = {module.index[c]: v for c, v in rel.items()}
                    assert not module.normal_form(vec)


@pytest.mark.parametrize("lam,k", [((2, 2, 1), 2), ((3, 1), 3), ((2, 2, 1), 3), ((3, 3, 1), 3)])
def test_hat_specht(lam, k):
    assert hat_specht_check(lam, k)


def test_induced_module_character():
    left, right = specht_module((2, 1)), specht_module((1, 1))
    module = InducedModule(left, right)
    assert module.dim == induced_dimension(left, right) == 20
    assert module.character() == induction_product_character(left.character(), right.character())


@pytest.mark.parametrize(
    "lam1,lam2,d",
    [((2, 1), (1,), 2), ((2, 1), (1, 1), 2), ((2, 1), (1, 1), 3), ((1, 1), (2,), 1), ((2, 2), (1,), 2), ((1,), (1,), 1)],
)
def test_phi_kernel(lam1, lam2, d):
    case = phi_kernel_case(lam1, lam2, d)
    assert case.ok, (case.kernel, case.expected)


def test_phi_kernel_rejects_small_d():
    with pytest.raises(ValueError):
        phi_kernel_case((2, 1), (1,), 1)


@given(st.sampled_from([(2, 1), (1, 1), (2,), (1,)]), st.sampled_from([(1,), (2,), (1, 1)]), st.integers(2, 4))
def test_phi_scalar_is_nonnegative(lam1, lam2, d):
    case = phi_kernel_case(lam1, lam2, d)
    assert all(a >= 0 for a in case.scalars.values())


def test_phi_scalars_on_projections():
    assert all(check_phi_scalars((2, 1), (1,), 2).values())
    assert phi_scalar((3, 1), (2, 1), (1,), 2) == 0


def test_positional_phi_agrees_with_class_sums():
    kernel = positional_phi_kernel((2, 1), (1,), 2)
    assert kernel == phi_kernel_case((2, 1), (1,), 2).kernel


def test_direct_sum_kernel():
    kernel, expected = direct_sum_kernel([(2, 1), (1, 1, 1)], (1,), 2)
    assert kernel == expected
    assert kernel == Decomposition.of((3, 1))
