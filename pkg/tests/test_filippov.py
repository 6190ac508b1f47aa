import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lanke.characters import Decomposition, decompose
from lanke.filippov import (
    B,
    beta_gamma,
    build_rho,
    canonical_words,
    canonicalize,
    column_counts,
    comb_layers,
    comb_rewrite,
    comb_shape,
    distinct_shapes,
    enumerate_shapes,
    format_shape,
    format_word,
    fuss_catalan,
    hat_rho_check,
    is_comb,
    is_increasing,
    jacobi_relations,
    parse_shape,
    parse_word,
    r_alpha,
    remove_b,
    rho_dimension,
    rho_dimension_full_words,
    table_row,
    three_bracket_dimension,
)

SMALL_CELLS = [(2, 1), (3, 1), (2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (2, 4)]


def test_canonicalize_sorts_with_sign():
    assert canonicalize((2, 1)) == (-1, (1, 2))
    assert canonicalize((1, 2, 3)) == (1, (1, 2, 3))
    assert canonicalize((3, 1, 2)) == (1, (1, 2, 3))
    assert canonicalize((1, 1))[0] == 0


def test_canonicalize_puts_brackets_first():
    sign, word = canonicalize((3, (2, 1)))
    assert word == ((1, 2), 3)
    assert sign == 1


@given(st.permutations(list(range(1, 6))))
def test_canonical_form_is_stable(perm):
    word = ((perm[0], perm[1]), perm[2], (perm[3], perm[4]))
    sign, canon = canonicalize(word)
    assert sign in (1, -1)
    assert canonicalize(canon) == (1, canon)


def test_word_round_trip():
    word = parse_word("[[1,2,3],[4,5,6],7,8,9]")
    assert word == ((1, 2, 3), (4, 5, 6), 7, 8, 9)
    assert format_word(word) == "[[1,2,3],[4,5,6],7,8,9]"
    assert parse_word("[1,b]") == (1, B)
    assert format_word((1, B)) == "[1,b]"


def test_shape_round_trip():
    shape = parse_shape("[[*,*],*]")
    assert shape == ((None, None), None)
    assert format_shape(shape) == "[[*,*],*]"
    for bad in ("[1,*]", "[*,*", "[*]]"):
        with pytest.raises((ValueError, IndexError)):
            parse_shape(bad)


@pytest.mark.parametrize("n,k", [(2, 1), (2, 3), (3, 2), (3, 3), (4, 2)])
def test_shape_count_is_fuss_catalan(n, k):
    shapes = enumerate_shapes(n, k)
    assert len(shapes) == fuss_catalan(n, k)
    assert len(set(shapes)) == len(shapes)


def test_comb_shape():
    shape = comb_shape(3, 2)
    assert shape == ((None, None, None), None, None)
    assert is_comb(((1, 2, 3), 4, 5))
    assert not is_comb(((1, 2, 3), (4, 5, 6), 7))
    assert comb_layers(((1, 2, 3), 4, 5)) == ((4, 5), (1, 2, 3))
    assert is_increasing(shape)


def test_distinct_shapes():
    assert len(distinct_shapes(3, 2)) == 1
    assert len(distinct_shapes(3, 3)) == 2


def test_comb_rewrite_only_produces_combs():
    word = ((1, 2, 3), (4, 5, 6), 7)
    result = comb_rewrite(word)
    assert result
    assert all(is_comb(w) for w in result)


def test_comb_rewrite_agrees_modulo_relations():
    model = build_rho(3, 3)
    for word in model.words[:40]:
        if is_comb(word):
            continue
        diff = {}
        for w, v in comb_rewrite(word).items():
            diff[model.module.index[w]] = diff.get(model.module.index[w], 0) + v
        assert model.module.normal_form(diff) == model.module.normal_form(model.coordinates(word))


def test_jacobi_relations_vanish():
    model = build_rho(3, 2)
    word = ((1, 2, 3), 4, 5)
    for form in ("classical", "alternative"):
        for rel in jacobi_relations(word, form):
            vec = {}
            for w, v in rel.items():
                for i, x in model.coordinates(w).items():
                    vec[i] = vec.get(i, 0) + v * x
            assert not model.module.normal_form(vec)
    with pytest.raises(ValueError):
        list(jacobi_relations(word, "other"))


@pytest.mark.parametrize("n,k", SMALL_CELLS)
def test_decomposition_matches_closed_form(n, k):
    model = build_rho(n, k)
    assert decompose(model.module.character()) == table_row(n, k)


@pytest.mark.parametrize("n,k,dim", [(2, 3, 6), (3, 3, 56), (2, 4, 24), (3, 2, 5)])
def test_full_word_presentation_agrees(n, k, dim):
    assert rho_dimension_full_words(n, k) == dim
    assert rho_dimension(n, k) == dim


def test_closed_dimension_for_three_brackets():
    assert [three_bracket_dimension(n) for n in (2, 3, 4)] == [rho_dimension(n, 3) for n in (2, 3, 4)]


def test_words_have_expected_count():
    assert len(canonical_words(2, range(1, 4))) == 3
    assert len(canonical_words(3, range(1, 6))) == 10


@pytest.mark.parametrize("n,k", [(2, 3), (3, 2), (3, 3)])
def test_hat_rho(n, k):
    assert hat_rho_check(n, k)


def test_remove_b():
    assert remove_b(((1, B), 2, B)) == (1, 2)


def test_r_alpha_lies_in_the_relations():
    model = build_rho(3, 3)
    for alpha in itertools.islice(itertools.permutations(range(1, 8)), 0, 5040, 997):
        vec = {}
        for w, v in r_alpha(3, alpha).items():
            for i, x in model.coordinates(w).items():
                vec[i] = vec.get(i, 0) + v * x
        assert not model.module.normal_form(vec)


def test_beta_gamma_small():
    beta, gamma = beta_gamma(3, 3)
    assert not gamma
    assert beta == Decomposition.of((3, 3, 1), (3, 2, 1, 1))
    _, gamma = beta_gamma(2, 3)
    assert gamma == Decomposition.of((2, 1, 1))
    assert column_counts(gamma) == {2}


def test_table_row_rejects_large_k():
    with pytest.raises(ValueError):
        table_row(3, 5)
