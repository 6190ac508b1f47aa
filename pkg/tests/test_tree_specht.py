import pytest

from lanke.characters import Decomposition
from lanke.filippov import parse_shape
from lanke.tree_specht import (
    MuTableau,
    TPartition,
    bridge_word,
    descendants,
    embed_check,
    format_tree,
    is_path,
    parents,
    parse_tree,
    path,
    path_shape,
    plane_trees,
    preorder,
    prune,
    prune_and_bridge,
    root_split_relation,
    second_kind_columns_ok,
    size,
    t_partitions,
    tabloid_space,
    tree_garnir_first,
    tree_garnir_second,
    tree_specht,
    tree_specht_decomposition,
)

CHERRY = ((), ())
BROOM = (((),), ())


def test_plane_tree_counts_are_catalan():
    assert [len(plane_trees(n)) for n in range(1, 6)] == [1, 1, 2, 5, 14]


def test_tree_structure():
    assert [p for _, p in preorder(BROOM)] == [-1, 0, 1, 0]
    assert parents(BROOM) == [-1, 0, 1, 0]
    assert size(BROOM) == 4
    assert descendants(BROOM) == [[1, 2, 3], [2], [], []]
    assert is_path(path(3)) and not is_path(CHERRY)


def test_t_partitions():
    parts = list(t_partitions(CHERRY, 5))
    assert [p.mu for p in parts] == [(1, 1, 3), (1, 2, 2), (1, 3, 1)]
    with pytest.raises(ValueError):
        TPartition(CHERRY, (2, 1, 3))


def test_tree_text_round_trip():
    text = "(2 (2) (3 (4)))"
    shape = parse_tree(text)
    assert shape.tree == ((), ((),))
    assert shape.mu == (2, 2, 3, 4)
    assert format_tree(shape.tree, shape.mu) == text
    for bad in ("(2 (3)", "2 (3)", "(2) (3)"):
        with pytest.raises(ValueError):
            parse_tree(bad)


def test_mu_tableau_validation():
    shape = TPartition(CHERRY, (1, 1, 1))
    t = MuTableau.from_columns(shape, [(2,), (1,), (3,)])
    assert t.sign == 1
    with pytest.raises(ValueError):
        MuTableau.from_columns(shape, [(1, 2), (3,)])


def test_relation_errors():
    t = ((1,), (2,), (3,))
    with pytest.raises(ValueError):
        tree_garnir_first(CHERRY, t, 0)
    with pytest.raises(ValueError):
        tree_garnir_second(CHERRY, t, 1)
    with pytest.raises(ValueError):
        tree_specht(CHERRY, (1, 1, 1), kind="third")


def test_root_relation_splits_over_children():
    shape = TPartition(CHERRY, (1, 2, 1))
    for t in tabloid_space(shape):
        total = {}
        for i in range(2):
            for cols, v in root_split_relation(CHERRY, t, i).items():
                total[cols] = total.get(cols, 0) + v
        total = {c: v for c, v in total.items() if v}
        assert total == tree_garnir_second(CHERRY, t, 0)


@pytest.mark.parametrize("mu", [(1, 1, 1), (1, 2, 2), (2, 2, 3), (1, 1, 3)])
def test_paths_give_irreducibles(mu):
    for kind in ("first", "second"):
        assert tree_specht_decomposition(path(3), mu, kind) == Decomposition.of(path_shape(mu))


@pytest.mark.parametrize("tree", [t for n in range(1, 5) for t in plane_trees(n)])
def test_first_kind_embeds_in_second_kind(tree):
    for total in range(size(tree), 7):
        for p in t_partitions(tree, total):
            assert embed_check(tree, p.mu).ok
            assert second_kind_columns_ok(tree, p.mu)


def test_prune_and_bridge_word():
    shape = parse_shape("[[*,*],*]")
    assert prune(shape) == (((),), (1, 2))
    assert bridge_word(shape, [(3,), (1, 2)]) == ((1, 2), 3)


@pytest.mark.parametrize("n,k,text", [(2, 2, "[[*,*],*]"), (3, 2, "[[*,*,*],*,*]"), (2, 3, "[[[*,*],*],*]")])
def test_bridge(n, k, text):
    result = prune_and_bridge(n, k, parse_shape(text))
    assert result.ok


def test_bridge_rejects_bad_shapes():
    with pytest.raises(ValueError):
        prune_and_bridge(2, 3, parse_shape("[[*,*],[*,*]]"))
    with pytest.raises(ValueError):
        prune_and_bridge(2, 2, parse_shape("[[[*,*],*],*]"))
