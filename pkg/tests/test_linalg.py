import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lanke.errors import StructuralError
from lanke.linalg import BACKEND, MODES, Subspace, dump_rows, echelonize, kernel_basis, parse_rows, quotient_dimension
from lanke.linalg.modular import (
    PRIMES,
    IntegerRows,
    certified_echelon,
    echelon_class,
    modular_echelon,
    modular_rank,
    rational_reconstruction,
)
from lanke.linalg.rational import apply, induced_action_on_quotient, rank, transpose


def random_rows(rng: random.Random, nrows: int, ncols: int, density: float = 0.3, bound: int = 5):
    rows = []
    for _ in range(nrows):
        row = {c: rng.randint(-bound, bound) for c in range(ncols) if rng.random() < density}
        rows.append({c: v for c, v in row.items() if v})
    return rows


sparse_matrix = st.integers(1, 12).flatmap(
    lambda ncols: st.lists(
        st.dictionaries(st.integers(0, ncols - 1), st.integers(-4, 4).filter(bool), max_size=ncols),
        max_size=14,
    ).map(lambda rows: (rows, ncols))
)


def as_dense(rows, ncols):
    return [[Fraction(r.get(c, 0)) for c in range(ncols)] for r in rows]


def test_subspace_rref_and_reduce():
    space = Subspace(3)
    assert space.add({0: 2, 1: 4})
    assert space.add({1: 1, 2: 1})
    assert not space.add({0: 1, 1: 3, 2: 1})
    assert space.rank == 2
    assert space.basis() == [{0: 1, 2: -2}, {1: 1, 2: 1}]
    assert space.reduce({2: 5}) == {2: 5}
    assert space.contains({0: 1, 1: 2})
    with pytest.raises(IndexError):
        space.add({3: 1})


def test_dump_and_parse_round_trip():
    rows = [{0: Fraction(1, 2), 3: Fraction(-2)}, {1: Fraction(7, 3)}]
    text = dump_rows(rows)
    assert text == "0:1/2 3:-2\n1:7/3\n"
    assert parse_rows(text) == rows


def test_rational_reconstruction():
    m = PRIMES[0] * PRIMES[1]
    for f in [Fraction(3, 7), Fraction(-22, 9), Fraction(5)]:
        a = f.numerator * pow(f.denominator, -1, m) % m
        assert rational_reconstruction(a, m) == f


@pytest.mark.parametrize("seed", range(20))
def test_modes_agree_on_random_matrices(seed):
    rng = random.Random(seed)
    ncols = rng.randint(1, 300 if seed < 3 else 40)
    rows = random_rows(rng, rng.randint(0, 60), ncols, density=0.05 if ncols > 100 else 0.3)
    exact = echelonize(rows, ncols, "rational")
    fast = echelonize(rows, ncols, "multimodular")
    assert exact.rank == fast.rank
    assert list(exact.pivots) == list(fast.pivots)
    assert exact.rows() == fast.rows()


@given(sparse_matrix)
def test_rank_of_transpose(matrix):
    rows, ncols = matrix
    assert rank(rows, ncols) == rank(transpose(rows, ncols), len(rows)) if rows else rank(rows, ncols) == 0


@given(sparse_matrix)
def test_rank_nullity(matrix):
    rows, ncols = matrix
    basis = kernel_basis(rows, ncols)
    assert len(basis) + rank(rows, ncols) == ncols
    for v in basis:
        assert not apply(rows, v)


@given(sparse_matrix)
def test_certified_echelon_matches_rational(matrix):
    rows, ncols = matrix
    exact = echelonize(rows, ncols, "rational")
    fast = certified_echelon(rows, ncols)
    assert exact.rows() == fast.rows()
    for row in rows:
        assert not fast.normal_form(row)


def test_python_and_compiled_backends_agree():
    rng = random.Random(7)
    rows = random_rows(rng, 80, 50, density=0.1)
    data = IntegerRows.from_rows(rows, 50)
    ref = modular_echelon(data, PRIMES[0], "python")
    if BACKEND == "compiled":
        fast = modular_echelon(data, PRIMES[0], "compiled")
        assert np.array_equal(ref.pivots, fast.pivots)
        assert np.array_equal(ref.R, fast.R)
    assert ref.rank == rank(rows, 50)


def test_kernel_reduce_remainder():
    cls = echelon_class("python")
    ech = cls(3, 101)
    ech.add_row(np.array([0, 1]), np.array([1, 1]))
    cols, vals = ech.reduce(np.array([0]), np.array([1]))
    assert list(cols) == [1] and list(vals) == [100]


def test_modular_rank_and_fractional_input():
    rows = [{0: Fraction(1, 2), 1: Fraction(1, 3)}, {0: 3, 1: 2}]
    assert modular_rank(rows, 2) == 1
    assert echelonize(rows, 2, "multimodular").rank == 1


def test_large_entries_take_the_exact_path():
    big = 1 << 80
    rows = [{0: big, 1: 1}, {0: 1, 1: big}]
    ech = echelonize(rows, 2, "multimodular")
    assert ech.rank == 2


def test_kernel_vectors_of_echelon():
    rows = [{0: 1, 1: 2, 2: 3}]
    ech = echelonize(rows, 3, "multimodular")
    for v in ech.kernel_vectors():
        assert not apply(rows, v)
    assert len(ech.kernel_vectors()) == 2


def test_quotient_and_induced_action():
    space = Subspace(2)
    space.add({0: 1, 1: -1})
    assert quotient_dimension(2, space) == 1
    swap = [{1: 1}, {0: 1}]
    assert induced_action_on_quotient(space, swap) == [{0: 1}]
    bad = [{0: 1}, {1: 2}]
    with pytest.raises(StructuralError):
        induced_action_on_quotient(space, bad)


def test_unknown_mode():
    assert MODES == ("rational", "multimodular")
    with pytest.raises(ValueError):
        echelonize([], 1, "float")
