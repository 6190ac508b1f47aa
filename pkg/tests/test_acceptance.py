"""Acceptance suite: one pass/fail line per criterion."""

import time
from math import comb, factorial, gcd

import pytest

from lanke.characters import Decomposition, irreducible_character
from lanke.combinatorics import hook_length_dimension, kw_table, partitions_list
from lanke.filippov import beta_gamma, build_rho, column_counts, rho_decompose, table_row, three_bracket_dimension
from lanke.specht import phi_kernel_case, specht_module
from lanke.tree_specht import embed_check, plane_trees, second_kind_columns_ok, t_partitions

pytestmark = pytest.mark.acceptance


@pytest.fixture
def report(capsys):
    def emit(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail

    return emit


def test_criterion_1_dimension_3_4(report):
    started = time.perf_counter()
    dim = build_rho(3, 4).dim
    elapsed = time.perf_counter() - started
    report(1, dim == 1077 and elapsed <= 600, f"dim rho(3,4) = {dim}, {elapsed:.1f}s")


def test_criterion_2_catalan(report):
    started = time.perf_counter()
    dims = [build_rho(n, 2).dim for n in range(2, 6)]
    elapsed = time.perf_counter() - started
    expected = [comb(2 * n, n) // (n + 1) for n in range(2, 6)]
    report(2, dims == expected == [2, 5, 14, 42] and elapsed <= 60, f"dims {dims}, {elapsed:.1f}s")


def test_criterion_3_three_brackets(report):
    started = time.perf_counter()
    dims = [build_rho(n, 3).dim for n in (2, 3)]
    formula = [three_bracket_dimension(n) for n in (2, 3)]
    decs = all(rho_decompose(n, 3) == table_row(n, 3) for n in (2, 3))
    elapsed = time.perf_counter() - started
    ok = dims == formula == [6, 56] and decs and elapsed <= 120
    report(3, ok, f"dims {dims}, formula {formula}, decompositions match: {decs}, {elapsed:.1f}s")


CELLS = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4), (4, 2), (5, 2)]


def test_criterion_4_decompositions(report):
    bad = [(n, k) for n, k in CELLS if rho_decompose(n, k) != table_row(n, k)]
    beta, gamma = beta_gamma(3, 4)
    seven = len(rho_decompose(3, 4)) == 7
    split = beta.dimension() == 873 and gamma.dimension() == 204
    split = split and gamma == Decomposition.of((3, 3, 1, 1, 1), (3, 2, 2, 2))
    ok = not bad and seven and split
    detail = f"{len(CELLS) - len(bad)}/{len(CELLS)} cells, dim beta {beta.dimension()}, dim gamma {gamma.dimension()}"
    report(4, ok, detail)


def test_criterion_5_presentations(report):
    cases = [(lam, kind) for m in range(1, 7) for lam in partitions_list(m) for kind in ("fulton", "new")]
    bad = []
    for lam, kind in cases:
        module = specht_module(lam, kind)
        if module.dim != hook_length_dimension(lam) or module.character() != irreducible_character(lam):
            bad.append((lam, kind))
    report(5, not bad, f"{len(cases) - len(bad)}/{len(cases)} presentations")


def test_criterion_6_kernels(report):
    cases = []
    for total in range(2, 8):
        for n1 in range(1, total):
            for lam1 in partitions_list(n1):
                for lam2 in partitions_list(total - n1):
                    cases += [(lam1, lam2, d) for d in range(lam1.num_columns, 5)]
    bad = [c for c in cases if not phi_kernel_case(*c).ok]
    report(6, not bad, f"{len(cases) - len(bad)}/{len(cases)} kernels")


def test_criterion_7_tree_modules(report):
    cases = [
        (tree, p.mu)
        for nodes in range(1, 5)
        for tree in plane_trees(nodes)
        for total in range(nodes, 8)
        for p in t_partitions(tree, total)
    ]
    bad = [c for c in cases if not (second_kind_columns_ok(*c) and embed_check(*c).ok)]
    report(7, not bad, f"{len(cases) - len(bad)}/{len(cases)} tree shapes")


def test_criterion_8_stabilization(report):
    bad = []
    for n, k in [(2, 2), (3, 2), (3, 3), (4, 2), (5, 2)]:
        _, gamma = beta_gamma(n, k)
        if column_counts(rho_decompose(n, k)) != {k} or gamma:
            bad.append((n, k))
    for n, k in [(2, 3), (2, 4)]:
        if not all(n <= c <= k for c in column_counts(rho_decompose(n, k))):
            bad.append((n, k))
    report(8, not bad, f"{7 - len(bad)}/7 cells")


def test_criterion_9_lie_tables(report):
    bad = []
    for m in range(3, 9):
        tables = [kw_table(m, i) for i in range(1, m) if gcd(i, m) == 1]
        total = sum(mult * hook_length_dimension(lam) for lam, mult in tables[0].items())
        if any(t != tables[0] for t in tables) or total != factorial(m - 1):
            bad.append(m)
    five = Decomposition(5, kw_table(5)) == table_row(2, 4)
    report(9, not bad and five, f"{6 - len(bad)}/6 degrees, degree 5 matches rho(2,4): {five}")
