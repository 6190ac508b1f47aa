"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 degree cap exceeded.
"""

from __future__ import annotations

import functools
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from math import gcd
from typing import Callable, Sequence

import click

from lanke.characters import DEFAULT_MAX_DEGREE, Decomposition, decompose, irreducible_character
from lanke.combinatorics import Partition, hook_length_dimension, kw_table, partitions_list
from lanke.errors import CapExceeded
from lanke.linalg import MODES

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


# ---------------------------------------------------------------- shared plumbing


def shared_options(func: Callable) -> Callable:
    @click.option("--max-degree", type=click.IntRange(min=1), default=None, help=f"Degree cap (default {DEFAULT_MAX_DEGREE}).")
    @click.option("--mode", type=click.Choice(MODES), default="multimodular", show_default=True, help="Exact arithmetic route.")
    @click.option("--json", "as_json", is_flag=True, help="Emit a JSON document.")
    @click.option("--threads", type=click.IntRange(min=1), default=1, show_default=True, help="Worker processes for independent cases.")
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        return func(*args, **kwargs)

    return wrapper


def _cap(max_degree: int | None) -> int:
    return DEFAULT_MAX_DEGREE if max_degree is None else max_degree


def emit(command: str, parameters: dict, payload, mode: str, as_json: bool, text: str, started: float) -> None:
    """Print the result; the JSON document is deterministic, wall time goes to stderr."""
    if as_json:
        doc = {"command": command, "parameters": parameters, "mode": _mode_label(mode), "payload": payload}
        click.echo(json.dumps(doc, sort_keys=True))
    else:
        click.echo(text)
    click.echo(f"wall time {time.perf_counter() - started:.2f}s", err=True)


def _mode_label(mode: str) -> str:
    return "multimodular-verified" if mode == "multimodular" else mode


def run_guarded(body: Callable[[], int | None]) -> None:
    try:
        code = body() or EXIT_OK
    except CapExceeded as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CAP)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    sys.exit(code)


def parallel_map(func: Callable, items: Sequence, threads: int) -> list:
    """Order-preserving map, in worker processes when ``threads > 1``."""
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items))


@click.group()
@click.version_option(package_name="artifact")
def main() -> None:
    """Free Filippov algebra modules, Specht presentations and their checks."""


# ---------------------------------------------------------------- dim / decompose


def _rho_decomposition(n: int, k: int, mode: str, max_degree: int) -> tuple[int, Decomposition]:
    from lanke.filippov import build_rho

    if n == 1:
        return 1, Decomposition.of((1,))
    model = build_rho(n, k, mode, max_degree)
    return model.dim, decompose(model.module.character())


@main.command("dim")
@click.argument("n", type=click.IntRange(min=1))
@click.argument("k", type=click.IntRange(min=1))
@shared_options
def cmd_dim(n: int, k: int, max_degree, mode, as_json, threads) -> None:
    """Dimension of rho_{n,k}."""

    def body():
        from lanke.filippov import build_rho

        started = time.perf_counter()
        if n == 1:
            payload = {"n": n, "k": k, "ambient_dim": 1, "rank": 0, "quotient_dim": 1}
        else:
            payload = build_rho(n, k, mode, _cap(max_degree)).summary()
        emit("dim", {"n": n, "k": k}, payload, mode, as_json, str(payload["quotient_dim"]), started)

    run_guarded(body)


@main.command("decompose")
@click.argument("n", type=click.IntRange(min=1))
@click.argument("k", type=click.IntRange(min=1))
@shared_options
def cmd_decompose(n: int, k: int, max_degree, mode, as_json, threads) -> None:
    """Decomposition of rho_{n,k} into irreducibles."""

    def body():
        started = time.perf_counter()
        _, dec = _rho_decomposition(n, k, mode, _cap(max_degree))
        emit("decompose", {"n": n, "k": k}, dec.to_json(), mode, as_json, str(dec), started)

    run_guarded(body)


# ---------------------------------------------------------------- kw / conjecture scan


@main.command("kw")
@click.argument("m", type=click.IntRange(min=1))
@click.argument("i", type=int, default=1)
@shared_options
def cmd_kw(m: int, i: int, max_degree, mode, as_json, threads) -> None:
    """Multiplicities in Lie_m from major indices congruent to I mod M."""

    def body():
        started = time.perf_counter()
        if gcd(i, m) != 1:
            raise ValueError(f"i = {i} must be coprime to m = {m}")
        table = kw_table(m, i)
        dec = Decomposition(m, table)
        lines = [f"{lam.compact()}\t{mult}" for lam, mult in dec]
        emit("kw", {"m": m, "i": i}, dec.to_json(), mode, as_json, "\n".join(lines), started)

    run_guarded(body)


@main.command("conjecture-scan")
@click.argument("n", type=click.IntRange(min=2))
@click.argument("k", type=click.IntRange(min=1))
@shared_options
def cmd_conjecture_scan(n: int, k: int, max_degree, mode, as_json, threads) -> None:
    """Column counts of the irreducibles in gamma_{n,k} (an experiment, not an assertion)."""

    def body():
        from lanke.filippov import beta_gamma, build_rho, column_counts

        started = time.perf_counter()
        build_rho(n, k, mode, _cap(max_degree))
        _, gamma = beta_gamma(n, k, mode)
        counts = sorted(column_counts(gamma))
        payload = {"n": n, "k": k, "gamma": gamma.to_json(), "columns": counts}
        text = f"gamma = {gamma}\ncolumns = {{{', '.join(map(str, counts))}}}"
        emit("conjecture-scan", {"n": n, "k": k}, payload, mode, as_json, text, started)

    run_guarded(body)


# ---------------------------------------------------------------- verification suites


def _case(label: str, ok: bool, expected, computed) -> dict:
    return {"case": label, "pass": bool(ok), "expected": str(expected), "computed": str(computed)}


def table_cells(max_size: int) -> list[tuple[int, int]]:
    return [(n, k) for k in range(1, 5) for n in range(2, max_size + 1) if k * (n - 1) + 1 <= max_size]


def _table_case(args: tuple[int, int, str, int]) -> dict:
    from lanke.filippov import table_row

    n, k, mode, cap = args
    _, dec = _rho_decomposition(n, k, mode, cap)
    expected = table_row(n, k)
    return _case(f"rho n={n} k={k}", dec == expected, expected, dec)


def _presentation_case(args: tuple[Partition, str, str]) -> dict:
    from lanke.specht import specht_module

    lam, kind, mode = args
    module = specht_module(lam, kind, mode)
    ok = module.dim == hook_length_dimension(lam) and module.character() == irreducible_character(lam)
    return _case(f"{kind} presentation {lam.compact()}", ok, f"dim {hook_length_dimension(lam)}", f"dim {module.dim}")


def _kernel_case(args: tuple[Partition, Partition, int, str]) -> dict:
    from lanke.specht import phi_kernel_case

    lam1, lam2, d, mode = args
    case = phi_kernel_case(lam1, lam2, d, mode)
    label = f"phi_d kernel {lam1.compact()} * {lam2.compact()} d={d}"
    return _case(label, case.ok, case.expected, case.kernel)


def _tree_case(args: tuple) -> dict:
    from lanke.tree_specht import embed_check, format_tree, last_column_length, size

    tree, mu, mode = args
    result = embed_check(tree, mu, mode)
    nodes = size(tree)
    columns_ok = all(lam.num_columns == nodes and last_column_length(lam) == mu[0] for lam, _ in result.second)
    label = f"tree {format_tree(tree, mu)}"
    return _case(label, columns_ok and result.ok, f"second = {result.second}", f"first = {result.first}")


STABILIZATION_CELLS = ((2, 2), (3, 2), (3, 3), (4, 2), (5, 2), (2, 3), (2, 4))


def _stabilization_case(args: tuple[int, int, str, int]) -> dict:
    from lanke.filippov import beta_gamma, column_counts

    n, k, mode, cap = args
    _, dec = _rho_decomposition(n, k, mode, cap)
    counts = column_counts(dec)
    if n >= k:
        _, gamma = beta_gamma(n, k, mode)
        ok = counts == {k} and not gamma
        expected = f"columns {{{k}}}, gamma 0"
        computed = f"columns {sorted(counts)}, gamma {gamma}"
    else:
        ok = all(n <= c <= k for c in counts)
        expected = f"columns within [{n}, {k}]"
        computed = f"columns {sorted(counts)}"
    return _case(f"column counts n={n} k={k}", ok, expected, computed)


def _suite_cases(suite: str, max_size: int | None, mode: str, cap: int) -> tuple[Callable, list]:
    if suite == "table1":
        size = min(cap, max_size or 9)
        return _table_case, [(n, k, mode, cap) for n, k in table_cells(size)]
    if suite == "theorem2_3":
        size = max_size or 6
        return _presentation_case, [(lam, kind, mode) for m in range(1, size + 1) for lam in partitions_list(m) for kind in ("fulton", "new")]
    if suite == "lemma2_2":
        size = max_size or 7
        cases = []
        for total in range(2, size + 1):
            for n1 in range(1, total):
                for lam1 in partitions_list(n1):
                    for lam2 in partitions_list(total - n1):
                        cases += [(lam1, lam2, d, mode) for d in range(lam1.num_columns, 5)]
        return _kernel_case, cases
    if suite == "tree_specht":
        from lanke.tree_specht import plane_trees, t_partitions

        size = max_size or 7
        cases = []
        for nodes in range(1, 5):
            for tree in plane_trees(nodes):
                for total in range(nodes, size + 1):
                    cases += [(tree, p.mu, mode) for p in t_partitions(tree, total)]
        return _tree_case, cases
    if suite == "stabilization":
        return _stabilization_case, [(n, k, mode, cap) for n, k in STABILIZATION_CELLS if k * (n - 1) + 1 <= cap]
    raise ValueError(f"unknown suite {suite!r}")


SUITES = ("table1", "lemma2_2", "theorem2_3", "tree_specht", "stabilization")


@main.command("verify")
@click.argument("suite", type=click.Choice(SUITES))
@click.option("--max-size", type=click.IntRange(min=1), default=None, help="Largest degree included in the suite.")
@shared_options
def cmd_verify(suite: str, max_size, max_degree, mode, as_json, threads) -> None:
    """Run a verification suite; exit 0 iff every case passes."""

    def body():
        started = time.perf_counter()
        cap = _cap(max_degree)
        size = max_size if max_size is not None else (max_degree if suite == "table1" else None)
        func, cases = _suite_cases(suite, size, mode, cap)
        results = parallel_map(func, cases, threads)
        passed = sum(r["pass"] for r in results)
        lines = [
            f"{'PASS' if r['pass'] else 'FAIL'}  {r['case']}  expected: {r['expected']}  computed: {r['computed']}"
            for r in results
        ]
        lines.append(f"{passed}/{len(results)} passed")
        payload = {"suite": suite, "passed": passed, "total": len(results), "cases": results}
        emit("verify", {"suite": suite, "max_size": size}, payload, mode, as_json, "\n".join(lines), started)
        return EXIT_OK if passed == len(results) else EXIT_FAIL

    run_guarded(body)


if __name__ == "__main__":  # pragma: no cover
    main()
