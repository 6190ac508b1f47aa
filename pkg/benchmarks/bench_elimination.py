"""Compare the compiled and pure-Python modular elimination kernels.

Times ``modular_echelon`` on the relation matrices of a few ``rho_{n,k}``
cells and on random sparse matrices, for each available backend.

Usage: python3 benchmarks/bench_elimination.py [--cells 3,3 4,3] [--repeat 3]
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from lanke.filippov import build_rho
from lanke.linalg import BACKEND
from lanke.linalg.modular import PRIMES, IntegerRows, modular_echelon


def relation_matrix(n: int, k: int) -> IntegerRows:
    module = build_rho(n, k).module
    return IntegerRows.from_rows(module.relations, module.ambient_dim)


def random_matrix(nrows: int, ncols: int, per_row: int, seed: int) -> IntegerRows:
    rng = random.Random(seed)
    rows = [{rng.randrange(ncols): rng.randint(-3, 3) or 1 for _ in range(per_row)} for _ in range(nrows)]
    return IntegerRows.from_rows(rows, ncols)


def best_time(rows: IntegerRows, backend: str, repeat: int) -> tuple[float, int]:
    times = []
    for _ in range(repeat):
        started = time.perf_counter()
        ech = modular_echelon(rows, PRIMES[0], backend)
        times.append(time.perf_counter() - started)
    return min(times), ech.rank


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--cells", nargs="*", default=["3,3", "2,5", "4,3"], help="cells n,k")
    parser.add_argument("--random", nargs="*", default=["800,600,6"], help="random matrices rows,cols,nnz-per-row")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = ["python"] + (["compiled"] if BACKEND == "compiled" else [])
    cases = []
    for cell in args.cells:
        n, k = map(int, cell.split(","))
        cases.append((f"rho({n},{k})", relation_matrix(n, k)))
    for i, spec in enumerate(args.random):
        r, c, per = map(int, spec.split(","))
        cases.append((f"random {r}x{c}", random_matrix(r, c, per, i)))

    header = f"{'case':<20}{'rows':>8}{'cols':>8}{'rank':>8}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, rows in cases:
        results = [best_time(rows, b, args.repeat) for b in backends]
        ranks = {rank for _, rank in results}
        if len(ranks) != 1:
            raise SystemExit(f"{label}: backends disagree on the rank {ranks}")
        line = f"{label:<20}{rows.nrows:>8}{rows.ncols:>8}{ranks.pop():>8}"
        line += "".join(f"{t:>11.3f}s" for t, _ in results)
        if len(results) == 2:
            line += f"{results[0][0] / max(results[1][0], 1e-9):>9.1f}x"
        print(line)


if __name__ == "__main__":
    np.seterr(all="raise")
    main()
