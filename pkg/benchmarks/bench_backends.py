"""Benchmark the numba kernels against the pure-numpy fallback.

Times the two hot canonicalization kernels on identical random workloads
and prints one table row per case.  Outputs are cross-checked for exact
equality while timing, so a speed win can never hide a semantic drift.

Usage:
    python benchmarks/bench_backends.py [--dims 4 5 6] [--matrices 200]
        [--sets 20000] [--repeats 3]
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from cubesimplex._backends import get_backend, perm_table
from cubesimplex.bitcore import BinMatrix
from cubesimplex.canon import _origin_variants
from cubesimplex.exact import bareiss_determinant


def matrix_workload(rng: random.Random, n: int, count: int) -> list[np.ndarray]:
    batches = []
    while len(batches) < count:
        M = BinMatrix.from_rows(
            [[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]
        )
        if bareiss_determinant(M) == 0:
            continue
        batches.append(np.array(_origin_variants(M), dtype=np.uint16))
    return batches


def sets_workload(rng: random.Random, n: int, count: int) -> np.ndarray:
    rows = []
    for _ in range(count):
        members = rng.sample(range(1, 1 << n), n)
        rows.append(tuple(sorted([0] + members)))
    return np.array(rows, dtype=np.uint16)


def time_matrix_kernel(backend, batches, table, repeats: int) -> tuple[float, list]:
    best = float("inf")
    outputs = []
    for _ in range(repeats):
        outputs = []
        start = time.perf_counter()
        for origin_rows in batches:
            outputs.append(backend.canonical_matrix(origin_rows, table))
        best = min(best, time.perf_counter() - start)
    return best, [(list(rows), o, p) for rows, o, p in outputs]


def time_sets_kernel(backend, batch, table, repeats: int) -> tuple[float, list]:
    best = float("inf")
    output = None
    for _ in range(repeats):
        start = time.perf_counter()
        output = backend.canonical_sets(batch, table)
        best = min(best, time.perf_counter() - start)
    return best, output.tolist()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dims", type=int, nargs="+", default=[4, 5, 6])
    parser.add_argument("--matrices", type=int, default=200)
    parser.add_argument("--sets", type=int, default=20000)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=12345)
    args = parser.parse_args()

    numba = get_backend("numba")
    numpy_backend = get_backend("numpy")
    rng = random.Random(args.seed)

    header = f"{'kernel':<18} {'n':>2} {'numba [s]':>10} {'numpy [s]':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n in args.dims:
        table = perm_table(n)

        batches = matrix_workload(rng, n, args.matrices)
        # warm-up outside the timed region: triggers JIT compilation
        numba.canonical_matrix(batches[0], table)
        t_nb, out_nb = time_matrix_kernel(numba, batches, table, args.repeats)
        t_np, out_np = time_matrix_kernel(numpy_backend, batches, table, args.repeats)
        if out_nb != out_np:
            raise SystemExit(f"canonical_matrix outputs differ at n={n}")
        print(
            f"{'canonical_matrix':<18} {n:>2} {t_nb:>10.4f} {t_np:>10.4f}"
            f" {t_np / t_nb:>7.1f}x"
        )

        batch = sets_workload(rng, n, args.sets)
        numba.canonical_sets(batch[:16], table)
        t_nb, out_nb = time_sets_kernel(numba, batch, table, args.repeats)
        t_np, out_np = time_sets_kernel(numpy_backend, batch, table, args.repeats)
        if out_nb != out_np:
            raise SystemExit(f"canonical_sets outputs differ at n={n}")
        print(
            f"{'canonical_sets':<18} {n:>2} {t_nb:>10.4f} {t_np:>10.4f}"
            f" {t_np / t_nb:>7.1f}x"
        )


if __name__ == "__main__":
    main()
