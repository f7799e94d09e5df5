#!/usr/bin/env python3
"""Benchmark the mod-p rank kernels: numba @njit vs the pure-numpy fallback.

Times both implementations on synthetic ±1 matrices and on real torus-weight
blocks of the Koszul differential (the hot path of the verify sweeps).

Usage:
    python benchmarks/bench_rank.py --sizes 64,128,256,512 --repeats 5
"""

import argparse
import statistics
import sys
import time

import numpy as np

from vsyz import _rank_kernels
from vsyz.exactla import DEFAULT_PRIMES

try:
    numba_impl = _rank_kernels._build_numba_impl()
    HAS_NUMBA = True
except ImportError:
    numba_impl = None
    HAS_NUMBA = False
    print("warning: numba not importable, timing numpy only", file=sys.stderr)

numpy_impl = _rank_kernels._rank_mod_p_numpy

P = DEFAULT_PRIMES[0]


def time_impl(impl, mat, repeats):
    best = []
    rank = None
    for _ in range(repeats):
        work = mat.copy()
        t0 = time.perf_counter()
        rank = impl(work, P)
        best.append(time.perf_counter() - t0)
    return rank, statistics.median(best)


def synthetic_cases(sizes, rng):
    for size in sizes:
        mat = rng.integers(-1, 2, size=(size, size)).astype(np.int64)
        yield f"random +-1 {size}x{size}", mat


def koszul_cases():
    from vsyz.koszul import _block_matrix
    from vsyz.partitions import enumerate_partitions

    for (n, a, p, q) in [(4, 0, 3, 1), (4, 1, 5, 3), (4, 0, 5, 2)]:
        total = 2 * p + a + 2 * q
        biggest = None
        for lam in enumerate_partitions(total, n):
            mu = lam + (0,) * (n - len(lam))
            block = _block_matrix(n, a, p, q, mu)
            if biggest is None or block.size > biggest[1].size:
                biggest = (f"koszul block n={n} a={a} p={p} q={q} "
                           f"{block.shape[0]}x{block.shape[1]}", block)
        if biggest is not None and biggest[1].size:
            yield biggest


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="64,128,256,512",
                        help="comma separated synthetic matrix sizes")
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=20240711)
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",") if s]
    rng = np.random.default_rng(args.seed)
    cases = list(synthetic_cases(sizes, rng)) + list(koszul_cases())

    if HAS_NUMBA:
        # compile outside the timed region
        numba_impl(np.ones((2, 2), dtype=np.int64), P)

    header = f"{'case':<42} {'rank':>6} {'numpy ms':>10}"
    if HAS_NUMBA:
        header += f" {'numba ms':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, mat in cases:
        rank_np, t_np = time_impl(numpy_impl, mat, args.repeats)
        line = f"{name:<42} {rank_np:>6} {t_np * 1e3:>10.2f}"
        if HAS_NUMBA:
            rank_nb, t_nb = time_impl(numba_impl, mat, args.repeats)
            if rank_nb != rank_np:
                raise AssertionError(f"backend disagreement on {name}: "
                                     f"{rank_np} vs {rank_nb}")
            line += f" {t_nb * 1e3:>10.2f} {t_np / t_nb:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
