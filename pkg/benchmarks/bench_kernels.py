"""Compare the numba and pure-numpy kernel paths.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Both implementations are imported directly, so the MUBKIT_NO_NUMBA flag does
not matter here. JIT compilation is triggered once before timing.
"""
import argparse
import time

import numpy as np

from mubkit import kernels
from mubkit._accel import NUMBA_AVAILABLE
from mubkit.constructions import construct_mubs


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    stack = construct_mubs(31).dense()
    adj_first = kernels.coprime_adjacency(105)
    adj_all = kernels.coprime_adjacency(45)
    return [
        ("phase sum, 10^6 terms",
         lambda: kernels.quadratic_phase_sum_numba(7, 3, 10**6, 999983),
         lambda: kernels.quadratic_phase_sum_numpy(7, 3, 10**6, 999983)),
        ("overlap extremes, d=31, 32 bases",
         lambda: kernels.overlap_extremes_numba(stack),
         lambda: kernels.overlap_extremes_numpy(stack)),
        ("first max clique, d=105",
         lambda: kernels.max_cliques_numba(adj_first, False, 8),
         lambda: kernels.max_cliques_numpy(adj_first, False)),
        ("all max cliques, d=45",
         lambda: kernels.max_cliques_numba(adj_all, True, 8),
         lambda: kernels.max_cliques_numpy(adj_all, True)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not NUMBA_AVAILABLE:
        raise SystemExit("numba is not installed; nothing to compare")

    print(f"{'kernel':36s} {'numba':>10s} {'numpy':>10s} {'speedup':>8s}")
    for name, fast, slow in cases():
        a, b = fast(), slow()  # warm-up and agreement check
        if not np.allclose(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)):
            raise SystemExit(f"{name}: paths disagree")
        tn, tp = best_of(fast, args.repeat), best_of(slow, args.repeat)
        print(f"{name:36s} {tn * 1e3:8.2f}ms {tp * 1e3:8.2f}ms {tp / tn:7.1f}x")


if __name__ == "__main__":
    main()
