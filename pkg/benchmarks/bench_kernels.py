#!/usr/bin/env python3
"""Timing comparison of the compiled and interpreted hot paths.

Runs the death-birth fixation kernel through numba (when enabled) and through
the plain-Python fallback on the same workload, and the two pairwise
coalescence solvers on a 100-vertex preferential-attachment graph. The two
kernel paths execute identical source and produce identical counts, so only
the timing differs; set LOOPFIX_DISABLE_NUMBA=1 to confirm the package works
without the compiler (this script will then report a 1x ratio).

Usage: python benchmarks/bench_kernels.py [--trials 20000]
"""
import argparse
import math
import time

import numpy as np

from loopfix import generators, kernels
from loopfix.coalescence import solve_pairwise_eta
from loopfix.graph import LandscapeSpec, apply_landscape
from loopfix.montecarlo import _csr_adjacency
from loopfix.walk import transition_matrix


def time_call(fn, *args, repeat=3):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--trials", type=int, default=20000)
    args = parser.parse_args()

    print(f"numba enabled: {kernels.NUMBA_ENABLED} "
          f"(set {kernels.DISABLE_ENV}=1 to force the fallback)\n")

    g = apply_landscape(generators.lattice("square", 4, 4), LandscapeSpec.ln_k())
    ptr, idx, wt = _csr_adjacency(g)
    kernel_args = (ptr, idx, wt, g.self_loops, g.strengths, 5.0, 1.0, 0.02, True)

    fast_seeds = kernels.trial_seeds(1, args.trials)
    slow_seeds = kernels.trial_seeds(1, max(args.trials // 100, 200))

    with np.errstate(over="ignore"):
        kernels.db_fixation_kernel(*kernel_args, fast_seeds[:10], 10**9)  # warm up / compile
        t_fast, out_fast = time_call(kernels.db_fixation_kernel, *kernel_args, fast_seeds, 10**9)
        t_slow, out_slow = time_call(
            kernels.db_fixation_kernel_py, *kernel_args, slow_seeds, 10**9, repeat=1
        )
        check = kernels.db_fixation_kernel(*kernel_args, slow_seeds, 10**9)
    assert check == out_slow, "compiled and interpreted kernels disagree"

    per_fast = t_fast / fast_seeds.shape[0] * 1e6
    per_slow = t_slow / slow_seeds.shape[0] * 1e6
    print("death-birth fixation kernel (4x4 lattice, delta=0.02, b/c=5)")
    print(f"  compiled    : {per_fast:9.2f} us/trial  ({fast_seeds.shape[0]} trials)")
    print(f"  interpreted : {per_slow:9.2f} us/trial  ({slow_seeds.shape[0]} trials)")
    print(f"  speedup     : {per_slow / per_fast:9.1f}x")
    print(f"  identical counts on shared seeds: {check == out_slow}\n")

    ba = generators.barabasi_albert(100, 3, seed=0)
    ba = apply_landscape(ba, LandscapeSpec.ln_k())
    w = transition_matrix(ba)
    t_direct, eta_d = time_call(solve_pairwise_eta, ba, w, "direct", repeat=2)
    t_jacobi, eta_j = time_call(solve_pairwise_eta, ba, w, "jacobi", repeat=2)
    print("pairwise coalescence solve (BA n=100, 4950 unknowns)")
    print(f"  direct (sparse LU) : {t_direct * 1e3:8.1f} ms")
    print(f"  fixed-point sweep  : {t_jacobi * 1e3:8.1f} ms")
    print(f"  max disagreement   : {np.max(np.abs(eta_d - eta_j)):.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
