#!/usr/bin/env python3
"""Time the hot kernels under the numba backend vs the pure numpy/Python
fallback. Results are identical by construction (see tests/test_backends.py);
this script shows what the JIT buys.

Usage: python3 benchmarks/compare_backends.py [--repeat N]
"""

import argparse
import time

import numpy as np

from kchroma import GeneratorSpec, generate
from kchroma._accel import numpy_backend

try:
    from kchroma._accel import numba_backend
except ImportError:
    numba_backend = None


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def drive_decide(backend, g, k):
    n = g.vertex_count
    indptr, indices = g.csr()
    colors = np.full(n, -1, dtype=np.int64)
    avail = np.ones((n, k), dtype=np.bool_)
    dof = np.full(n, k, dtype=np.int64)
    frames = [np.empty(n, dtype=np.int64) for _ in range(5)]
    trail = np.empty(max(1, 2 * g.edge_count), dtype=np.int64)
    state = np.zeros(8, dtype=np.int64)
    while int(backend.decide_step(indptr, indices, k, colors, avail, dof,
                                  *frames, trail, state, 1 << 62, 1 << 15)) == 0:
        pass


def workloads():
    big_cycle = generate(GeneratorSpec("cycle", 100_000))
    indptr_c, indices_c = big_cycle.csr()
    sparse = generate(GeneratorSpec("gnp", 4000, p=0.002, seed=7))
    indptr_s, indices_s = sparse.csr()
    order = np.arange(sparse.vertex_count, dtype=np.int64)
    # near the 3-colorability phase transition; ~130k search nodes
    hard = generate(GeneratorSpec("gnp", 90, p=0.052, seed=29))
    yield ("dfs_forest cycle(1e5)",
           lambda b: b.dfs_forest(indptr_c, indices_c, 0, True))
    yield ("dfs_forest gnp(4000,.002)",
           lambda b: b.dfs_forest(indptr_s, indices_s, 0, True))
    yield ("greedy_fill gnp(4000,.002)",
           lambda b: b.greedy_fill(indptr_s, indices_s, order))
    yield ("decide gnp(90,.052) k=3", lambda b: drive_decide(b, hard, 3))
    yield ("gnp_edges(2000,.01)", lambda b: b.gnp_edges(2000, 0.01, 42))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if numba_backend is None:
        print("numba not installed: only the numpy backend is available")
    rows = []
    for name, fn in workloads():
        t_np = best_of(lambda: fn(numpy_backend), args.repeat)
        if numba_backend is not None:
            fn(numba_backend)  # compile outside the timed region
            t_nb = best_of(lambda: fn(numba_backend), args.repeat)
            rows.append((name, t_np, t_nb, t_np / t_nb))
        else:
            rows.append((name, t_np, None, None))
    width = max(len(r[0]) for r in rows)
    print(f"{'kernel / workload':<{width}}  {'numpy':>10}  {'numba':>10}  speedup")
    for name, t_np, t_nb, ratio in rows:
        if t_nb is None:
            print(f"{name:<{width}}  {t_np:>10.5f}  {'-':>10}  -")
        else:
            print(f"{name:<{width}}  {t_np:>10.5f}  {t_nb:>10.5f}  {ratio:>6.1f}x")


if __name__ == "__main__":
    main()
