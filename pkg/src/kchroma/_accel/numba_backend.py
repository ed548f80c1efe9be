"""numba backend: the shared kernels JIT-compiled, plus a loop G(n,p)."""

import numpy as np
from numba import njit

from .. import rng
from . import _impl

dfs_forest = njit(cache=True)(_impl.dfs_forest)
greedy_fill = njit(cache=True)(_impl.greedy_fill)
decide_step = njit(cache=True)(_impl.decide_step)

_U11 = np.uint64(11)
_U27 = np.uint64(27)
_U30 = np.uint64(30)
_U31 = np.uint64(31)
_GOLDEN = np.uint64(rng.GOLDEN)
_MIX1 = np.uint64(rng.MIX1)
_MIX2 = np.uint64(rng.MIX2)
_INV53 = 2.0**-53


@njit(cache=True)
def _pair_keep(seed_u, t, p):
    x = seed_u + t * _GOLDEN
    x ^= x >> _U30
    x *= _MIX1
    x ^= x >> _U27
    x *= _MIX2
    x ^= x >> _U31
    return np.float64(x >> _U11) * _INV53 < p


@njit(cache=True)
def gnp_edges(n, p, seed):
    """Same pair stream as the numpy backend, two passes (count then fill)."""
    seed_u = np.uint64(seed)
    m = 0
    t = np.uint64(0)
    one = np.uint64(1)
    for i in range(n - 1):
        for j in range(i + 1, n):
            t += one
            if _pair_keep(seed_u, t, p):
                m += 1
    edges = np.empty((m, 2), dtype=np.int64)
    w = 0
    t = np.uint64(0)
    for i in range(n - 1):
        for j in range(i + 1, n):
            t += one
            if _pair_keep(seed_u, t, p):
                edges[w, 0] = i
                edges[w, 1] = j
                w += 1
    return edges
