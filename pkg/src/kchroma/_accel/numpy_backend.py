"""Pure numpy/Python backend: the shared kernels run uncompiled.

G(n,p) sampling is the one kernel with a genuinely vectorized form, so it
gets its own implementation here; it reproduces the counter-based draws of
rng.py (and of the numba loop) bit for bit.
"""

import numpy as np

from .. import rng
from ._impl import dfs_forest, greedy_fill, decide_step  # noqa: F401  (re-exported)

_CHUNK = 1 << 20


def _mix_array(x):
    x = x.copy()
    x ^= x >> np.uint64(30)
    x *= np.uint64(rng.MIX1)
    x ^= x >> np.uint64(27)
    x *= np.uint64(rng.MIX2)
    x ^= x >> np.uint64(31)
    return x


def gnp_edges(n, p, seed):
    """Edges of G(n, p): unordered pairs in lexicographic order, pair t
    kept iff uniform draw t+1 of the seeded stream is < p."""
    total = n * (n - 1) // 2
    if total == 0 or p <= 0.0:
        return np.empty((0, 2), dtype=np.int64)
    # offsets[i] = number of pairs (a, b) with a < i
    i_arr = np.arange(n, dtype=np.int64)
    offsets = i_arr * n - (i_arr * (i_arr + 1)) // 2
    out_u = []
    out_v = []
    seed_u = np.uint64(seed & rng.MASK64)
    golden = np.uint64(rng.GOLDEN)
    for lo in range(0, total, _CHUNK):
        hi = min(lo + _CHUNK, total)
        t = np.arange(lo + 1, hi + 1, dtype=np.uint64)
        z = _mix_array(seed_u + t * golden)
        keep = (z >> np.uint64(11)) * 2.0**-53 < p
        idx = np.nonzero(keep)[0].astype(np.int64) + lo
        if idx.size:
            row = np.searchsorted(offsets, idx, side="right") - 1
            col = idx - offsets[row] + row + 1
            out_u.append(row)
            out_v.append(col)
    if not out_u:
        return np.empty((0, 2), dtype=np.int64)
    return np.stack([np.concatenate(out_u), np.concatenate(out_v)], axis=1)
