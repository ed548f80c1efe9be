"""Backend selection for the hot kernels.

KCHROMA_BACKEND=numba forces the JIT backend (error if numba is missing),
KCHROMA_BACKEND=numpy forces the uncompiled fallback, and the default
(auto) uses numba when importable. Both backends produce identical
results; see benchmarks/compare_backends.py for the speed difference.
"""

import os

from ._impl import RUNNING, SAT, UNSAT, NODE_BUDGET  # noqa: F401

_requested = os.environ.get("KCHROMA_BACKEND", "auto").strip().lower()
if _requested not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"KCHROMA_BACKEND must be 'auto', 'numba' or 'numpy', got {_requested!r}"
    )

if _requested == "numpy":
    from . import numpy_backend as _backend

    BACKEND = "numpy"
else:
    try:
        from . import numba_backend as _backend

        BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        from . import numpy_backend as _backend

        BACKEND = "numpy"

dfs_forest = _backend.dfs_forest
greedy_fill = _backend.greedy_fill
decide_step = _backend.decide_step
gnp_edges = _backend.gnp_edges
