"""2-colorability with a constructive answer either way.

A depth-first forest labels every vertex with its level (DFI). Tree edges
change level parity, so a non-tree edge joining two vertices of equal
parity closes an odd cycle: the two tree paths to the lowest common
ancestor plus the edge itself. If no such edge exists, level parity is a
proper 2-coloring. Each edge is examined at most twice.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _accel
from .coloring import Coloring
from .graph import Graph


@dataclass(frozen=True)
class DfiTrace:
    """Depth-first forest: per-vertex level, parent (-1 at roots), and the
    root of the vertex's component."""

    dfi: np.ndarray
    parent: np.ndarray
    root: np.ndarray


@dataclass(frozen=True)
class OddCycleCertificate:
    """Closed walk v_0 .. v_{2m} (wrap edge v_{2m}v_0 implied), odd length,
    no repeated vertex, every consecutive pair an edge."""

    vertices: tuple[int, ...]

    def __len__(self):
        return len(self.vertices)

    def check(self, g: Graph) -> bool:
        vs = self.vertices
        if len(vs) < 3 or len(vs) % 2 == 0:
            return False
        if len(set(vs)) != len(vs):
            return False
        return all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


@dataclass(frozen=True)
class TwoColorResult:
    """Exactly one of coloring / odd_cycle is present."""

    coloring: Coloring | None
    odd_cycle: OddCycleCertificate | None

    def __post_init__(self):
        if (self.coloring is None) == (self.odd_cycle is None):
            raise ValueError("exactly one outcome must be present")

    @property
    def colorable(self) -> bool:
        return self.coloring is not None


def _extract_cycle(dfi, parent, v, u):
    """Odd cycle through non-tree edge (v, u): both tree paths to the LCA."""
    path_v = [int(v)]
    path_u = [int(u)]
    a, b = int(v), int(u)
    while dfi[a] > dfi[b]:
        a = int(parent[a])
        path_v.append(a)
    while dfi[b] > dfi[a]:
        b = int(parent[b])
        path_u.append(b)
    while a != b:
        a = int(parent[a])
        path_v.append(a)
        b = int(parent[b])
        path_u.append(b)
    return tuple(path_v + path_u[-2::-1])


def dfi_levels(g: Graph, start: int = 0) -> DfiTrace:
    """Full traversal forest.  Deterministic: roots are `start` then the
    lowest-indexed unvisited vertices; neighbors in ascending order."""
    if g.vertex_count == 0:
        empty = np.empty(0, dtype=np.int64)
        return DfiTrace(empty, empty.copy(), empty.copy())
    indptr, indices = g.csr()
    dfi, parent, root, _, _ = _accel.dfs_forest(indptr, indices, start, False)
    return DfiTrace(dfi, parent, root)


def two_color(g: Graph, start: int = 0) -> TwoColorResult:
    """Decide 2-colorability; returns a {0,1} coloring or an odd cycle."""
    if g.vertex_count == 0:
        return TwoColorResult(Coloring(np.empty(0, dtype=np.int64), 2), None)
    indptr, indices = g.csr()
    dfi, parent, _, conf_u, conf_v = _accel.dfs_forest(indptr, indices, start, True)
    if conf_u >= 0:
        cert = OddCycleCertificate(_extract_cycle(dfi, parent, conf_u, conf_v))
        return TwoColorResult(None, cert)
    return TwoColorResult(Coloring(dfi & 1, 2), None)
