"""Simple undirected graph model, validation, and deterministic generators."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _accel
from .errors import (
    DuplicateEdgeError,
    InvalidSpecError,
    SelfLoopError,
    VertexOutOfRangeError,
)


class Graph:
    """Immutable simple undirected graph.

    Vertices are the dense naturals 0..vertex_count-1. Edges are stored
    canonically (u < v, lexicographically sorted) and the derived adjacency
    is CSR with each neighbor row sorted ascending.
    """

    __slots__ = ("vertex_count", "_eu", "_ev", "_indptr", "_indices")

    def __init__(self, vertex_count, eu, ev, indptr, indices):
        # internal: use build_graph / generate / parse_dimacs_col
        self.vertex_count = int(vertex_count)
        self._eu = eu
        self._ev = ev
        self._indptr = indptr
        self._indices = indices
        for arr in (eu, ev, indptr, indices):
            arr.setflags(write=False)

    @property
    def edge_count(self) -> int:
        return int(self._eu.shape[0])

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self._indptr)

    def degree(self, v: int) -> int:
        return int(self._indptr[v + 1] - self._indptr[v])

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor row of v (read-only view)."""
        return self._indices[self._indptr[v]:self._indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        row = self.neighbors(u)
        i = int(np.searchsorted(row, v))
        return i < row.shape[0] and int(row[i]) == v

    def edge_array(self) -> np.ndarray:
        """(m, 2) array of canonical edges."""
        return np.stack([self._eu, self._ev], axis=1) if self.edge_count else \
            np.empty((0, 2), dtype=np.int64)

    def edges(self):
        """Iterate edges as (u, v) tuples with u < v, sorted."""
        for i in range(self.edge_count):
            yield int(self._eu[i]), int(self._ev[i])

    def csr(self):
        return self._indptr, self._indices

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.vertex_count == other.vertex_count
            and self._eu.shape == other._eu.shape
            and bool(np.array_equal(self._eu, other._eu))
            and bool(np.array_equal(self._ev, other._ev))
        )

    def __hash__(self):
        return hash((self.vertex_count, self.edge_count,
                     self._eu.tobytes(), self._ev.tobytes()))

    def __repr__(self):
        return f"Graph(vertices={self.vertex_count}, edges={self.edge_count})"


def build_graph(vertex_count: int, edges) -> Graph:
    """Validate and canonicalize an edge list into a Graph.

    Rejects self-loops, out-of-range endpoints, and duplicate edges (in
    either orientation). Input edge order does not affect the result.
    """
    n = int(vertex_count)
    if n < 0:
        raise VertexOutOfRangeError(n, 0)
    arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                     dtype=np.int64)
    if arr.size == 0:
        arr = arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("edges must be pairs")
    if arr.shape[0]:
        bad = (arr < 0) | (arr >= n)
        if bad.any():
            idx = int(np.argmax(bad.any(axis=1)))
            u, v = int(arr[idx, 0]), int(arr[idx, 1])
            raise VertexOutOfRangeError(u if not (0 <= u < n) else v, n)
        loops = arr[:, 0] == arr[:, 1]
        if loops.any():
            raise SelfLoopError(int(arr[int(np.argmax(loops)), 0]))
    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    order = np.lexsort((hi, lo))
    lo, hi = lo[order], hi[order]
    if lo.shape[0] > 1:
        dup = (lo[1:] == lo[:-1]) & (hi[1:] == hi[:-1])
        if dup.any():
            i = int(np.argmax(dup))
            raise DuplicateEdgeError(int(lo[i]), int(hi[i]))
    return _from_canonical(n, lo, hi)


def _from_canonical(n: int, lo: np.ndarray, hi: np.ndarray) -> Graph:
    endpoints = np.concatenate([lo, hi])
    others = np.concatenate([hi, lo])
    order = np.lexsort((others, endpoints))
    indices = np.ascontiguousarray(others[order])
    counts = np.bincount(endpoints, minlength=n) if endpoints.size else np.zeros(n, dtype=np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    g = Graph(n, np.ascontiguousarray(lo), np.ascontiguousarray(hi), indptr, indices)
    assert int(indptr[-1]) == 2 * g.edge_count  # handshake: sum of degrees = 2|E|
    return g


def max_degree(g: Graph) -> int:
    """Largest vertex degree; 0 for empty or edgeless graphs."""
    if g.vertex_count == 0 or g.edge_count == 0:
        return 0
    return int(g.degrees.max())


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges."""
    n = g.vertex_count
    adj = np.zeros((n, n), dtype=bool)
    if g.edge_count:
        ea = g.edge_array()
        adj[ea[:, 0], ea[:, 1]] = True
        adj[ea[:, 1], ea[:, 0]] = True
    iu = np.triu_indices(n, k=1)
    keep = ~adj[iu]
    edges = np.stack([iu[0][keep], iu[1][keep]], axis=1).astype(np.int64)
    return build_graph(n, edges)


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, np.ndarray]:
    """Subgraph induced on `vertices`; returns (subgraph, original_ids).

    original_ids[i] is the vertex of g that became vertex i.
    """
    keep = np.unique(np.asarray(list(vertices), dtype=np.int64))
    if keep.size and (keep[0] < 0 or keep[-1] >= g.vertex_count):
        bad = int(keep[0]) if keep[0] < 0 else int(keep[-1])
        raise VertexOutOfRangeError(bad, g.vertex_count)
    mask = np.zeros(g.vertex_count, dtype=bool)
    mask[keep] = True
    ea = g.edge_array()
    sel = mask[ea[:, 0]] & mask[ea[:, 1]] if ea.shape[0] else np.zeros(0, dtype=bool)
    sub_edges = ea[sel]
    remapped = np.searchsorted(keep, sub_edges) if sub_edges.size else sub_edges
    return build_graph(int(keep.size), remapped), keep


@dataclass(frozen=True)
class GeneratorSpec:
    """Deterministic graph family description.

    kind: cycle | path | complete | complete_bipartite | gnp.
    n is the primary size, m the second part size (complete_bipartite),
    p the edge probability and seed the stream seed (gnp only).
    """

    kind: str
    n: int
    m: int = 0
    p: float = 0.0
    seed: int = 0

    def validate(self):
        if self.kind not in ("cycle", "path", "complete", "complete_bipartite", "gnp"):
            raise InvalidSpecError(f"unknown generator kind {self.kind!r}")
        if self.kind == "cycle" and self.n < 3:
            raise InvalidSpecError("cycle requires size >= 3")
        if self.kind == "path" and self.n < 1:
            raise InvalidSpecError("path requires size >= 1")
        if self.n < 0 or self.m < 0:
            raise InvalidSpecError("sizes must be nonnegative")
        if self.kind == "gnp" and not (0.0 <= self.p <= 1.0):
            raise InvalidSpecError("gnp requires 0 <= p <= 1")

    def canonical_string(self) -> str:
        if self.kind == "complete_bipartite":
            return f"complete_bipartite:{self.n},{self.m}"
        if self.kind == "gnp":
            return f"gnp:{self.n},{self.p!r},{self.seed}"
        return f"{self.kind}:{self.n}"


def parse_spec(text: str) -> GeneratorSpec:
    """Parse a CLI generator spec like 'cycle:12' or 'gnp:20,0.25,7'."""
    kind, _, rest = text.strip().partition(":")
    kind = kind.strip()
    parts = [s.strip() for s in rest.split(",")] if rest else []
    try:
        if kind in ("cycle", "path", "complete"):
            if len(parts) != 1:
                raise ValueError
            spec = GeneratorSpec(kind, int(parts[0]))
        elif kind == "complete_bipartite":
            if len(parts) != 2:
                raise ValueError
            spec = GeneratorSpec(kind, int(parts[0]), m=int(parts[1]))
        elif kind == "gnp":
            if len(parts) != 3:
                raise ValueError
            spec = GeneratorSpec(kind, int(parts[0]), p=float(parts[1]), seed=int(parts[2]))
        else:
            raise InvalidSpecError(f"unknown generator kind {kind!r}")
    except (ValueError, IndexError):
        raise InvalidSpecError(f"cannot parse generator spec {text!r}") from None
    spec.validate()
    return spec


def generate(spec: GeneratorSpec) -> Graph:
    """Materialize a GeneratorSpec; gnp is bit-reproducible per seed."""
    spec.validate()
    n = spec.n
    if spec.kind == "cycle":
        u = np.arange(n - 1, dtype=np.int64)
        edges = np.concatenate([np.stack([u, u + 1], axis=1),
                                np.array([[0, n - 1]], dtype=np.int64)])
        return build_graph(n, edges)
    if spec.kind == "path":
        u = np.arange(n - 1, dtype=np.int64)
        return build_graph(n, np.stack([u, u + 1], axis=1))
    if spec.kind == "complete":
        iu = np.triu_indices(n, k=1)
        return build_graph(n, np.stack(iu, axis=1).astype(np.int64))
    if spec.kind == "complete_bipartite":
        left = np.repeat(np.arange(spec.n, dtype=np.int64), spec.m)
        right = np.tile(np.arange(spec.m, dtype=np.int64) + spec.n, spec.n)
        return build_graph(spec.n + spec.m, np.stack([left, right], axis=1))
    edges = _accel.gnp_edges(n, float(spec.p), spec.seed)
    return build_graph(n, edges)
