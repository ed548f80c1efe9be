"""Coloring verification, first-fit greedy, and exact k-coloring search.

The exact search realizes per-vertex degrees of freedom (colors not used by
any colored neighbor) as both pruning rule and branch heuristic: branch on
the vertex with the fewest open colors, undo any assignment that zeroes a
neighbor's count. Colors are introduced in ascending order, which removes
palette permutations. NotColorable is only ever reported after the search
space is exhausted; budget cutoffs produce an explicit BudgetExhausted.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import _accel
from .errors import LengthMismatchError, NotAPermutationError
from .graph import Graph, max_degree

_STEP_QUOTA = 1 << 15
_NO_LIMIT = 1 << 62


class Coloring:
    """Per-vertex color indices below a fixed palette size."""

    __slots__ = ("colors", "palette_size")

    def __init__(self, colors, palette_size: int):
        arr = np.array(colors, dtype=np.int64)  # own copy, frozen below
        arr.setflags(write=False)
        self.colors = arr
        self.palette_size = int(palette_size)

    def __len__(self):
        return int(self.colors.shape[0])

    def as_list(self) -> list[int]:
        return [int(c) for c in self.colors]

    def colors_used(self) -> int:
        return int(self.colors.max()) + 1 if len(self) else 0

    def __eq__(self, other):
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.palette_size == other.palette_size and bool(
            np.array_equal(self.colors, other.colors)
        )

    def __repr__(self):
        return f"Coloring(k={self.palette_size}, colors={self.as_list()})"


@dataclass(frozen=True)
class GreedyResult:
    coloring: Coloring
    colors_used: int
    order: tuple[int, ...]


@dataclass
class SearchStats:
    nodes_expanded: int = 0
    backtracks: int = 0
    wall_time: float = 0.0


@dataclass(frozen=True)
class Budget:
    """Optional limits for the exact search; None means unlimited."""

    max_nodes: int | None = None
    max_seconds: float | None = None


@dataclass(frozen=True)
class Colorable:
    coloring: Coloring
    stats: SearchStats


@dataclass(frozen=True)
class NotColorable:
    stats: SearchStats


@dataclass(frozen=True)
class BudgetExhausted:
    stats: SearchStats
    reason: str  # "nodes" or "time"


@dataclass(frozen=True)
class ExactChromatic:
    value: int
    coloring: Coloring
    stats: SearchStats


@dataclass(frozen=True)
class ChromaticBounds:
    """Budget ran out: chromatic number lies in [lower, upper]."""

    lower: int
    upper: int
    stats: SearchStats


def verify_coloring(g: Graph, c: Coloring) -> bool:
    """True iff no edge is monochromatic and every color index < palette."""
    if len(c) != g.vertex_count:
        raise LengthMismatchError(g.vertex_count, len(c))
    cols = c.colors
    if g.vertex_count and (bool((cols < 0).any()) or bool((cols >= c.palette_size).any())):
        return False
    if g.edge_count == 0:
        return True
    ea = g.edge_array()
    return bool((cols[ea[:, 0]] != cols[ea[:, 1]]).all())


def greedy_color(g: Graph, order=None) -> GreedyResult:
    """First-fit along `order` (default 0..n-1): each vertex takes the
    smallest color absent from its already-colored neighbors. Uses at most
    max_degree+1 colors; the count is the Grundy number of the order."""
    n = g.vertex_count
    if order is None:
        order_arr = np.arange(n, dtype=np.int64)
    else:
        order_arr = np.asarray(list(order), dtype=np.int64)
        ok = order_arr.shape[0] == n
        if ok and n:
            ok = bool(order_arr.min() >= 0) and bool(order_arr.max() < n) \
                and bool((np.bincount(order_arr, minlength=n) == 1).all())
        if not ok:
            raise NotAPermutationError()
    if n == 0:
        return GreedyResult(Coloring(np.empty(0, dtype=np.int64), 0), 0, ())
    indptr, indices = g.csr()
    colors, used = _accel.greedy_fill(indptr, indices, order_arr)
    return GreedyResult(Coloring(colors, int(used)), int(used),
                        tuple(int(v) for v in order_arr))


def _run_search(g: Graph, k: int, budget: Budget | None):
    """Chunked kernel driver; returns (status, colors, stats, reason)."""
    n = g.vertex_count
    indptr, indices = g.csr()
    colors = np.full(n, -1, dtype=np.int64)
    avail = np.ones((n, k), dtype=np.bool_)
    dof = np.full(n, k, dtype=np.int64)
    frame_vertex = np.empty(n, dtype=np.int64)
    frame_color = np.empty(n, dtype=np.int64)
    frame_next = np.empty(n, dtype=np.int64)
    frame_new = np.empty(n, dtype=np.int64)
    frame_trail = np.empty(n, dtype=np.int64)
    trail = np.empty(max(1, 2 * g.edge_count), dtype=np.int64)
    state = np.zeros(8, dtype=np.int64)
    max_nodes = _NO_LIMIT
    deadline = None
    if budget is not None:
        if budget.max_nodes is not None:
            max_nodes = int(budget.max_nodes)
        if budget.max_seconds is not None:
            deadline = time.perf_counter() + float(budget.max_seconds)
    t0 = time.perf_counter()
    while True:
        status = int(_accel.decide_step(
            indptr, indices, k, colors, avail, dof,
            frame_vertex, frame_color, frame_next, frame_new, frame_trail,
            trail, state, max_nodes, _STEP_QUOTA,
        ))
        if status != _accel.RUNNING:
            reason = "nodes" if status == _accel.NODE_BUDGET else ""
            break
        if deadline is not None and time.perf_counter() > deadline:
            status = _accel.NODE_BUDGET
            reason = "time"
            break
    stats = SearchStats(int(state[5]), int(state[6]), time.perf_counter() - t0)
    return status, colors, stats, reason


def decide_k_colorable(g: Graph, k: int, budget: Budget | None = None):
    """Exact decision: Colorable (with a verified coloring), NotColorable
    (exhaustive proof), or BudgetExhausted."""
    if k < 0:
        raise ValueError("k must be a natural number")
    n = g.vertex_count
    t0 = time.perf_counter()
    if n == 0:
        return Colorable(Coloring(np.empty(0, dtype=np.int64), k),
                         SearchStats(0, 0, time.perf_counter() - t0))
    if k == 0:
        return NotColorable(SearchStats(0, 0, time.perf_counter() - t0))
    if k == 1:
        if g.edge_count == 0:
            return Colorable(Coloring(np.zeros(n, dtype=np.int64), k),
                             SearchStats(0, 0, time.perf_counter() - t0))
        return NotColorable(SearchStats(0, 0, time.perf_counter() - t0))
    k_eff = min(k, max_degree(g) + 1)
    status, colors, stats, reason = _run_search(g, k_eff, budget)
    if status == _accel.SAT:
        coloring = Coloring(colors, k)
        assert verify_coloring(g, coloring)
        return Colorable(coloring, stats)
    if status == _accel.UNSAT:
        return NotColorable(stats)
    return BudgetExhausted(stats, reason)


def _greedy_clique_size(g: Graph) -> int:
    """Cheap clique lower bound: grow greedily by descending degree."""
    n = g.vertex_count
    if n == 0:
        return 0
    degs = g.degrees
    order = sorted(range(n), key=lambda v: (-int(degs[v]), v))
    members: list[int] = []
    for v in order:
        if all(g.has_edge(v, u) for u in members):
            members.append(v)
    return len(members)


def chromatic_number(g: Graph, budget: Budget | None = None):
    """Smallest k admitting a proper coloring, searched upward from a
    greedy clique bound and capped by the greedy coloring (<= Δ+1). On
    budget exhaustion returns the bracketing ChromaticBounds."""
    n = g.vertex_count
    total = SearchStats()
    t0 = time.perf_counter()
    if n == 0:
        total.wall_time = time.perf_counter() - t0
        return ExactChromatic(0, Coloring(np.empty(0, dtype=np.int64), 0), total)
    greedy = greedy_color(g)
    upper = greedy.colors_used
    lower = max(1, _greedy_clique_size(g))
    deadline = None
    nodes_left = None
    if budget is not None:
        if budget.max_seconds is not None:
            deadline = t0 + float(budget.max_seconds)
        if budget.max_nodes is not None:
            nodes_left = int(budget.max_nodes)
    for k in range(lower, upper + 1):
        if k == upper:
            total.wall_time = time.perf_counter() - t0
            return ExactChromatic(k, greedy.coloring, total)
        sub_budget = None
        if deadline is not None or nodes_left is not None:
            secs = None if deadline is None else max(0.0, deadline - time.perf_counter())
            sub_budget = Budget(max_nodes=nodes_left, max_seconds=secs)
        res = decide_k_colorable(g, k, sub_budget)
        total.nodes_expanded += res.stats.nodes_expanded
        total.backtracks += res.stats.backtracks
        if nodes_left is not None:
            nodes_left = max(0, nodes_left - res.stats.nodes_expanded)
        if isinstance(res, Colorable):
            total.wall_time = time.perf_counter() - t0
            return ExactChromatic(k, res.coloring, total)
        if isinstance(res, BudgetExhausted):
            total.wall_time = time.perf_counter() - t0
            return ChromaticBounds(k, upper, total)
    raise AssertionError("greedy coloring bounds the loop")
