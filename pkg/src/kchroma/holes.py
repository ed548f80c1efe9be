"""Sound-but-incomplete 3-coloring by hole placement and rotation.

Odd cycles are the obstruction to 2-coloring, so the heuristic picks one
"hole" vertex per discovered odd cycle to carry the third color, keeps the
holes pairwise non-adjacent, and 2-colors what remains. When that fails it
rotates a hole one position along its cycle of origin (or drops a fresh
hole onto a still-uncovered odd cycle) and keeps the move if the conflict
score drops, occasionally accepting regressions early on to escape
plateaus. A returned coloring is always verified; Unknown never claims
non-colorability.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bipartite import OddCycleCertificate, two_color
from .coloring import Coloring, greedy_color, verify_coloring
from .graph import Graph, induced_subgraph
from .rng import MixStream

_FIND_LIMIT = 8
_SCORE_LIMIT = 4


@dataclass(frozen=True)
class HoleState:
    """Hole set and rotation bookkeeping at the end of a run."""

    holes: tuple[int, ...]
    rotation_steps: int
    budget: int
    remainder_bipartite: bool


@dataclass(frozen=True)
class HeuristicOutcome:
    """Either a verified <=3-coloring or Unknown with the final state."""

    coloring: Coloring | None
    state: HoleState
    reason: str | None = None

    @property
    def found(self) -> bool:
        return self.coloring is not None


def find_odd_cycles(g: Graph, limit: int) -> list[OddCycleCertificate]:
    """Up to `limit` distinct odd cycles from depth-first traversals rooted
    at varied vertices. Empty list iff the graph is bipartite."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    n = g.vertex_count
    if n == 0:
        return []
    found: list[OddCycleCertificate] = []
    seen: set[tuple[int, ...]] = set()
    max_roots = min(n, max(64, 4 * limit))
    for r in range(max_roots):
        res = two_color(g, start=r)
        if res.colorable:
            break  # any full traversal without conflict proves bipartiteness
        cert = res.odd_cycle
        key = _canonical_cycle(cert.vertices)
        if key not in seen:
            seen.add(key)
            found.append(cert)
            if len(found) == limit:
                break
    return found


def _canonical_cycle(vertices: tuple[int, ...]) -> tuple[int, ...]:
    best = None
    for seq in (list(vertices), list(reversed(vertices))):
        i = seq.index(min(seq))
        rot = tuple(seq[i:] + seq[:i])
        if best is None or rot < best:
            best = rot
    return best


def _pick_hole(g: Graph, cycle, holes: dict) -> int:
    """Greedy rule: highest-degree cycle vertex not adjacent to any hole;
    if every vertex conflicts, the least-conflicting one."""
    degs = g.degrees
    free = [v for v in cycle if v not in holes
            and not any(g.has_edge(v, h) for h in holes)]
    if free:
        return max(free, key=lambda v: (int(degs[v]), -v))
    cands = [v for v in cycle if v not in holes]
    return min(cands, key=lambda v: (sum(g.has_edge(v, h) for h in holes),
                                     -int(degs[v]), v))


def _remainder(g: Graph, holes: dict):
    keep = [v for v in range(g.vertex_count) if v not in holes]
    return induced_subgraph(g, keep)


def _score(g: Graph, holes: dict):
    """(score, adjacent-pairs, uncovered odd cycles in original ids)."""
    hs = sorted(holes)
    adj_pairs = sum(g.has_edge(hs[i], hs[j])
                    for i in range(len(hs)) for j in range(i + 1, len(hs)))
    sub, ids = _remainder(g, holes)
    rem_cycles = find_odd_cycles(sub, _SCORE_LIMIT)
    mapped = [tuple(int(ids[v]) for v in c.vertices) for c in rem_cycles]
    return adj_pairs + len(mapped), adj_pairs, mapped


def three_color_heuristic(g: Graph, budget: int = 128, seed: int = 0) -> HeuristicOutcome:
    """Attempt a 3-coloring; deterministic in (g, budget, seed)."""
    if budget < 1:
        raise ValueError("budget must be >= 1")
    base = two_color(g)
    if base.colorable:
        coloring = Coloring(base.coloring.colors, 3)
        state = HoleState((), 0, budget, True)
        return HeuristicOutcome(coloring, state)

    rng = MixStream(seed)
    holes: dict[int, tuple[int, ...]] = {}  # hole -> its cycle of origin
    for cert in find_odd_cycles(g, _FIND_LIMIT):
        v = _pick_hole(g, cert.vertices, holes)
        holes[v] = cert.vertices

    score, adj_pairs, uncovered = _score(g, holes)
    steps = 0
    while steps < budget:
        if score == 0:
            return _emit(g, holes, steps, budget)
        steps += 1
        new_holes = dict(holes)
        if uncovered:
            # a remainder odd cycle has no hole yet: place one on it
            v = _pick_hole(g, uncovered[0], new_holes)
            new_holes[v] = uncovered[0]
        else:
            # rotate a conflicted hole one position along its origin cycle
            hs = sorted(new_holes)
            conflicted = [h for h in hs if any(g.has_edge(h, o) for o in hs if o != h)]
            pool = conflicted if conflicted else hs
            h = pool[rng.choice(len(pool))]
            cyc = new_holes[h]
            i = cyc.index(h)
            direction = 1 if rng.next_u64() & 1 else -1
            moved = False
            for d in (direction, -direction):
                tgt = cyc[(i + d) % len(cyc)]
                if tgt not in new_holes:
                    del new_holes[h]
                    new_holes[tgt] = cyc
                    moved = True
                    break
            if not moved:
                continue  # both neighbors are holes; step is spent
        new_score, new_pairs, new_uncovered = _score(g, new_holes)
        accept = new_score < score
        if not accept:
            accept = rng.uniform() < 0.5 * max(0.0, 1.0 - steps / budget)
        if accept:
            holes, score, adj_pairs, uncovered = (
                new_holes, new_score, new_pairs, new_uncovered)
    if score == 0:
        return _emit(g, holes, steps, budget)

    # last resort: each greedy color class in turn as the hole set
    greedy = greedy_color(g)
    for cls in (2, 1, 0):
        members = np.nonzero(greedy.coloring.colors == cls)[0]
        if members.size == 0:
            continue
        cand = {int(v): () for v in members}
        sub, _ = _remainder(g, cand)
        if two_color(sub).colorable:
            return _emit(g, cand, steps, budget)
    state = HoleState(tuple(sorted(holes)), steps, budget, False)
    return HeuristicOutcome(None, state, reason="budget_exhausted")


def _emit(g: Graph, holes: dict, steps: int, budget: int) -> HeuristicOutcome:
    sub, ids = _remainder(g, holes)
    res = two_color(sub)
    assert res.colorable
    colors = np.full(g.vertex_count, 2, dtype=np.int64)
    colors[ids] = res.coloring.colors
    coloring = Coloring(colors, 3)
    assert verify_coloring(g, coloring)
    state = HoleState(tuple(sorted(holes)), steps, budget, True)
    return HeuristicOutcome(coloring, state)
