"""Exact clique number, independence number, and minimum vertex cover on
desk-scale graphs, plus a report auditing the inequality chain among them.

The chain check named chi_le_alpha is deliberately an audited observation,
not an assertion: it fails on complete graphs, and the report must surface
that rather than suppress it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import Budget, ExactChromatic, chromatic_number
from .errors import TooLargeError
from .graph import Graph, complement, max_degree

DEFAULT_MAX_VERTICES = 40


def is_clique(g: Graph, vertices) -> bool:
    vs = list(vertices)
    return all(g.has_edge(vs[i], vs[j])
               for i in range(len(vs)) for j in range(i + 1, len(vs)))


def is_independent_set(g: Graph, vertices) -> bool:
    vs = list(vertices)
    return not any(g.has_edge(vs[i], vs[j])
                   for i in range(len(vs)) for j in range(i + 1, len(vs)))


def is_vertex_cover(g: Graph, vertices) -> bool:
    vs = set(int(v) for v in vertices)
    return all(u in vs or v in vs for u, v in g.edges())


def _adj_masks(g: Graph) -> list[int]:
    masks = [0] * g.vertex_count
    for u, v in g.edges():
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _color_sort(p: int, adj: list[int]):
    """Greedy color classes over candidate set p (bitmask); returns
    vertices in nondecreasing class index with that index as bound."""
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    while p:
        color += 1
        avail = p
        while avail:
            v = (avail & -avail).bit_length() - 1
            bit = 1 << v
            avail &= ~adj[v] & ~bit
            p &= ~bit
            order.append(v)
            bounds.append(color)
    return order, bounds


def clique_number(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES):
    """(omega, witness) by branch and bound with greedy-coloring bounds on
    candidate sets. Exact; intended for graphs up to ~40 vertices."""
    n = g.vertex_count
    if n > max_vertices:
        raise TooLargeError("clique_number", n, max_vertices)
    if n == 0:
        return 0, ()
    adj = _adj_masks(g)
    degs = g.degrees
    best_mask = 0
    for v in sorted(range(n), key=lambda v: (-int(degs[v]), v)):
        if adj[v] & best_mask == best_mask:
            best_mask |= 1 << v
    best_size = best_mask.bit_count()

    def expand(p: int, size: int, mask: int):
        nonlocal best_size, best_mask
        order, bnds = _color_sort(p, adj)
        live = p
        for i in range(len(order) - 1, -1, -1):
            if size + bnds[i] <= best_size:
                return
            v = order[i]
            bit = 1 << v
            sub = live & adj[v]
            if sub:
                expand(sub, size + 1, mask | bit)
            elif size + 1 > best_size:
                best_size = size + 1
                best_mask = mask | bit
            live &= ~bit

    expand((1 << n) - 1, 0, 0)
    witness = tuple(v for v in range(n) if best_mask >> v & 1)
    assert is_clique(g, witness) and len(witness) == best_size
    return best_size, witness


def independence_number(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES):
    """(alpha, witness): the clique number of the complement graph."""
    n = g.vertex_count
    if n > max_vertices:
        raise TooLargeError("independence_number", n, max_vertices)
    size, witness = clique_number(complement(g), max_vertices)
    assert is_independent_set(g, witness)
    return size, witness


def min_vertex_cover(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES):
    """(cover size, witness) via the complement identity MVC = V - alpha,
    then certified directly against every edge."""
    n = g.vertex_count
    if n > max_vertices:
        raise TooLargeError("min_vertex_cover", n, max_vertices)
    alpha, ind = independence_number(g, max_vertices)
    outside = sorted(set(range(n)) - set(ind))
    witness = tuple(outside)
    assert is_vertex_cover(g, witness) and len(witness) == n - alpha
    return n - alpha, witness


@dataclass(frozen=True)
class ChainCheck:
    name: str
    lhs: int
    rhs: int
    relation: str  # "<=", "<", ">"
    holds: bool


@dataclass
class BoundsReport:
    clique_number: int | None
    independence_number: int | None
    min_vertex_cover: int | None
    max_degree_plus_one: int
    chromatic: int | None
    clique_witness: tuple[int, ...]
    independence_witness: tuple[int, ...]
    cover_witness: tuple[int, ...]
    chain_checks: list[ChainCheck]

    def check(self, name: str) -> ChainCheck | None:
        for c in self.chain_checks:
            if c.name == name:
                return c
        return None


_RELATIONS = {"<=": lambda a, b: a <= b, "<": lambda a, b: a < b, ">": lambda a, b: a > b}


def _mk_check(name, lhs, rhs, relation):
    return ChainCheck(name, int(lhs), int(rhs), relation,
                      bool(_RELATIONS[relation](lhs, rhs)))


def bounds_report(g: Graph, compute_chi: bool = True,
                  budget: Budget | None = None,
                  max_vertices: int = DEFAULT_MAX_VERTICES) -> BoundsReport:
    """All invariants plus named inequality audits. Fields whose exact
    computation exceeds max_vertices are left None; the report is still
    produced and the affected checks are skipped."""
    omega = alpha = mvc = None
    w_omega: tuple[int, ...] = ()
    w_alpha: tuple[int, ...] = ()
    w_cover: tuple[int, ...] = ()
    try:
        omega, w_omega = clique_number(g, max_vertices)
        alpha, w_alpha = independence_number(g, max_vertices)
        mvc, w_cover = min_vertex_cover(g, max_vertices)
    except TooLargeError:
        pass
    dplus1 = max_degree(g) + 1
    chi = None
    if compute_chi:
        res = chromatic_number(g, budget)
        if isinstance(res, ExactChromatic):
            chi = res.value
    checks = []
    if chi is not None and omega is not None:
        checks.append(_mk_check("omega_le_chi", omega, chi, "<="))
    if chi is not None:
        checks.append(_mk_check("chi_le_delta_plus_one", chi, dplus1, "<="))
    if chi is not None and alpha is not None:
        checks.append(_mk_check("chi_le_alpha", chi, alpha, "<="))
    if mvc is not None and omega is not None:
        checks.append(_mk_check("mvc_lt_omega", mvc, omega, "<"))
    if mvc is not None and alpha is not None:
        checks.append(_mk_check("mvc_gt_alpha", mvc, alpha, ">"))
    if alpha is not None:
        assert mvc + alpha == g.vertex_count
    return BoundsReport(omega, alpha, mvc, dplus1, chi,
                        w_omega, w_alpha, w_cover, checks)
