"""Brute-force oracles used to certify the library's answers at desk scale.

Everything here enumerates: full assignment spaces for colorability, all
vertex subsets for clique/independent-set/cover, and full truth tables for
CNF satisfiability. Deliberately independent of the library's search code.
"""

import numpy as np

_CHUNK = 1 << 16


def _assignment_chunks(n, k):
    """Yield (chunk, n) int64 arrays enumerating all k**n assignments."""
    total = k**n
    powers = k ** np.arange(n, dtype=np.int64)
    for lo in range(0, total, _CHUNK):
        hi = min(lo + _CHUNK, total)
        base = np.arange(lo, hi, dtype=np.int64)
        yield (base[:, None] // powers[None, :]) % k


def find_k_coloring_brute(g, k):
    """First proper k-coloring in base-k enumeration order, or None."""
    n = g.vertex_count
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    if k == 0:
        return None
    ea = g.edge_array()
    for chunk in _assignment_chunks(n, k):
        ok = np.ones(chunk.shape[0], dtype=bool)
        for u, v in ea:
            ok &= chunk[:, u] != chunk[:, v]
        if ok.any():
            return chunk[int(np.argmax(ok))].copy()
    return None


def is_k_colorable_brute(g, k):
    return find_k_coloring_brute(g, k) is not None


def chromatic_number_brute(g):
    """Minimum k over exhaustive assignment enumeration."""
    if g.vertex_count == 0:
        return 0
    for k in range(1, g.vertex_count + 1):
        if is_k_colorable_brute(g, k):
            return k
    raise AssertionError("n colors always suffice")


def count_proper_colorings(g, k):
    n = g.vertex_count
    if n == 0:
        return 1
    ea = g.edge_array()
    total = 0
    for chunk in _assignment_chunks(n, k):
        ok = np.ones(chunk.shape[0], dtype=bool)
        for u, v in ea:
            ok &= chunk[:, u] != chunk[:, v]
        total += int(ok.sum())
    return total


def proper_colorings_brute(g, k):
    """All proper k-colorings as arrays (small graphs only)."""
    n = g.vertex_count
    ea = g.edge_array()
    out = []
    for chunk in _assignment_chunks(n, k):
        ok = np.ones(chunk.shape[0], dtype=bool)
        for u, v in ea:
            ok &= chunk[:, u] != chunk[:, v]
        out.extend(chunk[ok])
    return out


def _adj_masks(g):
    masks = [0] * g.vertex_count
    for u, v in g.edges():
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def max_clique_brute(g):
    """(size, witness) by enumerating all 2**n subsets. n <= 20 or so."""
    n = g.vertex_count
    masks = _adj_masks(g)
    best, best_set = 0, ()
    for s in range(1 << n):
        size = s.bit_count()
        if size <= best:
            continue
        members = [v for v in range(n) if s >> v & 1]
        if all(s & ~(masks[v] | (1 << v)) == 0 for v in members):
            best, best_set = size, tuple(members)
    return best, best_set


def max_independent_set_brute(g):
    n = g.vertex_count
    masks = _adj_masks(g)
    best, best_set = 0, ()
    for s in range(1 << n):
        size = s.bit_count()
        if size <= best:
            continue
        members = [v for v in range(n) if s >> v & 1]
        if all(s & masks[v] == 0 for v in members):
            best, best_set = size, tuple(members)
    return best, best_set


def min_vertex_cover_brute(g):
    n = g.vertex_count
    edges = list(g.edges())
    best, best_set = n, tuple(range(n))
    for s in range(1 << n):
        size = s.bit_count()
        if size >= best:
            continue
        if all(s >> u & 1 or s >> v & 1 for u, v in edges):
            best, best_set = size, tuple(v for v in range(n) if s >> v & 1)
    return best, best_set


def triangles_brute(g):
    """All triangles as sorted vertex triples."""
    n = g.vertex_count
    out = []
    for a in range(n):
        for b in range(a + 1, n):
            if not g.has_edge(a, b):
                continue
            for c in range(b + 1, n):
                if g.has_edge(a, c) and g.has_edge(b, c):
                    out.append((a, b, c))
    return out


def clause_satisfied(clause, assignment):
    """clause: tuple of nonzero DIMACS literals; assignment: bool per var."""
    return any((assignment[abs(lit) - 1]) == (lit > 0) for lit in clause)


def formula_satisfied(formula, assignment):
    return all(clause_satisfied(cl, assignment) for cl in formula.clauses)


def satisfiable_brute(formula):
    """Truth-table satisfiability; returns a witness assignment or None."""
    nv = formula.variable_count
    for bits in range(1 << nv):
        assignment = [bool(bits >> i & 1) for i in range(nv)]
        if formula_satisfied(formula, assignment):
            return assignment
    return None
