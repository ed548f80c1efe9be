"""Shared graph fixtures: named small graphs plus a seeded random ensemble."""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kchroma import GeneratorSpec, build_graph, generate


def edgeless(n):
    return build_graph(n, [])


def cycle(n):
    return generate(GeneratorSpec("cycle", n))


def path(n):
    return generate(GeneratorSpec("path", n))


def complete(n):
    return generate(GeneratorSpec("complete", n))


def complete_bipartite(a, b):
    return generate(GeneratorSpec("complete_bipartite", a, m=b))


def gnp(n, p, seed):
    return generate(GeneratorSpec("gnp", n, p=p, seed=seed))


def star(leaves):
    return complete_bipartite(1, leaves)


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def k33_minus_matching():
    """K_{3,3} on parts {0,1,2},{3,4,5} with the matching (i, i+3) removed."""
    edges = [(i, j + 3) for i in range(3) for j in range(3) if i != j]
    return build_graph(6, edges)


def two_triangles():
    return build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])


def suite_graphs():
    """The desk-scale ensemble shared by invariants and acceptance tests."""
    graphs = [("edgeless0", edgeless(0)), ("edgeless1", edgeless(1)),
              ("edgeless7", edgeless(7))]
    graphs += [(f"K{n}", complete(n)) for n in range(1, 7)]
    graphs += [(f"C{n}", cycle(n)) for n in range(3, 26)]
    graphs += [(f"P{n}", path(n)) for n in (1, 2, 5, 10)]
    graphs += [(f"K{a},{b}", complete_bipartite(a, b))
               for a, b in ((1, 1), (1, 5), (2, 3), (3, 3))]
    graphs.append(("petersen", petersen()))
    graphs.append(("K33-matching", k33_minus_matching()))
    graphs.append(("2K3", two_triangles()))
    i = 0
    for n in range(4, 11):
        for p in (0.2, 0.5, 0.8):
            for s in range(3):
                graphs.append((f"gnp({n},{p},{1000 + i})", gnp(n, p, 1000 + i)))
                i += 1
    return graphs


@pytest.fixture(scope="session")
def suite():
    return suite_graphs()
