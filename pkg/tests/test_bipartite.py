import oracles
from kchroma import build_graph
from kchroma.bipartite import dfi_levels, two_color
from kchroma.coloring import verify_coloring

from conftest import cycle, edgeless, gnp, petersen, two_triangles


def test_even_cycle_alternates():
    g = cycle(12)
    res = two_color(g)
    assert res.colorable
    cols = res.coloring.colors
    for u, v in g.edges():
        assert cols[u] != cols[v]
    assert verify_coloring(g, res.coloring)


def test_odd_cycle_certificate():
    g = cycle(11)
    res = two_color(g)
    assert not res.colorable
    assert len(res.odd_cycle) == 11
    assert res.odd_cycle.check(g)


def test_edgeless_all_zero():
    res = two_color(edgeless(5))
    assert res.colorable
    assert res.coloring.as_list() == [0, 0, 0, 0, 0]


def test_empty_graph_colorable():
    assert two_color(edgeless(0)).colorable


def test_triangle_certificate():
    res = two_color(build_graph(3, [(0, 1), (1, 2), (2, 0)]))
    assert not res.colorable
    assert sorted(res.odd_cycle.vertices) == [0, 1, 2]


def test_certificates_on_suite(suite):
    for name, g in suite:
        res = two_color(g)
        if res.colorable:
            assert verify_coloring(g, res.coloring), name
            assert res.coloring.palette_size == 2
        else:
            assert res.odd_cycle.check(g), name


def test_agrees_with_brute_force_small():
    for i in range(40):
        g = gnp(4 + i % 7, (0.2, 0.4, 0.6)[i % 3], 7000 + i)
        assert two_color(g).colorable == oracles.is_k_colorable_brute(g, 2), i


def test_gnp_8_example_agrees_with_exhaustive():
    g = gnp(8, 0.5, 1)
    assert two_color(g).colorable == oracles.is_k_colorable_brute(g, 2)


def test_determinism():
    g = gnp(30, 0.12, 5)
    a, b = two_color(g), two_color(g)
    if a.colorable:
        assert a.coloring == b.coloring
    else:
        assert a.odd_cycle == b.odd_cycle


def test_disconnected_components_short_circuit():
    g = two_triangles()
    res = two_color(g)
    assert not res.colorable
    assert set(res.odd_cycle.vertices) == {0, 1, 2}  # first component wins


def test_petersen_not_bipartite():
    assert not two_color(petersen()).colorable


def test_dfi_path_chain():
    trace = dfi_levels(build_graph(3, [(0, 1), (1, 2)]))
    assert list(trace.dfi) == [0, 1, 2]
    assert list(trace.parent) == [-1, 0, 1]
    assert list(trace.root) == [0, 0, 0]


def test_dfi_edgeless_three_roots():
    trace = dfi_levels(edgeless(3))
    assert list(trace.dfi) == [0, 0, 0]
    assert list(trace.parent) == [-1, -1, -1]
    assert list(trace.root) == [0, 1, 2]


def test_dfi_levels_increment_along_tree_edges(suite):
    for name, g in suite:
        trace = dfi_levels(g)
        for v in range(g.vertex_count):
            p = int(trace.parent[v])
            if p < 0:
                assert trace.dfi[v] == 0
                assert trace.root[v] == v
            else:
                assert trace.dfi[v] == trace.dfi[p] + 1, name
                assert g.has_edge(v, p), name
                assert trace.root[v] == trace.root[p]


def test_dfi_cycle4_parity_alternates():
    trace = dfi_levels(cycle(4))
    for v in range(4):
        p = int(trace.parent[v])
        if p >= 0:
            assert (trace.dfi[v] - trace.dfi[p]) % 2 == 1


def test_dfi_covers_all_vertices_even_with_odd_cycle():
    trace = dfi_levels(cycle(11))
    assert (trace.dfi >= 0).all()
