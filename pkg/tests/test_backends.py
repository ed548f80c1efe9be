"""The numba and numpy kernel backends must agree bit for bit."""

import numpy as np
import pytest

from kchroma._accel import numpy_backend

numba_backend = pytest.importorskip("kchroma._accel.numba_backend")

from conftest import complete, cycle, gnp, petersen, suite_graphs, two_triangles


def corpus():
    graphs = [g for _, g in suite_graphs() if g.vertex_count <= 12]
    graphs += [petersen(), two_triangles(), cycle(50), gnp(25, 0.15, 77)]
    return graphs


@pytest.mark.parametrize("start", [0, 3])
def test_dfs_forest_identical(start):
    for g in corpus():
        if g.vertex_count <= start:
            continue
        indptr, indices = g.csr()
        for stop in (True, False):
            a = numpy_backend.dfs_forest(indptr, indices, start, stop)
            b = numba_backend.dfs_forest(indptr, indices, start, stop)
            for x, y in zip(a, b):
                assert np.array_equal(np.asarray(x), np.asarray(y))


def test_greedy_identical():
    for g in corpus():
        n = g.vertex_count
        indptr, indices = g.csr()
        for order in (np.arange(n, dtype=np.int64),
                      np.arange(n, dtype=np.int64)[::-1].copy()):
            ca, ua = numpy_backend.greedy_fill(indptr, indices, order)
            cb, ub = numba_backend.greedy_fill(indptr, indices, order)
            assert ua == ub
            assert np.array_equal(ca, cb)


def _drive_decide(backend, g, k, max_nodes=1 << 62):
    n = g.vertex_count
    indptr, indices = g.csr()
    colors = np.full(n, -1, dtype=np.int64)
    avail = np.ones((n, k), dtype=np.bool_)
    dof = np.full(n, k, dtype=np.int64)
    frames = [np.empty(n, dtype=np.int64) for _ in range(5)]
    trail = np.empty(max(1, 2 * g.edge_count), dtype=np.int64)
    state = np.zeros(8, dtype=np.int64)
    while True:
        status = int(backend.decide_step(indptr, indices, k, colors, avail, dof,
                                         *frames, trail, state, max_nodes, 256))
        if status != 0:
            return status, colors, int(state[5]), int(state[6])


def test_decide_identical_across_backends():
    for g in corpus():
        if g.vertex_count == 0 or g.vertex_count > 12:
            continue
        for k in (2, 3):
            a = _drive_decide(numpy_backend, g, k)
            b = _drive_decide(numba_backend, g, k)
            assert a[0] == b[0]
            assert np.array_equal(a[1], b[1])
            assert a[2:] == b[2:]


def test_decide_node_budget_identical():
    g = complete(8)
    a = _drive_decide(numpy_backend, g, 7, max_nodes=3)
    b = _drive_decide(numba_backend, g, 7, max_nodes=3)
    assert a[0] == b[0] == 3
    assert a[2:] == b[2:]


def test_gnp_identical():
    for n, p, seed in [(0, 0.5, 1), (1, 0.5, 1), (8, 0.5, 1), (30, 0.2, 9),
                       (50, 0.9, 3), (64, 0.0, 0), (64, 1.0, 0)]:
        a = numpy_backend.gnp_edges(n, p, seed)
        b = numba_backend.gnp_edges(n, p, seed)
        assert np.array_equal(a, b), (n, p, seed)
