import itertools

import numpy as np
import pytest

import oracles
from kchroma.coloring import Colorable, Coloring, decide_k_colorable
from kchroma.errors import (
    MalformedLineError,
    MissingHeaderError,
    NotAProperColoringError,
    TooManyLiteralsError,
    VariableOutOfRangeError,
)
from kchroma.reduction import (
    CnfFormula,
    TRUE_VERTEX,
    lift_coloring_to_assignment,
    parse_dimacs_cnf,
    reduce_3sat_to_3col,
)


def all_clauses(variable_count):
    lits = [l for v in range(1, variable_count + 1) for l in (v, -v)]
    return sorted(set(tuple(sorted(c)) for c in itertools.product(lits, repeat=3)))


# ----------------------------------------------------------------- parse

def test_parse_pads_unit_clause():
    f = parse_dimacs_cnf("p cnf 1 1\n1 0\n")
    assert f.variable_count == 1
    assert f.clauses == ((1, 1, 1),)


def test_parse_pads_two_literal_clause():
    f = parse_dimacs_cnf("p cnf 2 1\n1 -2 0\n")
    assert f.clauses == ((1, -2, -2),)


def test_parse_rejects_four_literals():
    with pytest.raises(TooManyLiteralsError):
        parse_dimacs_cnf("p cnf 1 1\n1 1 1 1 0\n")


def test_parse_rejects_missing_header():
    with pytest.raises(MissingHeaderError):
        parse_dimacs_cnf("1 0\n")
    with pytest.raises(MissingHeaderError):
        parse_dimacs_cnf("c nothing else\n")


def test_parse_rejects_malformed():
    with pytest.raises(MalformedLineError):
        parse_dimacs_cnf("p cnf 1 1\n1 2\n")  # no terminator
    with pytest.raises(MalformedLineError):
        parse_dimacs_cnf("p cnf 1 1\n0\n")  # empty clause cannot be padded
    with pytest.raises(MalformedLineError):
        parse_dimacs_cnf("p edge 1 1\n")


def test_parse_rejects_out_of_range_variable():
    with pytest.raises(VariableOutOfRangeError):
        parse_dimacs_cnf("p cnf 1 1\n2 0\n")


def test_parse_skips_comments():
    f = parse_dimacs_cnf("c header comment\np cnf 2 2\n1 2 0\nc mid\n-1 -2 0\n")
    assert len(f.clauses) == 2


# ------------------------------------------------------------- reduction

def test_empty_formula_is_palette_triangle():
    m = reduce_3sat_to_3col(CnfFormula(0, ()))
    assert m.graph.vertex_count == 3 and m.graph.edge_count == 3
    assert isinstance(decide_k_colorable(m.graph, 3), Colorable)


def test_sizes_exact_closed_form():
    for nv in range(4):
        pool = all_clauses(nv) if nv else []
        for nc in range(3):
            clauses = tuple(pool[:nc]) if len(pool) >= nc else None
            if clauses is None:
                continue
            m = reduce_3sat_to_3col(CnfFormula(nv, clauses))
            assert m.graph.vertex_count == 3 + 2 * nv + 6 * nc
            assert m.graph.edge_count == 3 + 3 * nv + 12 * nc


def test_unsat_pair_not_colorable():
    f = CnfFormula(1, ((1, 1, 1), (-1, -1, -1)))
    m = reduce_3sat_to_3col(f)
    assert not isinstance(decide_k_colorable(m.graph, 3), Colorable)


def test_single_clause_colorable():
    m = reduce_3sat_to_3col(CnfFormula(3, ((1, 2, 3),)))
    assert isinstance(decide_k_colorable(m.graph, 3), Colorable)


def test_palette_is_triangle_and_literal_pairs_wired():
    f = CnfFormula(2, ((1, -2, -2),))
    m = reduce_3sat_to_3col(f)
    g = m.graph
    t, fv, d = m.palette_vertices
    assert g.has_edge(t, fv) and g.has_edge(t, d) and g.has_edge(fv, d)
    for p, q in m.literal_vertices:
        assert g.has_edge(p, q) and g.has_edge(p, d) and g.has_edge(q, d)


def test_vertex_numbering_reproducible():
    f = CnfFormula(2, ((1, 2, 2), (-1, -2, -2)))
    a = reduce_3sat_to_3col(f)
    b = reduce_3sat_to_3col(f)
    assert a.graph == b.graph
    assert a.literal_vertices == ((3, 4), (5, 6))
    assert a.clause_gadget_vertices[0] == (7, 8, 9, 10, 11, 12)


def test_exhaustive_family_two_vars_two_clauses():
    pool = all_clauses(2)
    checked = 0
    for r in range(3):
        for combo in itertools.combinations(pool, r):
            f = CnfFormula(2, combo)
            sat = oracles.satisfiable_brute(f) is not None
            m = reduce_3sat_to_3col(f)
            res = decide_k_colorable(m.graph, 3)
            assert isinstance(res, Colorable) == sat, combo
            if sat:
                assignment = lift_coloring_to_assignment(m, res.coloring)
                assert oracles.formula_satisfied(f, assignment), combo
            checked += 1
    assert checked == 1 + len(pool) + len(pool) * (len(pool) - 1) // 2


# ------------------------------------------------------------------ lift

def test_lift_forced_assignment_over_all_colorings():
    # (x v x v x): every proper 3-coloring of the gadget graph must put
    # x's vertex in T's color class
    f = CnfFormula(1, ((1, 1, 1),))
    m = reduce_3sat_to_3col(f)
    x_vertex = m.literal_vertices[0][0]
    colorings = oracles.proper_colorings_brute(m.graph, 3)
    assert colorings
    for cols in colorings:
        assert cols[x_vertex] == cols[TRUE_VERTEX]
        assignment = lift_coloring_to_assignment(m, Coloring(cols, 3))
        assert assignment == [True]


def test_lift_empty_formula_vacuous():
    m = reduce_3sat_to_3col(CnfFormula(0, ()))
    res = decide_k_colorable(m.graph, 3)
    assert lift_coloring_to_assignment(m, res.coloring) == []


def test_lift_satisfies_clause_with_repeats():
    f = CnfFormula(2, ((1, 2, 2),))
    m = reduce_3sat_to_3col(f)
    res = decide_k_colorable(m.graph, 3)
    assignment = lift_coloring_to_assignment(m, res.coloring)
    assert oracles.clause_satisfied((1, 2, 2), assignment)


def test_lift_rejects_improper_coloring():
    m = reduce_3sat_to_3col(CnfFormula(1, ((1, 1, 1),)))
    bad = Coloring(np.zeros(m.graph.vertex_count, dtype=np.int64), 3)
    with pytest.raises(NotAProperColoringError):
        lift_coloring_to_assignment(m, bad)


def test_reduced_graphs_are_simple():
    for combo in itertools.combinations(all_clauses(3), 2):
        f = CnfFormula(3, combo)
        g = reduce_3sat_to_3col(f).graph  # build_graph validates simplicity
        assert g.edge_count == 3 + 9 + 24
        break
    f = CnfFormula(1, ((1, 1, 1), (1, 1, -1), (-1, -1, -1)))
    assert reduce_3sat_to_3col(f).graph.edge_count == 3 + 3 + 36
