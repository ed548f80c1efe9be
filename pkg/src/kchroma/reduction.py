"""3-CNF satisfiability reduced to 3-colorability, with coloring lift-back.

Construction: a palette triangle {T, F, D}; per variable x a triangle
{x, ¬x, D}, forcing the pair to take {T's color, F's color} in some order;
per clause two 3-vertex OR gates chained over the clause literals, with the
final gate output wired to F and D so it must take T's color. An OR gate on
inputs a, b adds fresh vertices i1, i2, out with edges a-i1, b-i2, i1-i2,
i1-out, i2-out: if both inputs have F's color the output is forced to F's
color, and if either input has T's color the gate can pass T through.
Hence the graph is 3-colorable iff some literal in every clause is T.

Sizes are exact: vertices = 3 + 2*variables + 6*clauses,
edges = 3 + 3*variables + 12*clauses.

Vertex numbering is fixed (palette, then literal pairs, then gadgets in
clause order) so the output is reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coloring import Coloring
from .errors import (
    MalformedLineError,
    MissingHeaderError,
    NotAProperColoringError,
    TooManyLiteralsError,
    VariableOutOfRangeError,
)
from .graph import Graph, build_graph

TRUE_VERTEX = 0
FALSE_VERTEX = 1
DUMMY_VERTEX = 2


@dataclass(frozen=True)
class CnfFormula:
    """3-CNF with DIMACS-style literals: ±v, v in 1..variable_count.
    Clauses have exactly 3 literals; repetition pads shorter clauses."""

    variable_count: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for idx, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise TooManyLiteralsError(idx, len(clause))
            for lit in clause:
                if lit == 0 or abs(lit) > self.variable_count:
                    raise VariableOutOfRangeError(lit, self.variable_count)


@dataclass(frozen=True)
class ReductionMap:
    """Vertex roles of the reduced graph; graph vertex ids are fixed by the
    numbering convention above."""

    palette_vertices: tuple[int, int, int]
    literal_vertices: tuple[tuple[int, int], ...]
    clause_gadget_vertices: tuple[tuple[int, int, int, int, int, int], ...]
    graph: Graph
    formula: CnfFormula


def parse_dimacs_cnf(text: str | bytes) -> CnfFormula:
    """DIMACS .cnf: `p cnf VARS CLAUSES` header, one 0-terminated clause per
    line. Clauses shorter than 3 literals repeat their last literal; longer
    clauses are rejected (the reduction is from 3-CNF)."""
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    header = None
    clauses: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise MalformedLineError(lineno, raw)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise MalformedLineError(lineno, raw) from None
            if header[0] < 0 or header[1] < 0:
                raise MalformedLineError(lineno, raw)
            continue
        if header is None:
            raise MissingHeaderError(f"clause line {lineno} before 'p cnf' header")
        try:
            lits = [int(tok) for tok in parts]
        except ValueError:
            raise MalformedLineError(lineno, raw) from None
        if not lits or lits[-1] != 0:
            raise MalformedLineError(lineno, raw)
        lits = lits[:-1]
        if 0 in lits:
            raise MalformedLineError(lineno, raw)
        if len(lits) > 3:
            raise TooManyLiteralsError(len(clauses), len(lits))
        if not lits:
            raise MalformedLineError(lineno, raw)  # empty clause cannot be padded
        while len(lits) < 3:
            lits.append(lits[-1])
        for lit in lits:
            if abs(lit) > header[0]:
                raise VariableOutOfRangeError(lit, header[0])
        clauses.append(tuple(lits))
    if header is None:
        raise MissingHeaderError()
    return CnfFormula(header[0], tuple(clauses))


def reduce_3sat_to_3col(f: CnfFormula) -> ReductionMap:
    """Build the reduction graph; 3-colorable iff f is satisfiable."""
    nv = f.variable_count
    pos = [3 + 2 * i for i in range(nv)]
    neg = [3 + 2 * i + 1 for i in range(nv)]
    edges = [(TRUE_VERTEX, FALSE_VERTEX), (TRUE_VERTEX, DUMMY_VERTEX),
             (FALSE_VERTEX, DUMMY_VERTEX)]
    for i in range(nv):
        edges += [(pos[i], neg[i]), (pos[i], DUMMY_VERTEX), (neg[i], DUMMY_VERTEX)]

    def lit_vertex(lit: int) -> int:
        return pos[lit - 1] if lit > 0 else neg[-lit - 1]

    gadgets = []
    base = 3 + 2 * nv
    for j, clause in enumerate(f.clauses):
        a, b, c = (lit_vertex(l) for l in clause)
        i1, i2, o1, i3, i4, o2 = range(base + 6 * j, base + 6 * j + 6)
        edges += [(a, i1), (b, i2), (i1, i2), (i1, o1), (i2, o1),
                  (o1, i3), (c, i4), (i3, i4), (i3, o2), (i4, o2),
                  (o2, FALSE_VERTEX), (o2, DUMMY_VERTEX)]
        gadgets.append((i1, i2, o1, i3, i4, o2))
    graph = build_graph(base + 6 * len(f.clauses), edges)
    return ReductionMap((TRUE_VERTEX, FALSE_VERTEX, DUMMY_VERTEX),
                        tuple(zip(pos, neg)), tuple(gadgets), graph, f)


def lift_coloring_to_assignment(m: ReductionMap, c: Coloring) -> list[bool]:
    """Read a satisfying assignment off a proper 3-coloring of the reduced
    graph: x is true iff its vertex shares T's color."""
    cols = c.colors
    if cols.shape[0] != m.graph.vertex_count:
        raise NotAProperColoringError("coloring length does not match the reduced graph")
    if bool((cols < 0).any()) or int(np.unique(cols).size) > 3:
        raise NotAProperColoringError("not a coloring with at most 3 colors")
    ea = m.graph.edge_array()
    if ea.shape[0] and bool((cols[ea[:, 0]] == cols[ea[:, 1]]).any()):
        raise NotAProperColoringError()
    t_color = int(cols[TRUE_VERTEX])
    return [bool(cols[p] == t_color) for p, _ in m.literal_vertices]
