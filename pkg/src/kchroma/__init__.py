"""kchroma: a graph k-colorability toolkit."""

from ._accel import BACKEND
from .graph import (
    GeneratorSpec,
    Graph,
    build_graph,
    complement,
    generate,
    induced_subgraph,
    max_degree,
    parse_spec,
)
from .dimacs import emit_dimacs_col, parse_dimacs_col

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "GeneratorSpec",
    "Graph",
    "__version__",
    "build_graph",
    "complement",
    "emit_dimacs_col",
    "generate",
    "induced_subgraph",
    "max_degree",
    "parse_dimacs_col",
    "parse_spec",
]
