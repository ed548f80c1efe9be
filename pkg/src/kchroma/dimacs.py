"""DIMACS .col parsing and emission.

Accepted input: `c` comment lines, one `p edge V E` header, and `e u v`
edge lines with 1-based endpoints. Duplicate edge lines for the same
unordered pair are collapsed (published benchmark files contain them);
programmatic construction through build_graph stays strict.
"""

from __future__ import annotations

from .errors import CountMismatchError, MalformedLineError, MissingHeaderError
from .graph import Graph, build_graph


def parse_dimacs_col(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    header = None
    pairs = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise MalformedLineError(lineno, raw)
            if len(parts) != 4 or parts[1] != "edge":
                raise MalformedLineError(lineno, raw)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise MalformedLineError(lineno, raw) from None
            if header[0] < 0 or header[1] < 0:
                raise MalformedLineError(lineno, raw)
        elif parts[0] == "e":
            if header is None:
                raise MissingHeaderError(f"edge line {lineno} before 'p edge' header")
            if len(parts) != 3:
                raise MalformedLineError(lineno, raw)
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise MalformedLineError(lineno, raw) from None
            pairs.add((u, v) if u <= v else (v, u))
        else:
            raise MalformedLineError(lineno, raw)
    if header is None:
        raise MissingHeaderError()
    n, declared = header
    if declared != len(pairs):
        raise CountMismatchError(declared, len(pairs))
    return build_graph(n, sorted(pairs))


def emit_dimacs_col(g: Graph) -> str:
    """Deterministic emission: header, then edges sorted lexicographically,
    1-based. parse_dimacs_col(emit_dimacs_col(g)) == g."""
    lines = [f"p edge {g.vertex_count} {g.edge_count}"]
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"
