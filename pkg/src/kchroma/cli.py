"""Command-line front end and benchmark harness.

Exit codes: 0 = computed / decided colorable, 10 = decided NOT colorable,
20 = unknown or budget exhausted, 2 = input error. Reports go to stdout in
the requested format; diagnostics go to stderr. Given identical inputs and
seeds, stdout is byte-identical across runs except for the timing fields
inside "stats" objects and benchmark wall times.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import __version__
from .bipartite import two_color
from .bounds import DEFAULT_MAX_VERTICES, bounds_report
from .coloring import (
    Budget,
    Colorable,
    Coloring,
    ExactChromatic,
    NotColorable,
    chromatic_number,
    decide_k_colorable,
    greedy_color,
    verify_coloring,
)
from .dimacs import emit_dimacs_col, parse_dimacs_col
from .errors import KchromaError, NotAProperColoringError
from .graph import GeneratorSpec, Graph, generate, parse_spec
from .holes import three_color_heuristic
from .reduction import parse_dimacs_cnf, reduce_3sat_to_3col

EXIT_OK = 0
EXIT_NOT_COLORABLE = 10
EXIT_UNKNOWN = 20
EXIT_INPUT_ERROR = 2

_DEFAULT_HOLE_BUDGET = 128
_LINEAR_SIZES = (1_000, 10_000, 100_000)

_DOT_PALETTE = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
    "#ffff33", "#a65628", "#f781bf", "#999999",
)


@dataclass
class CommandOutput:
    exit_code: int
    result: dict
    stats: dict | None = None
    graph: Graph | None = None
    coloring: Coloring | None = None
    digest: str = ""


def export_dot(g: Graph, coloring: Coloring | None = None) -> str:
    """Undirected DOT with a fixed fill palette; deterministic order."""
    if coloring is not None and not verify_coloring(g, coloring):
        raise NotAProperColoringError()
    lines = ["graph {"]
    for v in range(g.vertex_count):
        if coloring is not None:
            fill = _DOT_PALETTE[int(coloring.colors[v]) % len(_DOT_PALETTE)]
            lines.append(f'  v{v} [style=filled, fillcolor="{fill}"];')
        else:
            lines.append(f"  v{v};")
    for u, v in g.edges():
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _digest_bytes(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _load_graph(args) -> tuple[Graph, str]:
    if getattr(args, "gen", None):
        spec = parse_spec(args.gen)
        return generate(spec), _digest_bytes(spec.canonical_string().encode())
    if getattr(args, "input", None):
        data = _read_input(args.input)
        return parse_dimacs_col(data), _digest_bytes(data)
    raise KchromaError("one of --input or --gen is required")


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _budget(args) -> Budget | None:
    nodes = getattr(args, "budget_nodes", None)
    ms = getattr(args, "budget_ms", None)
    if nodes is None and ms is None:
        return None
    return Budget(max_nodes=nodes, max_seconds=None if ms is None else ms / 1000.0)


def _stats_dict(stats) -> dict:
    return {
        "nodes_expanded": stats.nodes_expanded,
        "backtracks": stats.backtracks,
        "wall_time": stats.wall_time,
    }


# ---------------------------------------------------------------- handlers

def _cmd_bipartite(args) -> CommandOutput:
    g, digest = _load_graph(args)
    res = two_color(g)
    if res.colorable:
        return CommandOutput(EXIT_OK,
                             {"colorable": True, "coloring": res.coloring.as_list()},
                             graph=g, coloring=res.coloring, digest=digest)
    return CommandOutput(EXIT_NOT_COLORABLE,
                         {"colorable": False,
                          "odd_cycle": [int(v) for v in res.odd_cycle.vertices]},
                         graph=g, digest=digest)


def _cmd_color(args) -> CommandOutput:
    g, digest = _load_graph(args)
    res = greedy_color(g)
    return CommandOutput(EXIT_OK,
                         {"colors_used": res.colors_used,
                          "coloring": res.coloring.as_list(),
                          "order": "natural"},
                         graph=g, coloring=res.coloring, digest=digest)


def _cmd_decide(args) -> CommandOutput:
    if args.k is None:
        raise KchromaError("decide requires --k")
    g, digest = _load_graph(args)
    res = decide_k_colorable(g, args.k, _budget(args))
    if isinstance(res, Colorable):
        return CommandOutput(EXIT_OK,
                             {"k": args.k, "decision": "colorable",
                              "coloring": res.coloring.as_list()},
                             _stats_dict(res.stats), g, res.coloring, digest)
    if isinstance(res, NotColorable):
        payload = {"k": args.k, "decision": "not_colorable"}
        if args.k == 2:
            cert = two_color(g).odd_cycle
            if cert is not None:
                payload["odd_cycle"] = [int(v) for v in cert.vertices]
        return CommandOutput(EXIT_NOT_COLORABLE, payload, _stats_dict(res.stats), g,
                             digest=digest)
    return CommandOutput(EXIT_UNKNOWN,
                         {"k": args.k, "decision": "budget_exhausted",
                          "reason": res.reason},
                         _stats_dict(res.stats), g, digest=digest)


def _cmd_chi(args) -> CommandOutput:
    g, digest = _load_graph(args)
    res = chromatic_number(g, _budget(args))
    if isinstance(res, ExactChromatic):
        return CommandOutput(EXIT_OK,
                             {"chromatic": res.value, "coloring": res.coloring.as_list()},
                             _stats_dict(res.stats), g, res.coloring, digest)
    return CommandOutput(EXIT_UNKNOWN,
                         {"lower": res.lower, "upper": res.upper},
                         _stats_dict(res.stats), g, digest=digest)


def _cmd_bounds(args) -> CommandOutput:
    g, digest = _load_graph(args)
    rep = bounds_report(g, compute_chi=not args.no_chi, budget=_budget(args),
                        max_vertices=args.max_vertices)
    result = {
        "clique_number": rep.clique_number,
        "independence_number": rep.independence_number,
        "min_vertex_cover": rep.min_vertex_cover,
        "max_degree_plus_one": rep.max_degree_plus_one,
        "chromatic": rep.chromatic,
        "clique_witness": list(rep.clique_witness),
        "independence_witness": list(rep.independence_witness),
        "cover_witness": list(rep.cover_witness),
        "chain_checks": [
            {"name": c.name, "lhs": c.lhs, "rhs": c.rhs,
             "relation": c.relation, "holds": c.holds}
            for c in rep.chain_checks
        ],
    }
    return CommandOutput(EXIT_OK, result, graph=g, digest=digest)


def _cmd_holes(args) -> CommandOutput:
    g, digest = _load_graph(args)
    budget = args.budget_steps if args.budget_steps is not None else _DEFAULT_HOLE_BUDGET
    out = three_color_heuristic(g, budget=budget, seed=args.seed)
    base = {"holes": [int(v) for v in out.state.holes],
            "rotation_steps": out.state.rotation_steps}
    if out.found:
        result = {"outcome": "coloring",
                  "coloring": out.coloring.as_list(),
                  "colors_used": out.coloring.colors_used(), **base}
        return CommandOutput(EXIT_OK, result, graph=g, coloring=out.coloring,
                             digest=digest)
    result = {"outcome": "unknown", "reason": out.reason, **base}
    return CommandOutput(EXIT_UNKNOWN, result, graph=g, digest=digest)


def _cmd_gen(args) -> CommandOutput:
    if not args.gen:
        raise KchromaError("gen requires --gen SPEC")
    spec = parse_spec(args.gen)
    g = generate(spec)
    return CommandOutput(EXIT_OK,
                         {"spec": spec.canonical_string(),
                          "vertex_count": g.vertex_count,
                          "edge_count": g.edge_count,
                          "dimacs": emit_dimacs_col(g)},
                         graph=g,
                         digest=_digest_bytes(spec.canonical_string().encode()))


def _cmd_reduce(args) -> CommandOutput:
    if not args.input:
        raise KchromaError("reduce requires --input FILE.cnf")
    data = _read_input(args.input)
    digest = _digest_bytes(data)
    formula = parse_dimacs_cnf(data)
    m = reduce_3sat_to_3col(formula)
    map_payload = {
        "palette": {"true": 0, "false": 1, "dummy": 2},
        "literal_vertices": [[p, q] for p, q in m.literal_vertices],
        "clause_gadgets": [list(gad) for gad in m.clause_gadget_vertices],
    }
    if args.map_out:
        with open(args.map_out, "w", encoding="utf-8") as fh:
            json.dump(map_payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return CommandOutput(EXIT_OK,
                         {"variables": formula.variable_count,
                          "clauses": len(formula.clauses),
                          "vertex_count": m.graph.vertex_count,
                          "edge_count": m.graph.edge_count,
                          "dimacs": emit_dimacs_col(m.graph),
                          "map": map_payload},
                         graph=m.graph, digest=digest)


# ------------------------------------------------------------------- bench

_BENCH_COMMANDS = ("bipartite", "color", "decide", "chi", "holes", "bounds")


def _run_instance(inst: dict) -> dict:
    row = {"id": str(inst.get("id", "?")), "command": str(inst.get("command", "?"))}
    t0 = time.perf_counter()
    try:
        command = inst["command"]
        if command not in _BENCH_COMMANDS:
            raise KchromaError(f"unsupported bench command {command!r}")
        if "gen" in inst:
            g = generate(parse_spec(inst["gen"]))
        elif "input" in inst:
            g = parse_dimacs_col(_read_input(inst["input"]))
        else:
            raise KchromaError("instance needs 'gen' or 'input'")
        budget = None
        if inst.get("budget_nodes") is not None or inst.get("budget_ms") is not None:
            ms = inst.get("budget_ms")
            budget = Budget(max_nodes=inst.get("budget_nodes"),
                            max_seconds=None if ms is None else ms / 1000.0)
        nodes = None
        if command == "bipartite":
            status = "colorable" if two_color(g).colorable else "not_colorable"
        elif command == "color":
            res = greedy_color(g)
            status = f"colors_used={res.colors_used}"
        elif command == "decide":
            res = decide_k_colorable(g, int(inst["k"]), budget)
            nodes = res.stats.nodes_expanded
            status = ("colorable" if isinstance(res, Colorable)
                      else "not_colorable" if isinstance(res, NotColorable)
                      else "budget_exhausted")
        elif command == "chi":
            res = chromatic_number(g, budget)
            nodes = res.stats.nodes_expanded
            status = (f"chromatic={res.value}" if isinstance(res, ExactChromatic)
                      else f"bounds=[{res.lower},{res.upper}]")
        elif command == "holes":
            out = three_color_heuristic(
                g, budget=inst.get("budget_steps", _DEFAULT_HOLE_BUDGET),
                seed=inst.get("seed", 0))
            status = "coloring" if out.found else "unknown"
        else:
            rep = bounds_report(g, compute_chi=True, budget=budget)
            status = f"omega={rep.clique_number} chi={rep.chromatic}"
        row["status"] = status
        if nodes is not None:
            row["nodes_expanded"] = nodes
    except (KchromaError, OSError, KeyError, ValueError) as exc:
        row["status"] = "error"
        row["detail"] = f"{type(exc).__name__}: {exc}"
    row["wall_time"] = time.perf_counter() - t0
    return row


def _cmd_bench(args) -> CommandOutput:
    if args.check_linear:
        return _bench_check_linear(args)
    if not args.suite:
        raise KchromaError("bench requires a suite file (or --check-linear)")
    try:
        data = _read_input(args.suite)
        suite = json.loads(data.decode("utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise KchromaError(f"cannot read suite: {exc}") from exc
    instances = suite.get("instances", []) if isinstance(suite, dict) else []
    if args.jobs > 1 and instances:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_run_instance, instances))
    else:
        rows = [_run_instance(inst) for inst in instances]
    errors = sum(1 for r in rows if r["status"] == "error")
    aggregate = {
        "instances": len(rows),
        "ok": len(rows) - errors,
        "errors": errors,
        "total_nodes": int(sum(r.get("nodes_expanded") or 0 for r in rows)),
        "total_wall_time": float(sum(r["wall_time"] for r in rows)),
    }
    code = EXIT_INPUT_ERROR if errors else EXIT_OK
    return CommandOutput(code, {"rows": rows, "aggregate": aggregate},
                         digest=_digest_bytes(data))


def _bench_check_linear(args) -> CommandOutput:
    """Time 2-colorability on a cycle-size ladder and fit log t ~ log(V+E)."""
    sizes = [int(s) for s in args.sizes.split(",")] if args.sizes else list(_LINEAR_SIZES)
    if any(s < 3 for s in sizes) or len(sizes) < 2:
        raise KchromaError("--sizes needs at least two cycle lengths >= 3")
    two_color(generate(GeneratorSpec("cycle", 64)))  # warm-up (JIT compile)
    ve, secs = [], []
    for size in sizes:
        g = generate(GeneratorSpec("cycle", size))
        reps = max(3, 100_000 // size)
        best = math.inf
        for _ in range(reps):
            t0 = time.perf_counter()
            res = two_color(g)
            best = min(best, time.perf_counter() - t0)
        assert res.colorable == (size % 2 == 0)
        ve.append(g.vertex_count + g.edge_count)
        secs.append(best)
    slope = float(np.polyfit(np.log(ve), np.log(secs), 1)[0])
    result = {"mode": "check_linear", "sizes": sizes, "ve": ve,
              "seconds": secs, "fit_exponent": slope}
    spec_text = "check-linear:" + ",".join(str(s) for s in sizes)
    return CommandOutput(EXIT_OK, result, digest=_digest_bytes(spec_text.encode()))


# ---------------------------------------------------------------- renderers

def _ansi_enabled() -> bool:
    if os.environ.get("KCHROMA_NO_COLOR"):
        return False
    return sys.stdout.isatty()


def _style(text: str, code: str) -> str:
    if _ansi_enabled():
        return f"\x1b[{code}m{text}\x1b[0m"
    return text


def _summary_lines(sub: str, out: CommandOutput) -> list[str]:
    r = out.result
    lines = [f"kchroma {sub}"]
    if sub == "bench" and "rows" in r:
        width = max([len(row["id"]) for row in r["rows"]] + [8])
        lines.append(f"{'id':<{width}}  {'command':<9}  {'status':<24}  {'nodes':>10}  wall_time")
        for row in r["rows"]:
            nodes = row.get("nodes_expanded")
            status = row["status"]
            shown = _style(status, "31") if status == "error" else status
            lines.append(f"{row['id']:<{width}}  {row['command']:<9}  {shown:<24}  "
                         f"{nodes if nodes is not None else '-':>10}  {row['wall_time']:.4f}")
        agg = r["aggregate"]
        lines.append(f"aggregate: instances={agg['instances']} ok={agg['ok']} "
                     f"errors={agg['errors']} total_nodes={agg['total_nodes']} "
                     f"total_wall_time={agg['total_wall_time']:.4f}")
        return lines
    if sub == "bench":
        lines.append(f"sizes={r['sizes']} seconds={[f'{s:.6f}' for s in r['seconds']]}")
        lines.append(f"fit_exponent={r['fit_exponent']:.3f}")
        return lines
    if sub == "bounds":
        for key in ("clique_number", "independence_number", "min_vertex_cover",
                    "max_degree_plus_one", "chromatic"):
            lines.append(f"{key}: {r[key]}")
        for c in r["chain_checks"]:
            verdict = _style("pass", "32") if c["holds"] else _style("FAIL", "31")
            lines.append(f"check {c['name']}: {c['lhs']} {c['relation']} {c['rhs']} [{verdict}]")
        return lines
    for key, value in r.items():
        if key in ("dimacs", "map"):
            continue
        text = str(value)
        if len(text) > 200:
            text = text[:200] + "..."
        lines.append(f"{key}: {text}")
    return lines


def _render(args, out: CommandOutput) -> str:
    fmt = args.format
    if fmt == "json":
        report = {
            "schema_version": 1,
            "tool": {"name": "kchroma", "version": __version__},
            "subcommand": args.subcommand,
            "input_digest": out.digest or _digest_bytes(b""),
            "result": out.result,
        }
        if out.stats is not None:
            report["stats"] = out.stats
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    if fmt == "summary":
        return "\n".join(_summary_lines(args.subcommand, out)) + "\n"
    if fmt == "dot":
        if out.graph is None:
            raise KchromaError(f"--format dot is not available for {args.subcommand}")
        return export_dot(out.graph, out.coloring)
    if fmt == "dimacs":
        if out.graph is None:
            raise KchromaError(f"--format dimacs is not available for {args.subcommand}")
        return emit_dimacs_col(out.graph)
    raise KchromaError(f"unknown format {fmt!r}")


def _error_report(args, exc: Exception) -> str:
    sub = getattr(args, "subcommand", None) or "color"
    report = {
        "schema_version": 1,
        "tool": {"name": "kchroma", "version": __version__},
        "subcommand": sub,
        "error": {"type": type(exc).__name__, "message": str(exc)},
    }
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


# --------------------------------------------------------------------- main

_HANDLERS = {
    "color": _cmd_color,
    "decide": _cmd_decide,
    "chi": _cmd_chi,
    "bipartite": _cmd_bipartite,
    "bounds": _cmd_bounds,
    "holes": _cmd_holes,
    "reduce": _cmd_reduce,
    "gen": _cmd_gen,
    "bench": _cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kchroma",
        description="Graph k-colorability toolkit: decide, color, bound, reduce.")
    parser.add_argument("--version", action="version", version=f"kchroma {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p, want_input=True):
        if want_input:
            src = p.add_mutually_exclusive_group()
            src.add_argument("--input", metavar="PATH",
                             help="DIMACS file to read ('-' for stdin)")
            src.add_argument("--gen", metavar="SPEC",
                             help="generator spec, e.g. cycle:12 or gnp:20,0.25,7")
        p.add_argument("--format", choices=("json", "summary", "dot", "dimacs"),
                       default="json")
        p.add_argument("--budget-nodes", type=int, metavar="N")
        p.add_argument("--budget-ms", type=float, metavar="MS")
        p.add_argument("--budget-steps", type=int, metavar="N")
        p.add_argument("--seed", type=int, default=0, metavar="N")

    for name, text in (
        ("color", "greedy first-fit coloring in natural vertex order"),
        ("decide", "exact k-colorability decision"),
        ("chi", "exact chromatic number"),
        ("bipartite", "2-colorability with an odd-cycle certificate"),
        ("bounds", "clique/independence/cover bounds and chain audit"),
        ("holes", "hole-rotation 3-coloring heuristic"),
    ):
        p = sub.add_parser(name, help=text)
        add_common(p)
        if name == "decide":
            p.add_argument("--k", type=int, metavar="K")
        if name == "bounds":
            p.add_argument("--no-chi", action="store_true",
                           help="skip the exact chromatic number")
            p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)

    p = sub.add_parser("gen", help="generate a graph and emit it")
    p.add_argument("--gen", metavar="SPEC", required=True)
    p.add_argument("--format", choices=("json", "summary", "dot", "dimacs"),
                   default="dimacs")

    p = sub.add_parser("reduce", help="reduce a 3-CNF formula to a 3-coloring instance")
    p.add_argument("--input", metavar="PATH.cnf", required=True)
    p.add_argument("--map-out", metavar="PATH.json",
                   help="write the vertex-role sidecar JSON here")
    p.add_argument("--format", choices=("json", "summary", "dimacs", "dot"),
                   default="dimacs")

    p = sub.add_parser("bench", help="run a benchmark suite or the linearity check")
    p.add_argument("suite", nargs="?", metavar="SUITE.json")
    p.add_argument("--check-linear", action="store_true",
                   help="fit wall time vs V+E for 2-coloring on a cycle ladder")
    p.add_argument("--sizes", metavar="N1,N2,...",
                   help="cycle ladder sizes for --check-linear")
    p.add_argument("--jobs", type=int, default=1, metavar="N")
    p.add_argument("--format", choices=("json", "summary"), default="json")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = _HANDLERS[args.subcommand](args)
        sys.stdout.write(_render(args, out))
        return out.exit_code
    except (KchromaError, OSError, ValueError) as exc:
        sys.stderr.write(f"kchroma: error: {exc}\n")
        sys.stdout.write(_error_report(args, exc))
        return EXIT_INPUT_ERROR


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
