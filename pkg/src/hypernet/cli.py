"""Command-line front door.

One subcommand per invocation; all input/output formats are the text
formats documented in ``formats`` and ``reduction``. Exit status: 0
success, 1 parse/validation failure (including a failed verify), 2
exhausted search budget, 3 empty hypernetwork result.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import formats, reduction
from .cnf import parse_dimacs, random_formula
from .core import Hypergraph, classify_hypergraph, is_acyclic
from .errors import (
    BudgetExceeded,
    HypernetError,
    LimitExceeded,
    OracleTooLarge,
    TooLarge,
)
from .paths import DEFAULT_LIMIT, check_hyperpath, iter_hyperpaths
from .solver import DEFAULT_NODE_BUDGET, find_forced_hyperpath, s_hypernetwork, sdhp_compute

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_BUDGET = 2
EXIT_EMPTY = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; 2 is reserved for exhausted budgets
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load_hypergraph(path: str) -> Hypergraph:
    return formats.read_hypergraph(_read_text(path))


def _resolve_vertex(h: Hypergraph, token: str) -> int:
    by_label = h.vertex_with_label(token)
    if by_label is not None:
        return by_label
    try:
        return h.check_vertex(int(token))
    except ValueError:
        raise HypernetError(f"unknown vertex {token!r} (no such label)")


def _emit(args, text: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def _witness_payload(path) -> dict:
    return {
        "s": path.s,
        "d": path.d,
        "edges": sorted(path.edge_ids),
        "order": list(path.ordering),
    }


def _maybe_figure(args, h: Hypergraph, highlight, title: str) -> None:
    if getattr(args, "figure", None):
        from . import viz

        viz.render_figure(h, args.figure, frozenset(highlight), title=title)


def _cmd_classify(args) -> int:
    h = _load_hypergraph(args.hypergraph)
    cls = classify_hypergraph(h).value
    _emit(args, cls, {"class": cls})
    return EXIT_OK


def _cmd_acyclic(args) -> int:
    h = _load_hypergraph(args.hypergraph)
    acyclic = is_acyclic(h)
    _emit(args, "acyclic" if acyclic else "cyclic", {"acyclic": acyclic})
    return EXIT_OK


def _cmd_check_hyperpath(args) -> int:
    h = _load_hypergraph(args.hypergraph)
    line = next(
        (l for l in _read_text(args.certificate).splitlines() if l.strip()), ""
    )
    s, d, edges, order = formats.read_certificate(line)
    h.check_vertex(s)
    h.check_vertex(d)
    for edge_id in edges:
        h.check_edge_id(edge_id)
    problems: list[str] = []
    if sorted(order) != sorted(edges):
        problems.append("order is not a permutation of the edge set")
    else:
        reached = {s}
        for edge_id in order:
            if not h.edges[edge_id].tail <= reached:
                problems.append(f"edge {edge_id} fires before its tail is covered")
                break
            reached.update(h.edges[edge_id].head)
        else:
            if not order:
                problems.append("empty edge set")
            elif d not in h.edges[order[-1]].head:
                problems.append("last edge's head does not contain d")
    if not problems and check_hyperpath(h, edges, s, d) is None:
        problems.append("edge set is not minimal (or loses d when ordered)")
    valid = not problems
    text = "VALID" if valid else "INVALID: " + "; ".join(problems)
    _emit(args, text, {"valid": valid, "problems": problems})
    return EXIT_OK if valid else EXIT_INVALID


def _cmd_enumerate(args) -> int:
    h = _load_hypergraph(args.hypergraph)
    s = _resolve_vertex(h, args.s)
    d = _resolve_vertex(h, args.d)
    count = 0
    for path in iter_hyperpaths(h, s, d):
        count += 1
        if count > args.limit:
            raise LimitExceeded(f"more than {args.limit} hyperpaths")
        if args.format == "json":
            print(json.dumps(_witness_payload(path)))
        else:
            print(formats.write_certificate(path))
    return EXIT_OK


def _cmd_fhep(args) -> int:
    h = _load_hypergraph(args.hypergraph)
    s = _resolve_vertex(h, args.s)
    d = _resolve_vertex(h, args.d)
    edge_id = h.check_edge_id(args.edge)
    witness = find_forced_hyperpath(h, s, d, edge_id, args.budget)
    if witness is None:
        _emit(args, "NO", {"forced": False, "witness": None})
        return EXIT_OK
    text = "YES\n" + formats.write_certificate(witness)
    _emit(args, text, {"forced": True, "witness": _witness_payload(witness)})
    _maybe_figure(
        args,
        h,
        witness.edge_ids,
        f"hyperpath {h.label_of(s)} -> {h.label_of(d)} through edge {edge_id}",
    )
    return EXIT_OK


def _report_hypernetwork(args, h: Hypergraph, net) -> int:
    payload = {
        "s": net.s,
        "d": net.d,
        "vertices": sorted(net.vertex_ids),
        "edges": sorted(net.edge_ids),
        "empty": not net.edge_ids and not net.vertex_ids,
    }
    _emit(args, formats.write_hypernetwork(net).rstrip("\n"), payload)
    target = "-" if net.d is None else h.label_of(net.d)
    _maybe_figure(
        args, h, net.edge_ids, f"hypernetwork {h.label_of(net.s)} -> {target}"
    )
    return EXIT_EMPTY if payload["empty"] else EXIT_OK


def _cmd_sdhp(args) -> int:
    h = _load_hypergraph(args.hypergraph)
    s = _resolve_vertex(h, args.s)
    d = _resolve_vertex(h, args.d)
    net = sdhp_compute(h, s, d, limit=args.limit, node_budget=args.budget)
    return _report_hypernetwork(args, h, net)


def _cmd_s_hypernetwork(args) -> int:
    h = _load_hypergraph(args.hypergraph)
    s = _resolve_vertex(h, args.s)
    net = s_hypernetwork(h, s, limit=args.limit, node_budget=args.budget)
    return _report_hypernetwork(args, h, net)


def _cmd_reduce(args) -> int:
    formula = parse_dimacs(_read_text(args.cnf))
    gadget, rmap = reduction.build_reduction(formula)
    stem = Path(args.cnf if args.cnf != "-" else "formula")
    out_path = Path(args.output) if args.output else stem.with_suffix(".hg")
    map_path = Path(args.map) if args.map else stem.with_suffix(".map")
    out_path.write_text(formats.write_hypergraph(gadget), encoding="utf-8")
    map_path.write_text(reduction.write_reduction_map(rmap), encoding="utf-8")
    text = (
        f"wrote {out_path} ({gadget.n_vertices} vertices, {gadget.n_edges} edges)\n"
        f"wrote {map_path}\n"
        f"forced edge: {rmap.forced_edge} "
        f"({gadget.label_of(rmap.p_vertices[-1])} -> {gadget.label_of(rmap.q0_vertex)})\n"
        f"source: p0 = vertex {rmap.source}, target: f = vertex {rmap.target}"
    )
    payload = {
        "hypergraph": str(out_path),
        "map": str(map_path),
        "n_vertices": gadget.n_vertices,
        "n_edges": gadget.n_edges,
        "forced_edge": rmap.forced_edge,
        "source": rmap.source,
        "target": rmap.target,
    }
    _emit(args, text, payload)
    _maybe_figure(args, gadget, {rmap.forced_edge}, "reduction gadget (forced edge)")
    return EXIT_OK


def _cmd_verify(args) -> int:
    if (args.cnf is None) == (args.random is None):
        raise HypernetError("verify needs a CNF file or --random N (not both)")
    if args.cnf is not None:
        formula = parse_dimacs(_read_text(args.cnf))
        report = reduction.verify_equivalence(formula, args.budget)
        payload = {
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in report.checks
            ],
            "all_passed": report.all_passed,
        }
        _emit(args, report.to_text(), payload)
        return EXIT_OK if report.all_passed else EXIT_INVALID
    rng = random.Random(args.seed)
    failures = 0
    instances = []
    for index in range(args.random):
        formula = random_formula(
            rng,
            rng.randint(3, max(3, args.max_vars)),
            rng.randint(1, args.max_clauses),
        )
        report = reduction.verify_equivalence(formula, args.budget)
        instances.append(
            {"instance": index, "all_passed": report.all_passed}
        )
        if report.all_passed:
            if args.format != "json":
                print(f"PASS instance {index} (n={formula.n_vars} m={formula.n_clauses})")
        else:
            failures += 1
            if args.format != "json":
                for line in report.to_text().splitlines():
                    print(f"instance {index}: {line}")
    summary = f"{args.random - failures}/{args.random} instances passed"
    if args.format == "json":
        print(json.dumps({"instances": instances, "summary": summary,
                          "all_passed": failures == 0}))
    else:
        print(("PASS " if failures == 0 else "FAIL ") + summary)
    return EXIT_OK if failures == 0 else EXIT_INVALID


def _cmd_dot(args) -> int:
    h = _load_hypergraph(args.hypergraph)
    highlight = frozenset(
        h.check_edge_id(e)
        for e in ([int(x) for x in args.highlight.split(",")] if args.highlight else [])
    )
    text = formats.to_dot(h, highlight)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    return EXIT_OK


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text",
                   help="report format (default text)")


def _add_figure(p: argparse.ArgumentParser) -> None:
    p.add_argument("--figure", metavar="PATH",
                   help="also render a matplotlib figure of the hypergraph")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hypernet", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="print the hypergraph class (B/F/BF/general)")
    p.add_argument("hypergraph")
    _add_format(p)
    p.set_defaults(run=_cmd_classify)

    p = sub.add_parser("acyclic", help="print acyclic or cyclic")
    p.add_argument("hypergraph")
    _add_format(p)
    p.set_defaults(run=_cmd_acyclic)

    p = sub.add_parser("check-hyperpath", help="validate a hyperpath certificate")
    p.add_argument("hypergraph")
    p.add_argument("certificate", help="certificate file, or - for stdin")
    _add_format(p)
    p.set_defaults(run=_cmd_check_hyperpath)

    p = sub.add_parser("enumerate", help="stream every s-d hyperpath certificate")
    p.add_argument("hypergraph")
    p.add_argument("--s", required=True, help="source vertex (label or index)")
    p.add_argument("--d", required=True, help="target vertex (label or index)")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    _add_format(p)
    p.set_defaults(run=_cmd_enumerate)

    p = sub.add_parser("fhep", help="decide whether an s-d hyperpath can use an edge")
    p.add_argument("hypergraph")
    p.add_argument("--s", required=True)
    p.add_argument("--d", required=True)
    p.add_argument("--edge", type=int, required=True, help="edge id to force")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    _add_format(p)
    _add_figure(p)
    p.set_defaults(run=_cmd_fhep)

    p = sub.add_parser("sdhp", help="compute the (s,d)-hypernetwork")
    p.add_argument("hypergraph")
    p.add_argument("--s", required=True)
    p.add_argument("--d", required=True)
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    _add_format(p)
    _add_figure(p)
    p.set_defaults(run=_cmd_sdhp)

    p = sub.add_parser("s-hypernetwork", help="compute the s-hypernetwork")
    p.add_argument("hypergraph")
    p.add_argument("--s", required=True)
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    _add_format(p)
    _add_figure(p)
    p.set_defaults(run=_cmd_s_hypernetwork)

    p = sub.add_parser("reduce", help="build the gadget for a DIMACS 3-CNF file")
    p.add_argument("cnf")
    p.add_argument("-o", "--output", help="hypergraph file (default <cnf>.hg)")
    p.add_argument("--map", help="sidecar map file (default <cnf>.map)")
    _add_format(p)
    _add_figure(p)
    p.set_defaults(run=_cmd_reduce)

    p = sub.add_parser(
        "verify", help="check the reduction against brute-force satisfiability"
    )
    p.add_argument("cnf", nargs="?", help="DIMACS file (or use --random)")
    p.add_argument("--random", type=int, metavar="N",
                   help="verify N random formulas instead of a file")
    p.add_argument("--max-vars", type=int, default=6)
    p.add_argument("--max-clauses", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    _add_format(p)
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("dot", help="export Graphviz DOT")
    p.add_argument("hypergraph")
    p.add_argument("-o", "--output", help="write here instead of stdout")
    p.add_argument("--highlight", help="comma-separated edge ids to color")
    p.set_defaults(run=_cmd_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (LimitExceeded, BudgetExceeded, OracleTooLarge, TooLarge) as exc:
        print(f"hypernet: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (HypernetError, ValueError, OSError) as exc:
        print(f"hypernet: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
