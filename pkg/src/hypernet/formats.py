"""Text exchange formats and DOT export.

Hypergraph files:

    hypergraph <n_vertices> <n_edges>
    edge <id>: <tail csv> -> <head csv>     # one per edge, id order, '-' = empty
    label <vertex> <string>                 # optional

Hyperpath certificates are one line:

    hyperpath s=<v> d=<v> edges=<csv of edge ids> order=<csv>

Hypernetwork reports:

    hypernetwork s=<v> d=<v|->
    vertices: <csv|->
    edges: <csv|->

All vertex/edge references in files are numeric ids; display labels ride
along on ``label`` lines.
"""

from __future__ import annotations

import re

from .core import Hypergraph
from .errors import InvalidReference, ParseError
from .paths import Hyperpath
from .solver import Hypernetwork


def _csv(values) -> str:
    items = sorted(values)
    return ",".join(str(v) for v in items) if items else "-"


def _csv_ordered(values) -> str:
    return ",".join(str(v) for v in values) if values else "-"


def _parse_csv(text: str, what: str) -> list[int]:
    text = text.strip()
    if text == "-" or text == "":
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ParseError(f"bad {what} list {text!r}")


def write_hypergraph(h: Hypergraph) -> str:
    lines = [f"hypergraph {h.n_vertices} {h.n_edges}"]
    for e in h.edges:
        lines.append(f"edge {e.id}: {_csv(e.tail)} -> {_csv(e.head)}")
    for vertex in sorted(h.vertex_labels):
        lines.append(f"label {vertex} {h.vertex_labels[vertex]}")
    return "\n".join(lines) + "\n"


_EDGE_LINE = re.compile(r"^edge (\d+): (\S+) -> (\S+)$")


def read_hypergraph(text: str) -> Hypergraph:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise ParseError("empty hypergraph file")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "hypergraph":
        raise ParseError(f"bad header {lines[0]!r}")
    try:
        n_vertices, n_edges = int(header[1]), int(header[2])
    except ValueError:
        raise ParseError(f"bad header counts in {lines[0]!r}")
    h = Hypergraph(n_vertices)
    cursor = 1
    for expected_id in range(n_edges):
        if cursor >= len(lines):
            raise ParseError(f"expected {n_edges} edge lines, found {expected_id}")
        match = _EDGE_LINE.match(lines[cursor])
        if not match:
            raise ParseError(f"bad edge line {lines[cursor]!r}")
        if int(match.group(1)) != expected_id:
            raise ParseError(
                f"edge line {lines[cursor]!r} out of order; expected id {expected_id}"
            )
        tail = _parse_csv(match.group(2), "tail")
        head = _parse_csv(match.group(3), "head")
        try:
            h.add_edge(tail, head)
        except (ValueError, InvalidReference) as exc:
            raise ParseError(f"edge {expected_id}: {exc}")
        cursor += 1
    for line in lines[cursor:]:
        parts = line.split(maxsplit=2)
        if len(parts) != 3 or parts[0] != "label":
            raise ParseError(f"bad trailing line {line!r}")
        try:
            h.set_label(int(parts[1]), parts[2])
        except (ValueError, InvalidReference) as exc:
            raise ParseError(f"bad label line {line!r}: {exc}")
    return h


def write_certificate(p: Hyperpath) -> str:
    return (
        f"hyperpath s={p.s} d={p.d} "
        f"edges={_csv(p.edge_ids)} order={_csv_ordered(p.ordering)}"
    )


_CERT_LINE = re.compile(
    r"^hyperpath s=(\d+) d=(\d+) edges=(\S+) order=(\S+)$"
)


def read_certificate(line: str) -> tuple[int, int, frozenset[int], tuple[int, ...]]:
    """Parse a certificate line into (s, d, edge set, claimed ordering)."""
    match = _CERT_LINE.match(line.strip())
    if not match:
        raise ParseError(f"bad hyperpath certificate {line!r}")
    s, d = int(match.group(1)), int(match.group(2))
    edges = frozenset(_parse_csv(match.group(3), "edge"))
    order = tuple(_parse_csv(match.group(4), "order"))
    return s, d, edges, order


def write_hypernetwork(net: Hypernetwork) -> str:
    d_text = "-" if net.d is None else str(net.d)
    return (
        f"hypernetwork s={net.s} d={d_text}\n"
        f"vertices: {_csv(net.vertex_ids)}\n"
        f"edges: {_csv(net.edge_ids)}\n"
    )


def read_hypernetwork(text: str) -> Hypernetwork:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) != 3:
        raise ParseError("hypernetwork report must have exactly three lines")
    match = re.match(r"^hypernetwork s=(\d+) d=(\d+|-)$", lines[0])
    if not match:
        raise ParseError(f"bad hypernetwork header {lines[0]!r}")
    if not lines[1].startswith("vertices:") or not lines[2].startswith("edges:"):
        raise ParseError("hypernetwork report lines out of order")
    s = int(match.group(1))
    d = None if match.group(2) == "-" else int(match.group(2))
    vertices = frozenset(_parse_csv(lines[1].split(":", 1)[1], "vertex"))
    edges = frozenset(_parse_csv(lines[2].split(":", 1)[1], "edge"))
    return Hypernetwork(vertices, edges, s, d)


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(
    h: Hypergraph,
    highlight_edges: frozenset[int] | set[int] = frozenset(),
    name: str = "hypergraph",
) -> str:
    """Render to Graphviz DOT: vertices as circles, each hyperedge as a
    small square junction with arcs tail -> junction -> head. Highlighted
    edges are drawn in red."""
    out = [
        f"digraph {name} {{",
        "  rankdir=LR;",
        '  node [fontsize=10 fontname="Helvetica"];',
    ]
    for vertex in range(h.n_vertices):
        label = _dot_quote(h.label_of(vertex))
        out.append(f"  v{vertex} [label={label} shape=circle];")
    for e in h.edges:
        color = "red" if e.id in highlight_edges else "gray30"
        width = "2.0" if e.id in highlight_edges else "1.0"
        out.append(
            f"  e{e.id} [label={_dot_quote(f'e{e.id}')} shape=box "
            f"width=0.12 height=0.12 color={color} fontcolor={color}];"
        )
        for u in sorted(e.tail):
            out.append(
                f"  v{u} -> e{e.id} [dir=none color={color} penwidth={width}];"
            )
        for w in sorted(e.head):
            out.append(f"  e{e.id} -> v{w} [color={color} penwidth={width}];")
    out.append("}")
    return "\n".join(out) + "\n"
