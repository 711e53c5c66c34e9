"""Directed hypergraph data model and structural predicates.

A hypergraph owns a fixed vertex set 0..n-1 and an ordered list of directed
hyperedges (tail set -> head set) with dense ids 0..m-1. Edges form a
multiset: two edges with identical tails and heads are still distinct when
their ids differ. The vertex count is fixed at construction and edges are
append-only, so a fully built instance is safe to share across concurrent
readers; no operation here mutates its input.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

from .errors import InvalidReference


class EdgeClass(Enum):
    """Cardinality class of a single hyperedge."""

    B = "B"  # exactly one head vertex
    F = "F"  # exactly one tail vertex
    BOTH = "both"
    NEITHER = "neither"


class HypergraphClass(Enum):
    """Most specific class shared by every edge of a hypergraph."""

    B = "B"
    F = "F"
    BF = "BF"
    GENERAL = "general"


@dataclass(frozen=True)
class Hyperedge:
    """Directed hyperedge: all of ``tail`` must be reached before it fires,
    after which all of ``head`` is reached. Either side may be empty; the
    two sides never share a vertex."""

    id: int
    tail: frozenset[int]
    head: frozenset[int]


class Hypergraph:
    """Vertex universe plus an append-only multiset of hyperedges."""

    __slots__ = ("n_vertices", "edges", "vertex_labels", "_label_index")

    def __init__(
        self,
        n_vertices: int,
        vertex_labels: Mapping[int, str] | None = None,
    ) -> None:
        if n_vertices < 0:
            raise ValueError("vertex count must be non-negative")
        self.n_vertices = n_vertices
        self.edges: list[Hyperedge] = []
        self.vertex_labels: dict[int, str] = {}
        self._label_index: dict[str, int] = {}
        for vertex, label in (vertex_labels or {}).items():
            self.set_label(vertex, label)

    @classmethod
    def from_edges(
        cls,
        n_vertices: int,
        edges: Iterable[tuple[Iterable[int], Iterable[int]]],
        vertex_labels: Mapping[int, str] | None = None,
    ) -> "Hypergraph":
        h = cls(n_vertices, vertex_labels)
        for tail, head in edges:
            h.add_edge(tail, head)
        return h

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def check_vertex(self, vertex: int) -> int:
        if not (0 <= vertex < self.n_vertices):
            raise InvalidReference(f"vertex {vertex} not in 0..{self.n_vertices - 1}")
        return vertex

    def check_edge_id(self, edge_id: int) -> int:
        if not (0 <= edge_id < len(self.edges)):
            raise InvalidReference(f"edge {edge_id} not in 0..{len(self.edges) - 1}")
        return edge_id

    def edge(self, edge_id: int) -> Hyperedge:
        return self.edges[self.check_edge_id(edge_id)]

    def add_edge(self, tail: Iterable[int], head: Iterable[int]) -> Hyperedge:
        """Append an edge and return it; its id is the next dense index."""
        tail_set = frozenset(tail)
        head_set = frozenset(head)
        for vertex in tail_set | head_set:
            self.check_vertex(vertex)
        if tail_set & head_set:
            raise ValueError(
                f"tail and head share vertices {sorted(tail_set & head_set)}"
            )
        edge = Hyperedge(len(self.edges), tail_set, head_set)
        self.edges.append(edge)
        return edge

    def set_label(self, vertex: int, label: str) -> None:
        self.check_vertex(vertex)
        if label in self._label_index and self._label_index[label] != vertex:
            raise ValueError(f"duplicate vertex label {label!r}")
        old = self.vertex_labels.get(vertex)
        if old is not None:
            del self._label_index[old]
        self.vertex_labels[vertex] = label
        self._label_index[label] = vertex

    def label_of(self, vertex: int) -> str:
        """Display label for a vertex; falls back to the numeric index."""
        return self.vertex_labels.get(self.check_vertex(vertex), str(vertex))

    def vertex_with_label(self, label: str) -> int | None:
        return self._label_index.get(label)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (
            self.n_vertices == other.n_vertices
            and [(e.tail, e.head) for e in self.edges]
            == [(e.tail, e.head) for e in other.edges]
            and self.vertex_labels == other.vertex_labels
        )

    def __repr__(self) -> str:
        return f"Hypergraph(n_vertices={self.n_vertices}, n_edges={self.n_edges})"


@dataclass(frozen=True)
class SubView:
    """A subset of a host hypergraph, referenced by vertex and edge ids."""

    vertex_ids: frozenset[int]
    edge_ids: frozenset[int]

    @classmethod
    def whole(cls, h: Hypergraph) -> "SubView":
        return cls(frozenset(range(h.n_vertices)), frozenset(range(h.n_edges)))


def classify_edge(e: Hyperedge) -> EdgeClass:
    b = len(e.head) == 1
    f = len(e.tail) == 1
    if b and f:
        return EdgeClass.BOTH
    if b:
        return EdgeClass.B
    if f:
        return EdgeClass.F
    return EdgeClass.NEITHER


def classify_hypergraph(h: Hypergraph) -> HypergraphClass:
    """Most specific class covering every edge. A hypergraph whose edges
    all have singleton tails *and* singleton heads (vacuously, one with no
    edges) reports BF."""
    all_b = all(len(e.head) == 1 for e in h.edges)
    all_f = all(len(e.tail) == 1 for e in h.edges)
    if all_b and all_f:
        return HypergraphClass.BF
    if all_b:
        return HypergraphClass.B
    if all_f:
        return HypergraphClass.F
    if all(len(e.head) == 1 or len(e.tail) == 1 for e in h.edges):
        return HypergraphClass.BF
    return HypergraphClass.GENERAL


def _view_ids(sub: object) -> tuple[frozenset[int], frozenset[int]]:
    return frozenset(sub.vertex_ids), frozenset(sub.edge_ids)  # type: ignore[attr-defined]


def is_subview(inner: object, outer: object, host: Hypergraph) -> bool:
    """Refinement between two views of the same host: containment of both
    id sets plus closure (every inner edge keeps its tail and head inside
    the inner vertex set)."""
    inner_v, inner_e = _view_ids(inner)
    outer_v, outer_e = _view_ids(outer)
    for vertex in inner_v | outer_v:
        host.check_vertex(vertex)
    for edge_id in inner_e | outer_e:
        host.check_edge_id(edge_id)
    if not (inner_v <= outer_v and inner_e <= outer_e):
        return False
    return all(
        host.edges[edge_id].tail <= inner_v and host.edges[edge_id].head <= inner_v
        for edge_id in inner_e
    )


def is_subhypergraph(sub: object, host: Hypergraph) -> bool:
    """True when ``sub`` (anything exposing vertex_ids/edge_ids) is a valid
    subhypergraph of ``host``. Unknown ids raise InvalidReference."""
    return is_subview(sub, SubView.whole(host), host)


def reachability_digraph(h: Hypergraph) -> dict[int, set[int]]:
    """Arc-expansion digraph: u -> v iff some edge has u in its tail and v
    in its head. Every vertex keys an (possibly empty) arc set."""
    arcs: dict[int, set[int]] = {v: set() for v in range(h.n_vertices)}
    for e in h.edges:
        for u in e.tail:
            arcs[u].update(e.head)
    return arcs


def simple_path_exists(h: Hypergraph, s: int, d: int) -> bool:
    """Decide whether a stepwise tail-to-head path from s to d exists.
    Equivalent to digraph reachability in the arc expansion. For s == d
    use is_acyclic instead."""
    h.check_vertex(s)
    h.check_vertex(d)
    if s == d:
        raise ValueError("s == d is a cycle question; use is_acyclic")
    arcs = reachability_digraph(h)
    seen = {s}
    frontier = [s]
    while frontier:
        u = frontier.pop()
        for v in arcs[u]:
            if v == d:
                return True
            if v not in seen:
                seen.add(v)
                frontier.append(v)
    return False


def is_acyclic(h: Hypergraph) -> bool:
    """True when the arc-expansion digraph has no directed cycle; a path
    returning to its start is exactly such a cycle."""
    arcs = reachability_digraph(h)
    white, gray, black = 0, 1, 2
    color = {v: white for v in range(h.n_vertices)}
    for root in range(h.n_vertices):
        if color[root] != white:
            continue
        stack: list[tuple[int, Iterable[int]]] = [(root, iter(arcs[root]))]
        color[root] = gray
        while stack:
            vertex, it = stack[-1]
            advanced = False
            for nxt in it:
                if color[nxt] == gray:
                    return False
                if color[nxt] == white:
                    color[nxt] = gray
                    stack.append((nxt, iter(arcs[nxt])))
                    advanced = True
                    break
            if not advanced:
                color[vertex] = black
                stack.pop()
    return True


def reverse(h: Hypergraph) -> Hypergraph:
    """Flip every edge (tail <-> head), preserving ids and labels. Maps
    singleton-tail hypergraphs to singleton-head ones and vice versa;
    applying it twice restores the original."""
    out = Hypergraph(h.n_vertices, h.vertex_labels)
    for e in h.edges:
        out.add_edge(e.head, e.tail)
    return out
