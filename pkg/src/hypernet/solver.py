"""Exact desk-scale solvers for forced-edge search and hypernetworks.

The forced-edge question (does some s-d hyperpath contain a designated
edge?) is NP-complete, so these searches are exponential in the worst
case; they are exact within an explicit node budget and fail loudly when
it runs out. The per-edge formulation computes the (s,d)-hypernetwork
because an edge belongs to it exactly when some hyperpath uses it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Hypergraph
from .errors import OracleTooLarge
from .paths import (
    DEFAULT_LIMIT,
    Hyperpath,
    SearchBudget,
    check_hyperpath,
    iter_hyperpaths,
)

DEFAULT_NODE_BUDGET = 10_000_000
ORACLE_MAX_EDGES = 15


@dataclass(frozen=True)
class Hypernetwork:
    """Union of the vertices and edges of all hyperpaths from s to d
    (or, with d None, to every target). Always a valid subhypergraph of
    its host; empty when no hyperpath exists."""

    vertex_ids: frozenset[int]
    edge_ids: frozenset[int]
    s: int
    d: int | None


def find_forced_hyperpath(
    h: Hypergraph,
    s: int,
    d: int,
    edge_id: int,
    node_budget: int | SearchBudget | None = DEFAULT_NODE_BUDGET,
) -> Hyperpath | None:
    """First hyperpath from s to d containing ``edge_id``, or None. The
    backtracking search prunes branches that can no longer fire the edge."""
    h.check_edge_id(edge_id)
    for path in iter_hyperpaths(
        h, s, d, require_edge=edge_id, node_budget=node_budget
    ):
        return path
    return None


def fhep_decide(
    h: Hypergraph,
    s: int,
    d: int,
    edge_id: int,
    node_budget: int | SearchBudget | None = DEFAULT_NODE_BUDGET,
) -> bool:
    return find_forced_hyperpath(h, s, d, edge_id, node_budget) is not None


def _incident_vertices(
    h: Hypergraph, edge_ids: frozenset[int], s: int
) -> frozenset[int]:
    vertices = {s}
    for edge_id in edge_ids:
        vertices.update(h.edges[edge_id].tail)
        vertices.update(h.edges[edge_id].head)
    return frozenset(vertices)


def sdhp_compute(
    h: Hypergraph,
    s: int,
    d: int,
    limit: int = DEFAULT_LIMIT,
    node_budget: int | SearchBudget | None = DEFAULT_NODE_BUDGET,
) -> Hypernetwork:
    """Compute the (s,d)-hypernetwork exactly.

    One enumeration pass unions all hyperpaths while their count stays
    under ``limit``; past that it falls back to one pruned forced-edge
    search per edge, which is equivalent and often cheaper on dense
    instances. The node budget is shared across the whole call."""
    budget = (
        node_budget
        if isinstance(node_budget, SearchBudget)
        else SearchBudget(node_budget)
    )
    edge_ids: set[int] = set()
    vertex_ids: set[int] = set()
    count = 0
    overflowed = False
    for path in iter_hyperpaths(h, s, d, node_budget=budget):
        count += 1
        if count > limit:
            overflowed = True
            break
        edge_ids.update(path.edge_ids)
        vertex_ids.update(path.vertex_ids)
    if not overflowed:
        return Hypernetwork(frozenset(vertex_ids), frozenset(edge_ids), s, d)
    forced = frozenset(
        edge_id
        for edge_id in range(h.n_edges)
        if find_forced_hyperpath(h, s, d, edge_id, budget) is not None
    )
    vertices = _incident_vertices(h, forced, s) if forced else frozenset()
    return Hypernetwork(vertices, forced, s, d)


def s_hypernetwork(
    h: Hypergraph,
    s: int,
    limit: int = DEFAULT_LIMIT,
    node_budget: int | SearchBudget | None = DEFAULT_NODE_BUDGET,
) -> Hypernetwork:
    """Union of the (s,x)-hypernetworks over every target x. A source with
    no hyperpath to anywhere yields the empty hypernetwork."""
    h.check_vertex(s)
    budget = (
        node_budget
        if isinstance(node_budget, SearchBudget)
        else SearchBudget(node_budget)
    )
    edge_ids: set[int] = set()
    vertex_ids: set[int] = set()
    for target in range(h.n_vertices):
        if target == s:
            continue
        net = sdhp_compute(h, s, target, limit=limit, node_budget=budget)
        edge_ids.update(net.edge_ids)
        vertex_ids.update(net.vertex_ids)
    return Hypernetwork(frozenset(vertex_ids), frozenset(edge_ids), s, None)


def sdhp_oracle(h: Hypergraph, s: int, d: int) -> Hypernetwork:
    """Exhaustive reference answer: scan every edge subset, keep the
    hyperpaths, union them. Only for cross-checking the solvers on small
    instances."""
    if h.n_edges > ORACLE_MAX_EDGES:
        raise OracleTooLarge(
            f"{h.n_edges} edges > {ORACLE_MAX_EDGES}; the subset scan is 2^|E|"
        )
    h.check_vertex(s)
    h.check_vertex(d)
    if s == d:
        raise ValueError("hyperpath endpoints must differ")
    edge_ids: set[int] = set()
    vertex_ids: set[int] = set()
    all_ids = list(range(h.n_edges))
    for mask in range(1 << h.n_edges):
        subset = frozenset(e for e in all_ids if mask >> e & 1)
        path = check_hyperpath(h, subset, s, d)
        if path is not None:
            edge_ids.update(path.edge_ids)
            vertex_ids.update(path.vertex_ids)
    return Hypernetwork(frozenset(vertex_ids), frozenset(edge_ids), s, d)
