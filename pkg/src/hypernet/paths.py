"""Hyperpath recognition, certification, and enumeration.

A hyperpath from s to d is a minimal edge set whose edges can be fired in
some order such that each tail is covered by {s} plus previously fired
heads and d appears in the final head. Recognition is polynomial via the
greedy closure: a set admits a full firing order iff greedily firing the
lowest applicable edge id fires everything (firing is monotone in the
reached set), and minimality reduces to single-edge deletions because any
proper valid carrier inside F would survive the deletion of every edge
outside it.

Enumeration backtracks over firing sequences. Hosts whose edges all have
singleton tails get a dedicated chain search: there every hyperpath is a
chain s -> v1 -> ... -> d of tail vertices with fat heads, minimal exactly
when no chain tail (nor d) appears in an earlier head, so candidates never
need a post-hoc minimality filter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import Hypergraph
from .errors import (
    InvalidReference,
    LimitExceeded,
    MultipleTerminalEdges,
    NotFHypergraph,
)

DEFAULT_LIMIT = 10_000


class SearchBudget:
    """Backtracking node counter shared across one search; raises once spent."""

    __slots__ = ("remaining",)

    def __init__(self, nodes: int | None) -> None:
        self.remaining = nodes

    def spend(self) -> None:
        if self.remaining is None:
            return
        self.remaining -= 1
        if self.remaining < 0:
            raise LimitExceeded("search node budget exhausted")


@dataclass(frozen=True)
class Closure:
    """Result of greedily firing a fixed edge subset from a source vertex.

    ``fired`` lists edge ids in firing order and is a valid ordering prefix
    for the fired set; ``reached`` is {s} plus every fired head.
    """

    reached: frozenset[int]
    fired: tuple[int, ...]
    unfired: frozenset[int]


@dataclass(frozen=True)
class Hyperpath:
    """A certified hyperpath: its edge set, a witness firing order whose
    last edge's head contains d, and the incident vertex set plus s."""

    host: Hypergraph
    s: int
    d: int
    edge_ids: frozenset[int]
    ordering: tuple[int, ...]
    vertex_ids: frozenset[int]


@dataclass(frozen=True)
class SimplePath:
    """Alternating vertex/edge sequence; edges[i] steps vertices[i] to
    vertices[i+1]."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]


def _checked_edge_ids(h: Hypergraph, edge_subset: Iterable[int]) -> frozenset[int]:
    ids = frozenset(edge_subset)
    for edge_id in ids:
        h.check_edge_id(edge_id)
    return ids


def forward_closure(
    h: Hypergraph, s: int, edge_subset: Iterable[int] | None = None
) -> Closure:
    """Deterministic fixpoint: repeatedly fire the lowest-id unfired edge
    whose tail is fully reached, starting from {s}. Empty tails fire
    unconditionally; empty heads contribute nothing."""
    h.check_vertex(s)
    if edge_subset is None:
        remaining = list(range(h.n_edges))
    else:
        remaining = sorted(_checked_edge_ids(h, edge_subset))
    reached = {s}
    fired: list[int] = []
    progress = True
    while progress and remaining:
        progress = False
        for index, edge_id in enumerate(remaining):
            if h.edges[edge_id].tail <= reached:
                fired.append(edge_id)
                reached.update(h.edges[edge_id].head)
                del remaining[index]
                progress = True
                break
    return Closure(frozenset(reached), tuple(fired), frozenset(remaining))


def is_valid_ordered(
    h: Hypergraph, edge_subset: Iterable[int], s: int, d: int
) -> bool:
    """True iff the whole subset can be ordered into a firing sequence and
    d ends up reached. Greedy completeness makes the single closure run
    decide this for every possible ordering."""
    h.check_vertex(d)
    if s == d:
        raise ValueError("hyperpath endpoints must differ")
    closure = forward_closure(h, s, edge_subset)
    return not closure.unfired and d in closure.reached


def check_hyperpath(
    h: Hypergraph, edge_subset: Iterable[int], s: int, d: int
) -> Hyperpath | None:
    """Certify ``edge_subset`` as a hyperpath from s to d, or return None.

    The subset qualifies when (a) it is fully orderable with d reached and
    (b) dropping any single edge loses d. Under (a)+(b) the greedy firing
    order only reaches d at its final edge, so it doubles as the witness
    ordering."""
    h.check_vertex(d)
    if s == d:
        raise ValueError("hyperpath endpoints must differ")
    edge_ids = _checked_edge_ids(h, edge_subset)
    closure = forward_closure(h, s, edge_ids)
    if closure.unfired or d not in closure.reached:
        return None
    for edge_id in edge_ids:
        rest = edge_ids - {edge_id}
        if d in forward_closure(h, s, rest).reached:
            return None
    return _as_hyperpath(h, s, d, edge_ids, closure.fired)


def is_hyperpath(h: Hypergraph, edge_subset: Iterable[int], s: int, d: int) -> bool:
    return check_hyperpath(h, edge_subset, s, d) is not None


def _as_hyperpath(
    h: Hypergraph,
    s: int,
    d: int,
    edge_ids: frozenset[int],
    ordering: tuple[int, ...] | None = None,
) -> Hyperpath:
    if ordering is None:
        ordering = forward_closure(h, s, edge_ids).fired
    vertex_ids = {s}
    for edge_id in edge_ids:
        vertex_ids.update(h.edges[edge_id].tail)
        vertex_ids.update(h.edges[edge_id].head)
    return Hyperpath(h, s, d, edge_ids, ordering, frozenset(vertex_ids))


def _vertex_descendants(h: Hypergraph) -> list[set[int]]:
    """Per-vertex reachable sets (including the vertex) over the arc
    expansion; used only for sound pruning."""
    arcs: list[list[int]] = [[] for _ in range(h.n_vertices)]
    for e in h.edges:
        for u in e.tail:
            arcs[u].extend(e.head)
    out: list[set[int]] = []
    for root in range(h.n_vertices):
        seen = {root}
        frontier = [root]
        while frontier:
            u = frontier.pop()
            for v in arcs[u]:
                if v not in seen:
                    seen.add(v)
                    frontier.append(v)
        out.append(seen)
    return out


def _iter_chain_hyperpaths(
    h: Hypergraph,
    s: int,
    d: int,
    require_edge: int | None,
    budget: SearchBudget,
) -> Iterator[Hyperpath]:
    """Backtracking over tail chains in a singleton-tail host.

    Grows a chain whose next edge's tail must lie in the previous head and
    in no earlier head (a tail covered twice, or a head containing d before
    the last edge, always admits a deletion), stopping the moment d shows
    up. Every emitted chain is therefore minimal by construction.
    """
    by_tail: dict[int, list[int]] = {}
    for e in h.edges:
        by_tail.setdefault(next(iter(e.tail)), []).append(e.id)
    reach = _vertex_descendants(h)
    require_tail = (
        next(iter(h.edges[require_edge].tail)) if require_edge is not None else None
    )
    chain: list[int] = []
    used: set[int] = set()

    def extend(last_head: frozenset[int], covered_before: frozenset[int]):
        budget.spend()
        if chain and d in last_head:
            if require_edge is None or require_edge in used:
                yield _as_hyperpath(h, s, d, frozenset(chain))
            return
        allowed = last_head - covered_before
        if not allowed:
            return
        if not any(d in reach[v] for v in allowed):
            return
        if (
            require_tail is not None
            and require_edge not in used
            and not any(require_tail in reach[v] for v in allowed)
        ):
            return
        covered = covered_before | last_head
        for vertex in sorted(allowed):
            for edge_id in by_tail.get(vertex, ()):
                if edge_id in used:
                    continue
                used.add(edge_id)
                chain.append(edge_id)
                yield from extend(h.edges[edge_id].head, covered)
                chain.pop()
                used.remove(edge_id)

    yield from extend(frozenset({s}), frozenset())


def _iter_generic_hyperpaths(
    h: Hypergraph,
    s: int,
    d: int,
    require_edge: int | None,
    budget: SearchBudget,
) -> Iterator[Hyperpath]:
    """Backtracking over firing sequences for arbitrary hosts.

    States are fired-edge sets (memoized, so permutations of one set are
    expanded once). Branches only fire edges that add a new vertex; in a
    minimal carrier every edge must. Branches stop as soon as d is reached,
    since any superset of a carrier is non-minimal. Candidates still go
    through the full minimality check before being emitted.
    """
    seen: set[frozenset[int]] = set()
    emitted: set[frozenset[int]] = set()
    optimistic = require_edge is not None

    def walk(reached: frozenset[int], fired: frozenset[int]):
        if fired in seen:
            return
        seen.add(fired)
        budget.spend()
        if d in reached:
            if (require_edge is None or require_edge in fired) and fired not in emitted:
                emitted.add(fired)
                path = check_hyperpath(h, fired, s, d)
                if path is not None:
                    yield path
            return
        if optimistic:
            best = _optimistic_reach(h, reached)
            if d not in best:
                return
            if require_edge not in fired and not (
                h.edges[require_edge].tail <= best
            ):
                return
        for e in h.edges:
            if e.id in fired:
                continue
            if e.tail <= reached and not e.head <= reached:
                yield from walk(reached | e.head, fired | {e.id})

    yield from walk(frozenset({s}), frozenset())


def _optimistic_reach(h: Hypergraph, reached: frozenset[int]) -> set[int]:
    out = set(reached)
    progress = True
    remaining = list(h.edges)
    while progress:
        progress = False
        still: list = []
        for e in remaining:
            if e.tail <= out:
                if not e.head <= out:
                    out.update(e.head)
                    progress = True
            else:
                still.append(e)
        remaining = still
    return out


def iter_hyperpaths(
    h: Hypergraph,
    s: int,
    d: int,
    require_edge: int | None = None,
    node_budget: int | SearchBudget | None = None,
) -> Iterator[Hyperpath]:
    """Yield every distinct hyperpath from s to d, optionally restricted to
    those containing ``require_edge``. Order is deterministic; cyclic hosts
    are fine (the finite edge set bounds the search). ``node_budget`` may be
    a SearchBudget already shared with other searches."""
    h.check_vertex(s)
    h.check_vertex(d)
    if s == d:
        raise ValueError("hyperpath endpoints must differ")
    if require_edge is not None:
        h.check_edge_id(require_edge)
    if isinstance(node_budget, SearchBudget):
        budget = node_budget
    else:
        budget = SearchBudget(node_budget)
    if h.n_edges and all(len(e.tail) == 1 for e in h.edges):
        return _iter_chain_hyperpaths(h, s, d, require_edge, budget)
    return _iter_generic_hyperpaths(h, s, d, require_edge, budget)


def enumerate_hyperpaths(
    h: Hypergraph,
    s: int,
    d: int,
    limit: int = DEFAULT_LIMIT,
    node_budget: int | None = None,
) -> list[Hyperpath]:
    """All distinct hyperpaths from s to d, canonically sorted by edge set.
    Raises LimitExceeded when more than ``limit`` exist rather than truncating
    silently."""
    found: list[Hyperpath] = []
    for path in iter_hyperpaths(h, s, d, node_budget=node_budget):
        found.append(path)
        if len(found) > limit:
            raise LimitExceeded(f"more than {limit} hyperpaths from {s} to {d}")
    found.sort(key=lambda p: (len(p.edge_ids), sorted(p.edge_ids)))
    return found


def contained_simple_path(p: Hyperpath) -> SimplePath:
    """Recover the unique simple path inside a hyperpath of a singleton-tail
    host, walking backwards from d: take the one remaining edge with the
    current target in its head, hop to its tail vertex, repeat until s."""
    h = p.host
    for edge_id in p.edge_ids:
        if len(h.edges[edge_id].tail) != 1:
            raise NotFHypergraph(
                f"edge {edge_id} has tail of size {len(h.edges[edge_id].tail)}"
            )
    remaining = set(p.edge_ids)
    vertices = [p.d]
    edges: list[int] = []
    current = p.d
    while current != p.s:
        candidates = [e for e in remaining if current in h.edges[e].head]
        if len(candidates) != 1:
            raise MultipleTerminalEdges(
                f"{len(candidates)} edges of the hyperpath have vertex "
                f"{current} in their head; expected exactly one"
            )
        edge_id = candidates[0]
        remaining.remove(edge_id)
        edges.append(edge_id)
        current = next(iter(h.edges[edge_id].tail))
        vertices.append(current)
    vertices.reverse()
    edges.reverse()
    return SimplePath(tuple(vertices), tuple(edges))
