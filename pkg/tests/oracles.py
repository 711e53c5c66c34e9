"""Independent reference implementations used only to cross-check the
library. They share no code with the package: bitmask closures, full
subset scans with minimality by subset comparison, permutation scans and
plain BFS."""

from __future__ import annotations

from itertools import permutations

from hypernet import Hypergraph


def _edge_masks(h: Hypergraph) -> tuple[list[int], list[int]]:
    tails = [0] * h.n_edges
    heads = [0] * h.n_edges
    for e in h.edges:
        for v in e.tail:
            tails[e.id] |= 1 << v
        for v in e.head:
            heads[e.id] |= 1 << v
    return tails, heads


def _fire_all(tails: list[int], heads: list[int], mask: int, s: int) -> tuple[int, int]:
    """Saturate firing over the subset ``mask``; returns (fired, reached)."""
    reached = 1 << s
    fired = 0
    progress = True
    while progress:
        progress = False
        probe = mask & ~fired
        e = 0
        while probe:
            if probe & 1 and tails[e] & ~reached == 0:
                fired |= 1 << e
                reached |= heads[e]
                progress = True
            probe >>= 1
            e += 1
    return fired, reached


def hyperpath_sets_bruteforce(h: Hypergraph, s: int, d: int) -> set[frozenset[int]]:
    """Every minimal edge subset that fully fires and reaches d, scanning
    all 2^|E| subsets; minimality decided by comparing carriers pairwise."""
    tails, heads = _edge_masks(h)
    carriers: list[int] = []
    for mask in range(1, 1 << h.n_edges):
        fired, reached = _fire_all(tails, heads, mask, s)
        if fired == mask and reached >> d & 1:
            carriers.append(mask)
    carrier_set = set(carriers)
    minimal: set[frozenset[int]] = set()
    for c in carriers:
        sub = (c - 1) & c
        dominated = False
        while sub:
            if sub in carrier_set:
                dominated = True
                break
            sub = (sub - 1) & c
        if not dominated:
            minimal.add(frozenset(e for e in range(h.n_edges) if c >> e & 1))
    return minimal


def sdhp_bruteforce(
    h: Hypergraph, s: int, d: int
) -> tuple[frozenset[int], frozenset[int]]:
    """(vertices, edges) of the (s,d)-hypernetwork straight from the
    subset scan."""
    vertices: set[int] = set()
    edges: set[int] = set()
    for path_edges in hyperpath_sets_bruteforce(h, s, d):
        edges.update(path_edges)
        vertices.add(s)
        for e in path_edges:
            vertices.update(h.edges[e].tail)
            vertices.update(h.edges[e].head)
    return frozenset(vertices), frozenset(edges)


def orderable_by_permutation(h: Hypergraph, edge_ids, s: int) -> bool:
    """Does some permutation fire every edge with tails covered stepwise?
    Exhaustive; only for tiny sets."""
    ids = sorted(edge_ids)
    for perm in permutations(ids):
        reached = {s}
        for e in perm:
            if not h.edges[e].tail <= reached:
                break
            reached |= h.edges[e].head
        else:
            return True
    return False


def bfs_reachable(h: Hypergraph, s: int) -> set[int]:
    """Vertices reachable from s walking single tail->head arcs."""
    adjacency: dict[int, set[int]] = {v: set() for v in range(h.n_vertices)}
    for e in h.edges:
        for u in e.tail:
            adjacency[u] |= e.head
    seen = {s}
    queue = [s]
    while queue:
        u = queue.pop(0)
        for v in adjacency[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen
