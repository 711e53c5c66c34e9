"""Forced-edge decisions and hypernetwork computation."""

from __future__ import annotations

import random

import pytest

from hypernet import (
    Hypergraph,
    LimitExceeded,
    OracleTooLarge,
    build_reduction,
    enumerate_hyperpaths,
    fhep_decide,
    find_forced_hyperpath,
    is_subhypergraph,
    parse_dimacs,
    s_hypernetwork,
    sdhp_compute,
    sdhp_oracle,
    simple_path_exists,
)
from generators import SAMPLE_CNF, random_hypergraph
from oracles import sdhp_bruteforce


def test_fhep_single_edge():
    h = Hypergraph(2)
    h.add_edge({0}, {1})
    path = find_forced_hyperpath(h, 0, 1, 0)
    assert path is not None and path.edge_ids == frozenset({0})


def test_fhep_unreachable_edge():
    h = Hypergraph(4)
    h.add_edge({0}, {1})
    h.add_edge({2}, {3})  # tail 2 has no incoming path from 0
    assert not fhep_decide(h, 0, 1, 1)


def test_fhep_forced_edge_on_sample_gadget():
    formula = parse_dimacs(SAMPLE_CNF)
    gadget, rmap = build_reduction(formula)
    witness = find_forced_hyperpath(
        gadget, rmap.source, rmap.target, rmap.forced_edge
    )
    assert witness is not None
    assert rmap.forced_edge in witness.edge_ids
    assert is_subhypergraph(witness, gadget)


def test_fhep_budget_exhaustion():
    formula = parse_dimacs(SAMPLE_CNF)
    gadget, rmap = build_reduction(formula)
    with pytest.raises(LimitExceeded):
        find_forced_hyperpath(
            gadget, rmap.source, rmap.target, rmap.forced_edge, node_budget=2
        )


def test_sdhp_empty_when_no_hyperpath():
    h = Hypergraph(3)
    h.add_edge({1}, {2})
    net = sdhp_compute(h, 0, 2)
    assert net.vertex_ids == frozenset() and net.edge_ids == frozenset()


def test_sdhp_parallel_edges():
    h = Hypergraph(2)
    h.add_edge({0}, {1})
    h.add_edge({0}, {1})
    net = sdhp_compute(h, 0, 1)
    assert net.edge_ids == frozenset({0, 1})
    assert net.vertex_ids == frozenset({0, 1})


def test_sdhp_oracle_trivia():
    h = Hypergraph(2)
    h.add_edge({0}, {1})
    net = sdhp_oracle(h, 0, 1)
    assert net.edge_ids == frozenset({0})
    big = Hypergraph(2)
    for _ in range(16):
        big.add_edge({0}, {1})
    with pytest.raises(OracleTooLarge):
        sdhp_oracle(big, 0, 1)


def test_sdhp_fallback_matches_enumeration_route():
    h = Hypergraph(2)
    for _ in range(5):
        h.add_edge({0}, {1})
    wide = sdhp_compute(h, 0, 1)
    narrow = sdhp_compute(h, 0, 1, limit=2)  # forces the per-edge route
    assert wide == narrow


def test_sdhp_matches_bruteforce_and_per_edge_formulation():
    rng = random.Random(29)
    for case in range(60):
        h = random_hypergraph(
            rng, max_vertices=6, max_edges=8, singleton_tails=case % 2 == 0
        )
        s, d = rng.sample(range(h.n_vertices), 2)
        net = sdhp_compute(h, s, d)
        vertices, edges = sdhp_bruteforce(h, s, d)
        assert net.edge_ids == edges
        assert net.vertex_ids == vertices
        per_edge = frozenset(
            e for e in range(h.n_edges) if fhep_decide(h, s, d, e)
        )
        assert per_edge == net.edge_ids
        assert is_subhypergraph(net, h)


def test_sdhp_emptiness_matches_enumeration_and_paths():
    rng = random.Random(31)
    for _ in range(40):
        h = random_hypergraph(rng, max_vertices=6, max_edges=7, singleton_tails=True)
        s, d = rng.sample(range(h.n_vertices), 2)
        net = sdhp_compute(h, s, d)
        paths = enumerate_hyperpaths(h, s, d)
        assert bool(net.edge_ids) == bool(paths)
        if net.edge_ids:
            assert simple_path_exists(h, s, d)


def test_sdhp_idempotent_on_own_output():
    rng = random.Random(37)
    for _ in range(40):
        h = random_hypergraph(rng, max_vertices=6, max_edges=8)
        s, d = rng.sample(range(h.n_vertices), 2)
        net = sdhp_compute(h, s, d)
        if not net.edge_ids:
            continue
        restricted = Hypergraph(h.n_vertices)
        keep = {}
        for e in h.edges:
            if e.id in net.edge_ids:
                keep[restricted.add_edge(e.tail, e.head).id] = e.id
        inner = sdhp_compute(restricted, s, d)
        assert {keep[e] for e in inner.edge_ids} == set(net.edge_ids)
        assert inner.vertex_ids == net.vertex_ids


def test_s_hypernetwork_isolated_source_is_empty():
    h = Hypergraph(3)
    h.add_edge({1}, {2})
    net = s_hypernetwork(h, 0)
    assert net.vertex_ids == frozenset() and net.edge_ids == frozenset()
    assert net.d is None


def test_s_hypernetwork_chain():
    h = Hypergraph(3)
    h.add_edge({0}, {1})
    h.add_edge({1}, {2})
    net = s_hypernetwork(h, 0)
    assert net.edge_ids == frozenset({0, 1})
    assert net.vertex_ids == frozenset({0, 1, 2})


def test_s_hypernetwork_matches_per_target_bruteforce():
    rng = random.Random(41)
    for _ in range(25):
        h = random_hypergraph(rng, max_vertices=5, max_edges=7)
        s = rng.randrange(h.n_vertices)
        vertices: set[int] = set()
        edges: set[int] = set()
        for d in range(h.n_vertices):
            if d == s:
                continue
            got_v, got_e = sdhp_bruteforce(h, s, d)
            vertices |= got_v
            edges |= got_e
        net = s_hypernetwork(h, s)
        assert net.edge_ids == frozenset(edges)
        assert net.vertex_ids == frozenset(vertices)
