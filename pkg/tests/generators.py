"""Seeded random instance generators shared across the test modules."""

from __future__ import annotations

import random
from itertools import product

from hypernet import CnfFormula, Hypergraph

# (v1 | v2 | ~v4) & (v1 | ~v2 | ~v3) -- the worked two-clause example
SAMPLE_CNF = "p cnf 4 2\n1 2 -4 0\n1 -2 -3 0\n"
SAMPLE_CLAUSES = ((1, 2, -4), (1, -2, -3))


def unsat_formula() -> CnfFormula:
    """All eight sign patterns over three variables: unsatisfiable."""
    clauses = tuple(
        tuple(sign * var for sign, var in zip(signs, (1, 2, 3)))
        for signs in product((1, -1), repeat=3)
    )
    return CnfFormula(3, clauses)


def random_hypergraph(
    rng: random.Random,
    max_vertices: int = 8,
    max_edges: int = 10,
    singleton_tails: bool = False,
) -> Hypergraph:
    """Arbitrary directed hypergraph; cycles, empty tails and empty heads
    all allowed unless singleton_tails asks for an F-shaped host."""
    n = rng.randint(2, max_vertices)
    h = Hypergraph(n)
    for _ in range(rng.randint(0, max_edges)):
        if singleton_tails:
            tail = {rng.randrange(n)}
        else:
            tail = set(rng.sample(range(n), rng.randint(0, min(2, n))))
        rest = [v for v in range(n) if v not in tail]
        if not rest:
            continue
        min_head = 1 if singleton_tails else 0
        head = set(rng.sample(rest, rng.randint(min_head, min(3, len(rest)))))
        h.add_edge(tail, head)
    return h


def random_acyclic_f_hypergraph(
    rng: random.Random, max_vertices: int = 10, max_edges: int = 10
) -> Hypergraph:
    """Singleton-tail host guaranteed acyclic: every edge points from a
    vertex to a head drawn strictly later in a fixed vertex order."""
    n = rng.randint(2, max_vertices)
    h = Hypergraph(n)
    for _ in range(rng.randint(0, max_edges)):
        u = rng.randrange(n - 1)
        later = range(u + 1, n)
        head = set(rng.sample(later, rng.randint(1, min(3, len(later)))))
        h.add_edge({u}, head)
    return h
