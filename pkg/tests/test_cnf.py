"""DIMACS parsing and brute-force satisfiability."""

from __future__ import annotations

import random
from itertools import product

import pytest

from hypernet import (
    CnfFormula,
    Not3Sat,
    ParseError,
    TooLarge,
    formula_satisfied,
    parse_dimacs,
    random_formula,
    sat_brute_force,
    write_dimacs,
)
from generators import SAMPLE_CLAUSES, SAMPLE_CNF, unsat_formula


def test_parse_sample():
    f = parse_dimacs(SAMPLE_CNF)
    assert f.n_vars == 4
    assert f.clauses == SAMPLE_CLAUSES


def test_parse_with_comments_and_multiline_clauses():
    text = "c a comment\np cnf 3 1\nc another\n1\n2 3 0\n"
    f = parse_dimacs(text)
    assert f.clauses == ((1, 2, 3),)


def test_parse_repeated_variable_rejected():
    with pytest.raises(Not3Sat):
        parse_dimacs("p cnf 2 1\n1 -1 2 0\n")


def test_parse_wrong_arity_rejected():
    with pytest.raises(Not3Sat):
        parse_dimacs("p cnf 3 1\n1 2 0\n")


@pytest.mark.parametrize(
    "text",
    [
        "1 2 3 0\n",  # clause before header
        "p cnf x 1\n1 2 3 0\n",  # bad counts
        "p cnf 3 1\np cnf 3 1\n1 2 3 0\n",  # duplicate header
        "p cnf 3 2\n1 2 3 0\n",  # clause count mismatch
        "p cnf 3 1\n1 2 4 0\n",  # literal out of range
        "p cnf 3 1\n1 2 3\n",  # unterminated clause
        "p cnf 3 1\n1 two 3 0\n",  # junk token
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_dimacs(text)


def test_dimacs_round_trip():
    f = parse_dimacs(SAMPLE_CNF)
    assert parse_dimacs(write_dimacs(f)) == f


def test_formula_validation():
    with pytest.raises(Not3Sat):
        CnfFormula(3, ((1, 2),))
    with pytest.raises(Not3Sat):
        CnfFormula(3, ((1, -1, 2),))
    with pytest.raises(ValueError):
        CnfFormula(3, ((1, 2, 4),))


def test_sample_is_satisfiable():
    model = sat_brute_force(parse_dimacs(SAMPLE_CNF))
    assert model is not None
    assert formula_satisfied(parse_dimacs(SAMPLE_CNF), model)


def test_all_sign_patterns_formula_is_unsat():
    assert sat_brute_force(unsat_formula()) is None


def test_brute_force_returns_lexicographic_first():
    rng = random.Random(43)
    for _ in range(40):
        f = random_formula(rng, rng.randint(3, 5), rng.randint(1, 5))
        expected = next(
            (
                values
                for values in product((False, True), repeat=f.n_vars)
                if all(
                    any(
                        (lit > 0) == values[abs(lit) - 1]
                        for lit in clause
                    )
                    for clause in f.clauses
                )
            ),
            None,
        )
        assert sat_brute_force(f) == expected


def test_brute_force_guard():
    f = CnfFormula(25, ((1, 2, 3),))
    with pytest.raises(TooLarge):
        sat_brute_force(f)


def test_random_formula_shape():
    rng = random.Random(47)
    for _ in range(50):
        f = random_formula(rng, 6, 7)
        assert f.n_clauses == 7
        for clause in f.clauses:
            assert len({abs(lit) for lit in clause}) == 3
            assert all(1 <= abs(lit) <= 6 for lit in clause)
    with pytest.raises(ValueError):
        random_formula(rng, 2, 1)
