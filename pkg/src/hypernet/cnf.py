"""3-CNF formulas: DIMACS ingestion, evaluation, brute-force satisfiability.

Literals are signed integers in the DIMACS convention: ``k`` means variable
k is true, ``-k`` that it is false. Every clause carries exactly three
literals over pairwise distinct variables; nothing is padded or deduplicated
on the caller's behalf.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .errors import Not3Sat, ParseError, TooLarge

BRUTE_FORCE_MAX_VARS = 24

Clause = tuple[int, int, int]
Assignment = tuple[bool, ...]


@dataclass(frozen=True)
class CnfFormula:
    """A 3-CNF formula over variables 1..n_vars."""

    n_vars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self) -> None:
        if self.n_vars < 0:
            raise ValueError("variable count must be non-negative")
        for index, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise Not3Sat(f"clause {index + 1} has {len(clause)} literals")
            variables = {abs(lit) for lit in clause}
            if 0 in variables:
                raise ValueError(f"clause {index + 1} contains literal 0")
            if len(variables) != 3:
                raise Not3Sat(f"clause {index + 1} repeats a variable")
            out_of_range = [v for v in variables if v > self.n_vars]
            if out_of_range:
                raise ValueError(
                    f"clause {index + 1} uses variable {max(out_of_range)} "
                    f"> {self.n_vars}"
                )

    @property
    def n_clauses(self) -> int:
        return len(self.clauses)


def literal_true(lit: int, assignment: Assignment) -> bool:
    value = assignment[abs(lit) - 1]
    return value if lit > 0 else not value


def clause_satisfied(clause: Clause, assignment: Assignment) -> bool:
    return any(literal_true(lit, assignment) for lit in clause)


def formula_satisfied(f: CnfFormula, assignment: Assignment) -> bool:
    return all(clause_satisfied(clause, assignment) for clause in f.clauses)


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF text: ``c`` comment lines, one ``p cnf <vars>
    <clauses>`` header, then 0-terminated clauses (free layout across
    lines). Clause count and variable range must match the header."""
    n_vars: int | None = None
    n_clauses: int | None = None
    tokens: list[int] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        if stripped.startswith("p"):
            if n_vars is not None:
                raise ParseError(f"line {line_no}: duplicate problem line")
            parts = stripped.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise ParseError(f"line {line_no}: malformed problem line {line!r}")
            try:
                n_vars, n_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"line {line_no}: non-integer problem counts")
            if n_vars < 0 or n_clauses < 0:
                raise ParseError(f"line {line_no}: negative problem counts")
            continue
        if n_vars is None:
            raise ParseError(f"line {line_no}: clause data before problem line")
        for tok in stripped.split():
            try:
                tokens.append(int(tok))
            except ValueError:
                raise ParseError(f"line {line_no}: bad literal {tok!r}")
    if n_vars is None or n_clauses is None:
        raise ParseError("missing problem line")
    clauses: list[Clause] = []
    current: list[int] = []
    for tok in tokens:
        if tok == 0:
            if len(current) != 3:
                raise Not3Sat(
                    f"clause {len(clauses) + 1} has {len(current)} literals"
                )
            clauses.append((current[0], current[1], current[2]))
            current = []
        else:
            if abs(tok) > n_vars:
                raise ParseError(f"literal {tok} exceeds declared {n_vars} variables")
            current.append(tok)
    if current:
        raise ParseError("unterminated clause at end of input")
    if len(clauses) != n_clauses:
        raise ParseError(
            f"header declares {n_clauses} clauses, found {len(clauses)}"
        )
    return CnfFormula(n_vars, tuple(clauses))


def write_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.n_vars} {f.n_clauses}"]
    for clause in f.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"


def sat_brute_force(f: CnfFormula) -> Assignment | None:
    """First satisfying assignment in lexicographic order (all-false
    first), or None when unsatisfiable."""
    if f.n_vars > BRUTE_FORCE_MAX_VARS:
        raise TooLarge(
            f"{f.n_vars} variables > {BRUTE_FORCE_MAX_VARS}; refusing 2^n scan"
        )
    for values in product((False, True), repeat=f.n_vars):
        if formula_satisfied(f, values):
            return values
    return None


def random_formula(rng: random.Random, n_vars: int, n_clauses: int) -> CnfFormula:
    """Uniform random 3-CNF: each clause samples three distinct variables
    and independent signs. Needs at least three variables."""
    if n_vars < 3:
        raise ValueError("need at least 3 variables for 3-literal clauses")
    clauses = []
    for _ in range(n_clauses):
        variables = sorted(rng.sample(range(1, n_vars + 1), 3))
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in variables))
    return CnfFormula(n_vars, tuple(clauses))
