"""3-SAT to forced-hyperpath-edge reduction gadget.

For a 3-CNF formula the gadget is a layered, acyclic, singleton-tail
hypergraph. A chain of p vertices carries one edge pair per variable:
the false edge's head adds the q vertices of the variable's positive
occurrences (assigning false blocks those literals), the true edge those
of its negated occurrences. A connector pair ({p_n},{q_0}) and
({q_0},{q_1,*}) feeds a ladder of clause layers, three vertices and three
edges per clause, ending in the target f. A hyperpath from p_0 to f that
uses the forced connector ({p_n},{q_0}) exists exactly when the formula
is satisfiable: minimality forbids a clause edge whose tail q vertex was
already covered by a chosen variable edge, i.e. whose literal is false.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cnf import Assignment, CnfFormula, formula_satisfied, literal_true, sat_brute_force
from .core import Hypergraph, HypergraphClass, classify_hypergraph, is_acyclic
from .errors import (
    BudgetExceeded,
    EmptyFormula,
    LimitExceeded,
    MalformedHyperpath,
    ParseError,
    WitnessNotSatisfying,
)
from .paths import Hyperpath, check_hyperpath
from .solver import DEFAULT_NODE_BUDGET, find_forced_hyperpath

VERIFY_MAX_VARS = 12
VERIFY_MAX_CLAUSES = 12

OccSite = tuple[int, int]  # (clause index, literal position), both 1-based


@dataclass(frozen=True)
class OccurrenceIndex:
    """Where each variable occurs: positive[i-1] and negative[i-1] list
    the (clause, position) sites of variable i, in clause order."""

    positive: tuple[tuple[OccSite, ...], ...]
    negative: tuple[tuple[OccSite, ...], ...]


def build_occurrences(f: CnfFormula) -> OccurrenceIndex:
    positive: list[list[OccSite]] = [[] for _ in range(f.n_vars)]
    negative: list[list[OccSite]] = [[] for _ in range(f.n_vars)]
    for clause_index, clause in enumerate(f.clauses, start=1):
        for position, lit in enumerate(clause, start=1):
            site = (clause_index, position)
            if lit > 0:
                positive[lit - 1].append(site)
            else:
                negative[-lit - 1].append(site)
    return OccurrenceIndex(
        tuple(tuple(sites) for sites in positive),
        tuple(tuple(sites) for sites in negative),
    )


@dataclass(frozen=True)
class ReductionMap:
    """Bidirectional bookkeeping between formula objects and gadget ids."""

    n_vars: int
    n_clauses: int
    p_vertices: tuple[int, ...]  # p_vertices[i] = p_i, length n_vars + 1
    q0_vertex: int
    q_vertices: tuple[tuple[int, int, int], ...]  # [clause-1][position-1]
    f_vertex: int
    false_edges: tuple[int, ...]  # false_edges[i-1] assigns variable i false
    true_edges: tuple[int, ...]
    forced_edge: int  # ({p_n}, {q_0})
    q0_edge: int  # ({q_0}, {q_1,1 .. q_1,3})
    clause_edges: tuple[tuple[int, int, int], ...]  # [clause-1][position-1]

    @property
    def source(self) -> int:
        return self.p_vertices[0]

    @property
    def target(self) -> int:
        return self.f_vertex

    def variable_edge(self, variable: int, value: bool) -> int:
        edges = self.true_edges if value else self.false_edges
        return edges[variable - 1]


def build_reduction(f: CnfFormula) -> tuple[Hypergraph, ReductionMap]:
    """Build the gadget for ``f``: n + 3m + 3 vertices and 2n + 3m + 2
    edges with a canonical numbering (p_0..p_n, q_0, clause rows, f).
    Variables with no occurrences still get their two (then identical)
    edges, under distinct ids."""
    n, m = f.n_vars, f.n_clauses
    if m == 0:
        raise EmptyFormula("the construction needs at least one clause")
    occ = build_occurrences(f)

    labels: dict[int, str] = {}
    p_vertices = tuple(range(n + 1))
    for i in p_vertices:
        labels[i] = f"p{i}"
    q0_vertex = n + 1
    labels[q0_vertex] = "q0"
    q_vertices = tuple(
        tuple(n + 2 + 3 * (i - 1) + (j - 1) for j in (1, 2, 3))
        for i in range(1, m + 1)
    )
    for i in range(1, m + 1):
        for j in (1, 2, 3):
            labels[q_vertices[i - 1][j - 1]] = f"q{i},{j}"
    f_vertex = n + 3 * m + 2
    labels[f_vertex] = "f"

    h = Hypergraph(n + 3 * m + 3, labels)

    def q_at(site: OccSite) -> int:
        clause_index, position = site
        return q_vertices[clause_index - 1][position - 1]

    false_edges = []
    true_edges = []
    for i in range(1, n + 1):
        head_false = {p_vertices[i], *(q_at(site) for site in occ.positive[i - 1])}
        head_true = {p_vertices[i], *(q_at(site) for site in occ.negative[i - 1])}
        false_edges.append(h.add_edge({p_vertices[i - 1]}, head_false).id)
        true_edges.append(h.add_edge({p_vertices[i - 1]}, head_true).id)

    forced_edge = h.add_edge({p_vertices[n]}, {q0_vertex}).id
    q0_edge = h.add_edge({q0_vertex}, set(q_vertices[0])).id

    clause_edges = []
    for i in range(1, m + 1):
        row = []
        next_layer = set(q_vertices[i]) if i < m else {f_vertex}
        for j in (1, 2, 3):
            row.append(h.add_edge({q_vertices[i - 1][j - 1]}, next_layer).id)
        clause_edges.append(tuple(row))

    rmap = ReductionMap(
        n_vars=n,
        n_clauses=m,
        p_vertices=p_vertices,
        q0_vertex=q0_vertex,
        q_vertices=q_vertices,
        f_vertex=f_vertex,
        false_edges=tuple(false_edges),
        true_edges=tuple(true_edges),
        forced_edge=forced_edge,
        q0_edge=q0_edge,
        clause_edges=tuple(clause_edges),
    )
    return h, rmap


def decode_assignment(
    p: Hyperpath, rmap: ReductionMap
) -> tuple[Assignment, tuple[int, ...]]:
    """Read the assignment and per-clause witness positions off a gadget
    hyperpath that contains the forced edge. The hyperpath must hold both
    connectors, exactly one edge per variable, exactly one per clause, and
    nothing else."""
    edges = p.edge_ids
    if rmap.forced_edge not in edges:
        raise MalformedHyperpath("hyperpath does not contain the forced edge")
    if rmap.q0_edge not in edges:
        raise MalformedHyperpath("hyperpath skips the q0 connector")
    values: list[bool] = []
    for i in range(1, rmap.n_vars + 1):
        has_false = rmap.false_edges[i - 1] in edges
        has_true = rmap.true_edges[i - 1] in edges
        if has_false == has_true:
            raise MalformedHyperpath(
                f"variable {i} has {int(has_false) + int(has_true)} of its "
                "edges in the hyperpath; expected exactly one"
            )
        values.append(has_true)
    witnesses: list[int] = []
    for i in range(1, rmap.n_clauses + 1):
        chosen = [
            j for j in (1, 2, 3) if rmap.clause_edges[i - 1][j - 1] in edges
        ]
        if len(chosen) != 1:
            raise MalformedHyperpath(
                f"clause {i} has {len(chosen)} of its edges in the hyperpath; "
                "expected exactly one"
            )
        witnesses.append(chosen[0])
    expected = rmap.n_vars + rmap.n_clauses + 2
    if len(edges) != expected:
        raise MalformedHyperpath(
            f"hyperpath has {len(edges)} edges; the gadget shape needs {expected}"
        )
    return tuple(values), tuple(witnesses)


def encode_hyperpath(
    assignment: Assignment,
    witnesses: tuple[int, ...],
    f: CnfFormula,
    rmap: ReductionMap,
) -> frozenset[int]:
    """Edge set of the gadget hyperpath realizing ``assignment`` with the
    given satisfied-literal position per clause. Each witness literal must
    actually be true under the assignment (which already forces the whole
    formula satisfied)."""
    if len(assignment) != rmap.n_vars:
        raise ValueError(f"assignment covers {len(assignment)} of {rmap.n_vars} variables")
    if len(witnesses) != rmap.n_clauses:
        raise ValueError(f"{len(witnesses)} witnesses for {rmap.n_clauses} clauses")
    edges = {rmap.forced_edge, rmap.q0_edge}
    for i in range(1, rmap.n_vars + 1):
        edges.add(rmap.variable_edge(i, assignment[i - 1]))
    for i, position in enumerate(witnesses, start=1):
        if position not in (1, 2, 3):
            raise ValueError(f"clause {i} witness position {position} not in 1..3")
        lit = f.clauses[i - 1][position - 1]
        if not literal_true(lit, assignment):
            raise WitnessNotSatisfying(
                f"clause {i} witness literal {lit} is false under the assignment"
            )
        edges.add(rmap.clause_edges[i - 1][position - 1])
    return frozenset(edges)


def write_reduction_map(rmap: ReductionMap) -> str:
    """Sidecar map text: forced/connector edge ids, vertex names, one
    varedge line per variable and one clauseedge line per (clause,
    position)."""
    lines = [f"forced {rmap.forced_edge}", f"q0edge {rmap.q0_edge}"]
    for i, vertex in enumerate(rmap.p_vertices):
        lines.append(f"vertex p{i} {vertex}")
    lines.append(f"vertex q0 {rmap.q0_vertex}")
    for i in range(1, rmap.n_clauses + 1):
        for j in (1, 2, 3):
            lines.append(f"vertex q{i},{j} {rmap.q_vertices[i - 1][j - 1]}")
    lines.append(f"vertex f {rmap.f_vertex}")
    for i in range(1, rmap.n_vars + 1):
        lines.append(
            f"varedge {i} false {rmap.false_edges[i - 1]} "
            f"true {rmap.true_edges[i - 1]}"
        )
    for i in range(1, rmap.n_clauses + 1):
        for j in (1, 2, 3):
            lines.append(f"clauseedge {i} {j} {rmap.clause_edges[i - 1][j - 1]}")
    return "\n".join(lines) + "\n"


def parse_reduction_map(text: str) -> ReductionMap:
    forced: int | None = None
    q0_edge: int | None = None
    p_map: dict[int, int] = {}
    q_map: dict[tuple[int, int], int] = {}
    q0_vertex: int | None = None
    f_vertex: int | None = None
    var_map: dict[int, tuple[int, int]] = {}
    clause_map: dict[tuple[int, int], int] = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        parts = stripped.split()
        try:
            if parts[0] == "forced" and len(parts) == 2:
                forced = int(parts[1])
            elif parts[0] == "q0edge" and len(parts) == 2:
                q0_edge = int(parts[1])
            elif parts[0] == "vertex" and len(parts) == 3:
                name, vertex = parts[1], int(parts[2])
                if name == "f":
                    f_vertex = vertex
                elif name == "q0":
                    q0_vertex = vertex
                elif name.startswith("p"):
                    p_map[int(name[1:])] = vertex
                elif name.startswith("q") and "," in name:
                    i_text, j_text = name[1:].split(",")
                    q_map[(int(i_text), int(j_text))] = vertex
                else:
                    raise ValueError(name)
            elif parts[0] == "varedge" and len(parts) == 6:
                if parts[2] != "false" or parts[4] != "true":
                    raise ValueError(stripped)
                var_map[int(parts[1])] = (int(parts[3]), int(parts[5]))
            elif parts[0] == "clauseedge" and len(parts) == 4:
                clause_map[(int(parts[1]), int(parts[2]))] = int(parts[3])
            else:
                raise ValueError(stripped)
        except ValueError:
            raise ParseError(f"map line {line_no}: cannot parse {line!r}")
    if forced is None or q0_edge is None or q0_vertex is None or f_vertex is None:
        raise ParseError("map is missing forced/q0edge/q0/f entries")
    n = len(var_map)
    m = len(clause_map) // 3
    if sorted(var_map) != list(range(1, n + 1)):
        raise ParseError("varedge lines do not cover variables 1..n")
    if sorted(p_map) != list(range(n + 1)):
        raise ParseError("vertex p lines do not cover p0..pn")
    expected_sites = {(i, j) for i in range(1, m + 1) for j in (1, 2, 3)}
    if set(clause_map) != expected_sites or set(q_map) != expected_sites:
        raise ParseError("clause lines do not cover every (clause, position)")
    return ReductionMap(
        n_vars=n,
        n_clauses=m,
        p_vertices=tuple(p_map[i] for i in range(n + 1)),
        q0_vertex=q0_vertex,
        q_vertices=tuple(
            tuple(q_map[(i, j)] for j in (1, 2, 3)) for i in range(1, m + 1)
        ),
        f_vertex=f_vertex,
        false_edges=tuple(var_map[i][0] for i in range(1, n + 1)),
        true_edges=tuple(var_map[i][1] for i in range(1, n + 1)),
        forced_edge=forced,
        q0_edge=q0_edge,
        clause_edges=tuple(
            tuple(clause_map[(i, j)] for j in (1, 2, 3)) for i in range(1, m + 1)
        ),
    )


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_text(self) -> str:
        return "\n".join(
            f"{'PASS' if c.passed else 'FAIL'} {c.name} {c.detail}"
            for c in self.checks
        )


def verify_equivalence(
    f: CnfFormula, node_budget: int | None = DEFAULT_NODE_BUDGET
) -> VerificationReport:
    """Cross-check the reduction on one formula: gadget structure, the
    forced-edge search against brute-force satisfiability, and the
    decode/encode round trip on the found witness."""
    if f.n_vars > VERIFY_MAX_VARS or f.n_clauses > VERIFY_MAX_CLAUSES:
        raise BudgetExceeded(
            f"instance {f.n_vars} vars / {f.n_clauses} clauses exceeds "
            f"{VERIFY_MAX_VARS}/{VERIFY_MAX_CLAUSES}"
        )
    gadget, rmap = build_reduction(f)
    checks: list[CheckResult] = []

    cls = classify_hypergraph(gadget)
    checks.append(
        CheckResult(
            "singleton-tails", cls is HypergraphClass.F, f"class={cls.value}"
        )
    )
    acyclic = is_acyclic(gadget)
    checks.append(CheckResult("acyclic", acyclic, f"acyclic={acyclic}"))
    expected_v = f.n_vars + 3 * f.n_clauses + 3
    expected_e = 2 * f.n_vars + 3 * f.n_clauses + 2
    checks.append(
        CheckResult(
            "vertex-count",
            gadget.n_vertices == expected_v,
            f"{gadget.n_vertices}/{expected_v}",
        )
    )
    checks.append(
        CheckResult(
            "edge-count",
            gadget.n_edges == expected_e,
            f"{gadget.n_edges}/{expected_e}",
        )
    )

    model = sat_brute_force(f)
    try:
        witness = find_forced_hyperpath(
            gadget, rmap.source, rmap.target, rmap.forced_edge, node_budget
        )
    except LimitExceeded as exc:
        raise BudgetExceeded(str(exc))
    checks.append(
        CheckResult(
            "forced-edge-vs-sat",
            (witness is not None) == (model is not None),
            f"forced={'yes' if witness else 'no'} "
            f"sat={'yes' if model else 'no'}",
        )
    )
    if witness is not None:
        assignment, witnesses = decode_assignment(witness, rmap)
        satisfied = formula_satisfied(f, assignment)
        checks.append(
            CheckResult(
                "decoded-assignment-satisfies",
                satisfied,
                "assignment=" + "".join("1" if v else "0" for v in assignment),
            )
        )
        reencoded = encode_hyperpath(assignment, witnesses, f, rmap)
        checks.append(
            CheckResult(
                "encode-round-trip",
                reencoded == witness.edge_ids,
                f"{len(reencoded)} edges",
            )
        )
    if model is not None:
        # opposite direction: build a hyperpath straight from the model,
        # satisfying each clause at its lowest true literal position
        positions = tuple(
            next(
                j
                for j in (1, 2, 3)
                if literal_true(clause[j - 1], model)
            )
            for clause in f.clauses
        )
        built = encode_hyperpath(model, positions, f, rmap)
        built_path = check_hyperpath(gadget, built, rmap.source, rmap.target)
        checks.append(
            CheckResult(
                "encode-from-model",
                built_path is not None and rmap.forced_edge in built,
                f"{len(built)} edges",
            )
        )
    return VerificationReport(tuple(checks))
