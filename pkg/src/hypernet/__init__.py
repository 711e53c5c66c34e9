"""Directed hypergraph toolkit: hyperpaths, hypernetworks, forced-edge
search, and a 3-SAT reduction gadget generator with its verification
harness."""

from .cnf import (
    Assignment,
    Clause,
    CnfFormula,
    clause_satisfied,
    formula_satisfied,
    literal_true,
    parse_dimacs,
    random_formula,
    sat_brute_force,
    write_dimacs,
)
from .core import (
    EdgeClass,
    Hyperedge,
    Hypergraph,
    HypergraphClass,
    SubView,
    classify_edge,
    classify_hypergraph,
    is_acyclic,
    is_subhypergraph,
    is_subview,
    reachability_digraph,
    reverse,
    simple_path_exists,
)
from .errors import (
    BudgetExceeded,
    EmptyFormula,
    HypernetError,
    InvalidReference,
    LimitExceeded,
    MalformedHyperpath,
    MultipleTerminalEdges,
    Not3Sat,
    NotFHypergraph,
    OracleTooLarge,
    ParseError,
    TooLarge,
    WitnessNotSatisfying,
)
from .paths import (
    DEFAULT_LIMIT,
    Closure,
    Hyperpath,
    SearchBudget,
    SimplePath,
    check_hyperpath,
    contained_simple_path,
    enumerate_hyperpaths,
    forward_closure,
    is_hyperpath,
    is_valid_ordered,
    iter_hyperpaths,
)
from .reduction import (
    CheckResult,
    OccurrenceIndex,
    ReductionMap,
    VerificationReport,
    build_occurrences,
    build_reduction,
    decode_assignment,
    encode_hyperpath,
    parse_reduction_map,
    verify_equivalence,
    write_reduction_map,
)
from .solver import (
    DEFAULT_NODE_BUDGET,
    Hypernetwork,
    fhep_decide,
    find_forced_hyperpath,
    s_hypernetwork,
    sdhp_compute,
    sdhp_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "BudgetExceeded",
    "CheckResult",
    "Clause",
    "Closure",
    "CnfFormula",
    "DEFAULT_LIMIT",
    "DEFAULT_NODE_BUDGET",
    "EdgeClass",
    "EmptyFormula",
    "Hyperedge",
    "Hypergraph",
    "HypergraphClass",
    "Hypernetwork",
    "HypernetError",
    "Hyperpath",
    "InvalidReference",
    "LimitExceeded",
    "MalformedHyperpath",
    "MultipleTerminalEdges",
    "Not3Sat",
    "NotFHypergraph",
    "OccurrenceIndex",
    "OracleTooLarge",
    "ParseError",
    "ReductionMap",
    "SearchBudget",
    "SimplePath",
    "SubView",
    "TooLarge",
    "VerificationReport",
    "WitnessNotSatisfying",
    "build_occurrences",
    "build_reduction",
    "check_hyperpath",
    "classify_edge",
    "classify_hypergraph",
    "clause_satisfied",
    "contained_simple_path",
    "decode_assignment",
    "encode_hyperpath",
    "enumerate_hyperpaths",
    "fhep_decide",
    "find_forced_hyperpath",
    "formula_satisfied",
    "forward_closure",
    "is_acyclic",
    "is_hyperpath",
    "is_subhypergraph",
    "is_subview",
    "is_valid_ordered",
    "iter_hyperpaths",
    "literal_true",
    "parse_dimacs",
    "parse_reduction_map",
    "random_formula",
    "reachability_digraph",
    "reverse",
    "s_hypernetwork",
    "sat_brute_force",
    "sdhp_compute",
    "sdhp_oracle",
    "simple_path_exists",
    "verify_equivalence",
    "write_dimacs",
    "write_reduction_map",
]
