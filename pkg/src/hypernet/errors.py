"""Exception hierarchy for the hypernet package."""


class HypernetError(Exception):
    """Base class for all errors raised by this package."""


class InvalidReference(HypernetError):
    """A vertex or edge id does not exist in the referenced hypergraph."""


class LimitExceeded(HypernetError):
    """A search exceeded its hyperpath limit or node budget."""


class OracleTooLarge(HypernetError):
    """The exhaustive subset oracle was asked to scan too many edges."""


class NotFHypergraph(HypernetError):
    """An operation restricted to singleton-tail edges met a wider tail."""


class MultipleTerminalEdges(HypernetError):
    """The unique-incoming-edge premise of the path recovery failed."""


class ParseError(HypernetError):
    """A text input (hypergraph file, DIMACS, certificate) is malformed."""


class Not3Sat(HypernetError):
    """A clause does not have exactly three literals over distinct variables."""


class EmptyFormula(HypernetError):
    """The reduction needs at least one clause."""


class MalformedHyperpath(HypernetError):
    """A gadget hyperpath violates the one-edge-per-variable/clause shape."""


class WitnessNotSatisfying(HypernetError):
    """A clause witness position points at a literal that is false."""


class TooLarge(HypernetError):
    """The brute-force satisfiability scan was given too many variables."""


class BudgetExceeded(HypernetError):
    """The verification harness ran out of its configured budget."""
