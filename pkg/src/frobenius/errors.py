"""Exception hierarchy shared by every engine."""


class FrobeniusError(Exception):
    """Base class for all library errors."""


class DomainError(FrobeniusError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class InvalidTuple(DomainError):
    """The generator tuple is not coprime or has an element below 2."""


class PreconditionError(DomainError):
    """A closed form was requested outside its hypotheses.

    ``constraint`` names the failed hypothesis so callers (and the CLI grid
    sweeps) can skip or report the instance.
    """

    def __init__(self, constraint: str, message: str | None = None):
        self.constraint = constraint
        super().__init__(message or f"precondition failed: {constraint}")


class OracleCapExceeded(FrobeniusError):
    """The brute-force oracle would have to enumerate past its configured cap."""


class UnresolvedError(FrobeniusError):
    """A bounded search finished without finding a feasible point."""


class PoleError(FrobeniusError):
    """A rational-term sum that should be finite at the evaluation point is not."""


class ConsistencyError(FrobeniusError, AssertionError):
    """An internal exactness check failed; this indicates a bug, not bad input."""


class ResourceError(FrobeniusError):
    """A polynomial expansion would exceed its size bound."""
