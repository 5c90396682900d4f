"""Exception hierarchy shared by every module of the package."""


class RecoloringError(Exception):
    """Base class for all errors raised by this package."""


class InputError(RecoloringError, ValueError):
    """Malformed or inconsistent input (size mismatch, improper coloring, bad range)."""


class PreconditionError(RecoloringError):
    """An algorithm was invoked outside the hypothesis it is proven for.

    ``witness`` optionally carries a certificate of the violation, e.g. the
    residual subgraph of a failed peeling.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidSequenceError(RecoloringError):
    """A recoloring sequence fails to replay; ``step`` is the 0-based offending index."""

    def __init__(self, step, reason):
        super().__init__(f"step {step}: {reason}")
        self.step = step
        self.reason = reason


class BudgetExceededError(RecoloringError):
    """The exhaustive oracle would need more states than allowed."""


class BoundViolationError(RecoloringError, AssertionError):
    """A proven bound failed at runtime. Always an implementation bug."""
