"""Exception types shared across the package."""


class StiefelError(Exception):
    """Base class for all package errors."""


class InvalidElementError(StiefelError, ValueError):
    """A basis element's indices are out of range or malformed."""


class UndefinedKillingRatioError(StiefelError, ValueError):
    """Killing ratio requested for so(k) with k < 3 (abelian or trivial)."""


class DomainError(StiefelError, ValueError):
    """An input violates a precondition (nonpositive coefficient, bad n, ...)."""


class UnsupportedShapeError(StiefelError, NotImplementedError):
    """A block decomposition outside the shapes this pipeline handles."""


class DivisibilityError(StiefelError, ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class DegenerateSystemError(StiefelError, ArithmeticError):
    """A resultant vanished identically; the system needs a different route."""


class EliminationOverflowError(StiefelError, RuntimeError):
    """Buchberger exceeded its pair-reduction cap.

    Callers should retry with a larger cap or fall back to resultants.
    """
