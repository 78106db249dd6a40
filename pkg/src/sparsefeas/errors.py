"""Exception hierarchy shared across the package."""


class SparseFeasError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(SparseFeasError):
    """Malformed polynomial text.  Carries the 0-based offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ZeroPolynomialError(SparseFeasError):
    """All terms cancelled; the zero polynomial is rejected as input."""


class PreconditionError(SparseFeasError):
    """An operation was called outside its stated input domain."""


class NotACircuitError(SparseFeasError):
    """The given point set is not a circuit."""


class NoRealSolutionError(SparseFeasError):
    """A binomial system has no real solution in the requested orthant."""


class ScaleLimitError(SparseFeasError):
    """A brute-force oracle was asked to expand something beyond its guard."""


class PrecisionLimitError(SparseFeasError):
    """Adaptive precision exceeded FEWNO_MAX_BITS without reaching a verdict."""
