"""Exception hierarchy shared by the whole package.

Every failure mode that callers are expected to handle has its own class so
the CLI can map exceptions onto stable exit codes.
"""


class Error(Exception):
    """Base class for all radclean errors."""


class RingMismatch(Error):
    """Operands belong to different rings."""


class PrecisionMismatch(RingMismatch):
    """Both operands are p-adic over the same prime but at different precision."""


class ParseError(Error):
    """Malformed ring spec or element literal."""

    def __init__(self, message: str, pos: int | None = None):
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)
        self.pos = pos


class DenominatorNotUnit(Error):
    """A localized-integer denominator is divisible by the prime."""


class NotAUnit(Error):
    """Inversion was requested for a non-invertible element."""


class NotInvertible(Error):
    """Matrix inversion was requested for a singular matrix."""


class NotSolvable(Error):
    """The quadratic equation has no root in the ring."""


class NotASquare(Error):
    """The element has no square root in the ring."""


class CharTwo(Error):
    """The operation needs 2 to be invertible and it is not."""


class NotSimpleRoot(Error):
    """The seed root is not simple: 2*b0 + mu0 is not a unit."""


class PreconditionViolated(Error):
    """Operation called outside its documented domain."""


class BudgetExceeded(Error):
    """An exhaustive search would exceed the configured budget."""


class WitnessVerificationFailed(Error):
    """A constructed decomposition failed re-verification.

    Raised instead of emitting an unverified witness; indicates either an
    internal bug or a malformed root pair supplied by the caller.
    """
