"""Exception types shared across the package."""


class SemilatError(Exception):
    """Base class for every error raised by this package."""


class ParseError(SemilatError):
    """Malformed or out-of-range input file content."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NotPartialOrder(SemilatError):
    """The given relation is not reflexive, antisymmetric, and transitive."""


class NotSemilattice(SemilatError):
    """The order has a pair without a least upper bound, or the table is
    not associative, symmetric, and idempotent."""


class NotBinaryTree(SemilatError):
    """The Hasse diagram is not a binary tree."""


class NotAssociative(SemilatError):
    """An associative operation was required."""


class PreconditionViolated(SemilatError):
    """Input does not satisfy a documented precondition."""


class BoundExceeded(SemilatError):
    """Requested size is beyond the configured exhaustive-search bound."""


class ReductionMismatch(SemilatError):
    """Re-extending the reduced binary operation did not reproduce the
    original table."""
