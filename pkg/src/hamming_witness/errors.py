"""Exception types raised across the package.

All of them derive from :class:`HammingError` (itself a ``ValueError``) so the
CLI can map every validation problem to exit code 2 with one ``except``.
"""


class HammingError(ValueError):
    pass


class InvalidParams(HammingError):
    pass


class InvalidVertex(HammingError):
    pass


class DimensionMismatch(HammingError):
    pass


class ZeroVector(HammingError):
    pass


class RankOutOfRange(HammingError):
    pass


class ArithmeticOverflow(HammingError):
    pass


class InvalidT(HammingError):
    pass


class IndexOutOfRange(HammingError):
    pass


class InvalidSpec(HammingError):
    pass


class KTooSmall(HammingError):
    """The witness set needs the residue 2 to be a nonzero last coordinate."""

    def __init__(self, k):
        super().__init__(
            f"k = {k}: the witness set W requires k >= 3; the size argument "
            "does not hold when k = 2 (Y(2,2) needs 2 in Z_k, and W = Y(1,1) "
            "alone would have only 2^(n-1) < alpha + 1 vertices)"
        )
        self.k = k


class PreconditionViolation(HammingError):
    pass


class NotAMember(HammingError):
    pass


class NotAdjacent(HammingError):
    pass


class BudgetExceeded(HammingError):
    def __init__(self, message, required=None, budget=None):
        super().__init__(message)
        self.required = required
        self.budget = budget


class TooLarge(HammingError):
    pass


class VerificationFailed(Exception):
    """A checked property does not hold; carries the first counterexample."""

    def __init__(self, message, vertex=None, degree=None, details=None):
        super().__init__(message)
        self.vertex = vertex
        self.degree = degree
        self.details = details or {}
