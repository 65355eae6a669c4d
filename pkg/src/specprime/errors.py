"""Exception types shared across the package."""


class SpecprimeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(SpecprimeError):
    """A constructor or operation was called with arguments outside its domain."""


class NotAHomomorphism(SpecprimeError):
    """The supplied element map violates the ring homomorphism laws."""


class NotAPartialOrder(SpecprimeError):
    """The supplied relation has a cycle, so its closure is not antisymmetric."""


class NotSpectral(SpecprimeError):
    """The supplied map between posets is not monotone."""


class TooLarge(SpecprimeError):
    """An exhaustive enumeration was requested beyond its configured size cap."""


class InvalidSemigroup(SpecprimeError):
    """The supplied multiplication table is not commutative or not associative."""


class InvariantViolation(SpecprimeError):
    """An identity this engine guarantees failed to hold; carries a witness payload."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
