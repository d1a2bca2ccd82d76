"""Exception hierarchy shared by every layer."""


class MciError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(MciError):
    """Malformed file or inconsistent construction data."""


class SignatureMismatchError(MciError):
    """Operation name or arity not provided by an object's signature."""


class UnsupportedCheckError(MciError):
    """A check that cannot be decided with the available backend/field.

    Typically: a non-multilinear identity over an infinite field with no
    reduction rule.  The usual remedy is a base change to a prime field.
    """


class BadPrimeError(MciError):
    """Base change rejected: a denominator is divisible by the prime."""


class IdealInvalidError(MciError):
    """A claimed ideal fails one of its closure invariants."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InternalCrossCheckError(MciError):
    """Two computations the theory proves equal disagreed.  Always a bug."""
