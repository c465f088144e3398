"""Exception hierarchy shared by all petalknots modules."""


class PetalError(ValueError):
    """Base class for invalid input anywhere in the pipeline."""


class Empty(PetalError):
    pass


class EvenLength(PetalError):
    """Even number of petals: the diagram is a link, not a knot."""


class NotAPermutation(PetalError):
    pass


class ZeroModulus(PetalError):
    pass


class InvalidPetalNumber(PetalError):
    pass


class EvenPetalNumber(InvalidPetalNumber, EvenLength):
    pass


class IndexOutOfRange(PetalError, IndexError):
    pass


class EmptyCode(PetalError):
    pass


class NoNegativeEntries(PetalError):
    pass


class TooSmall(PetalError):
    pass


class NotSquare(PetalError):
    pass


class NotPrime(PetalError):
    pass


class TooLarge(PetalError):
    pass


class InternalInconsistency(RuntimeError):
    """Raised when a structural invariant of a generated object fails."""
