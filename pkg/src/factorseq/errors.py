"""Exception taxonomy shared by every module.

Every error is a ``ValueError`` so callers that only care about "bad input"
can catch one thing; the CLI maps all of them to exit code 2.
"""


class FactorSeqError(ValueError):
    """Base class for all precondition and input errors."""


class ParseError(FactorSeqError):
    pass


class DomainError(FactorSeqError):
    """A degree lies outside ``[0, n - 1]``."""


class LengthMismatch(FactorSeqError):
    pass


class NotGraphical(FactorSeqError):
    pass


class TooLarge(FactorSeqError):
    """Input exceeds an exhaustive-search size cap."""


class TooFewVertices(FactorSeqError):
    pass


class OddOrder(FactorSeqError):
    pass


class ParityError(FactorSeqError):
    pass


class RangeError(FactorSeqError):
    pass


class BadK(FactorSeqError):
    pass


class BadT(FactorSeqError):
    pass


class OverlappingSets(FactorSeqError):
    pass
