"""Exception types raised across the package.

Every error is a ``ValueError`` subclass so callers that only care about
"bad input" can catch one thing.
"""


class AltOrderError(ValueError):
    pass


class MalformedCycleNotation(AltOrderError):
    pass


class EntryOutOfRange(AltOrderError):
    pass


class RepeatedEntry(AltOrderError):
    pass


class DegreeMismatch(AltOrderError):
    pass


class DegreeTooSmall(AltOrderError):
    pass


class DegreeAboveOracleCap(AltOrderError):
    pass


class DegreeAboveCap(AltOrderError):
    pass


class NotInGeneratedGroup(AltOrderError):
    pass


class NotComparable(AltOrderError):
    pass


class InterpolationInconsistent(AltOrderError):
    pass


class IntervalTooLarge(AltOrderError):
    pass


class ParameterOutOfRange(AltOrderError):
    pass


class RankJumpMismatch(AltOrderError):
    pass


class ZeroDenominator(AltOrderError):
    pass


class SupportOutsideTarget(AltOrderError):
    pass


class NotNiceElement(AltOrderError):
    pass


class NotNoncrossing(AltOrderError):
    pass


class NotOnc(AltOrderError):
    pass


class MalformedTree(AltOrderError):
    pass


class WrongFlavor(AltOrderError):
    pass


class IndexOutOfRange(AltOrderError):
    pass


class TooManyWords(AltOrderError):
    pass


class TooManyElements(AltOrderError):
    pass


class NotReducedWord(AltOrderError):
    pass
