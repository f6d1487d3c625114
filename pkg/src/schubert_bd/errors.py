"""Exception hierarchy shared by every module of the package."""


class SchubertBDError(ValueError):
    """Base class for all validation and consistency errors raised here."""


# weyl
class NotAPermutation(SchubertBDError):
    pass


class OddSignCountInTypeD(SchubertBDError):
    pass


class TypeMismatch(SchubertBDError):
    pass


class InvalidPosition(SchubertBDError):
    pass


class NotCosetRepresentatives(SchubertBDError):
    pass


class NotReduced(SchubertBDError):
    pass


# clans
class UnmatchedNumber(SchubertBDError):
    pass


class NotClassifiable(SchubertBDError):
    pass


class NotSymmetric(SchubertBDError):
    pass


class WrongSignature(SchubertBDError):
    pass


# richardson
class NegativeVNotSupported(SchubertBDError):
    pass


class IncomparablePair(SchubertBDError):
    pass


class TypeDCase5Excluded(IncomparablePair):
    pass


# oracle
class NonIntegerResult(SchubertBDError):
    """A structure constant came out non-integral: a convention bug, never data."""


class LengthMismatch(SchubertBDError):
    pass


class DivisionError(ArithmeticError):
    """An inexact division inside a divided difference (implementation bug)."""


# orbit graphs
class ForbiddenSplitPattern(SchubertBDError):
    """A connected orbit has a weak-order edge into a disconnected one."""
