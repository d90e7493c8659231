"""Exception hierarchy shared by every module.

Each error carries a ``kind`` string that the CLI reports verbatim in its
JSON ``error.kind`` field.
"""


class PunctualError(Exception):
    kind = "PunctualError"

    def __init__(self, message="", **details):
        super().__init__(message)
        self.message = message
        self.details = details


class DomainMismatch(PunctualError, TypeError):
    kind = "DomainMismatch"


class NotAUnit(PunctualError, ZeroDivisionError):
    kind = "NotAUnit"


class DivisionByZero(PunctualError, ZeroDivisionError):
    kind = "DivisionByZero"


class InexactDivision(PunctualError, ArithmeticError):
    kind = "InexactDivision"


class UnsupportedDomain(PunctualError):
    kind = "UnsupportedDomain"


class DegreeCapExceeded(PunctualError):
    kind = "DegreeCapExceeded"


class PoleAtPoint(PunctualError, ZeroDivisionError):
    kind = "PoleAtPoint"


class DoesNotSplit(PunctualError):
    kind = "DoesNotSplit"


class IndexOutOfRange(PunctualError, IndexError):
    kind = "IndexOutOfRange"


class NotSymmetric(PunctualError, ValueError):
    kind = "NotSymmetric"


class ArityMismatch(PunctualError, ValueError):
    kind = "ArityMismatch"


class ResourceCap(PunctualError):
    kind = "ResourceCap"


class NotInHilb(PunctualError):
    """The family is not a point of H_n; ``witness`` is a g with g(0) != 0
    whose norm is not invertible."""

    kind = "NotInHilb"

    def __init__(self, message="", witness=None, **details):
        super().__init__(message, **details)
        self.witness = witness


class ZeroIdeal(PunctualError):
    kind = "ZeroIdeal"


class PolySyntaxError(PunctualError, ValueError):
    kind = "SyntaxError"

    def __init__(self, message, position, expected=()):
        super().__init__(f"{message} at position {position}", position=position,
                         expected=list(expected))
        self.position = position
        self.expected = list(expected)


class UnknownVariable(PunctualError, ValueError):
    kind = "UnknownVariable"


class DomainParseError(PunctualError, ValueError):
    kind = "DomainParseError"


class NotMonic(PunctualError, ValueError):
    kind = "NotMonic"


class InvariantViolation(PunctualError, AssertionError):
    """An identity that holds mathematically failed; always a bug."""

    kind = "InvariantViolation"
