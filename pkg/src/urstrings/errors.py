"""Exception hierarchy shared by every module.

``ParseError`` covers malformed text input; everything deriving from
``DomainError`` is a well-formed request that the mathematics refuses
(a non-Euclidean pair, an index past the end of a sequence, ...).
"""
from __future__ import annotations


class UrStringsError(Exception):
    """Root of the package's exceptions."""


class ParseError(UrStringsError, ValueError):
    def __init__(self, position: int, expected: str, text: str = ""):
        self.position = position
        self.expected = expected
        self.text = text
        super().__init__(f"at position {position}: expected {expected}")


class DomainError(UrStringsError):
    """An operation's precondition or mathematical domain was violated."""


class ModelMismatch(DomainError):
    pass


class Underflow(DomainError):
    pass


class DivisionByZero(DomainError):
    pass


class NotEuclidean(DomainError):
    def __init__(self, model, a, b):
        self.model = model
        self.a = a
        self.b = b
        super().__init__(f"({a}) divided by ({b}) has no quotient/remainder in {model}")


class NotIntegerValued(DomainError):
    pass


class NotMember(DomainError):
    pass


class PreconditionViolated(DomainError):
    pass


class NotAPair(DomainError):
    pass


class NotASequence(DomainError):
    pass


class IndexOutOfRange(DomainError, IndexError):
    pass


class InvalidUrString(DomainError):
    pass


class Malformed(InvalidUrString):
    pass


class EmptyString(DomainError):
    pass


class NoWitness(DomainError):
    def __init__(self, mu, message: str = "neither mu nor its inverse is non-negative"):
        self.mu = mu
        super().__init__(f"{message}: mu = {mu}")


class UnsupportedModel(DomainError):
    pass


class OutOfBounds(DomainError):
    pass


class DegreeTooLow(DomainError):
    pass


class DecodeBudgetExceeded(DomainError):
    pass


class BaseMismatch(DomainError):
    pass


class NoMorphism(DomainError):
    pass


class DomainViolation(DomainError):
    pass


class NotApplicable(DomainError):
    pass
