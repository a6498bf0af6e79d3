"""Exception types raised across the package."""

from __future__ import annotations


class ParryError(Exception):
    """Base class for all errors raised by this package."""


class NoRootAboveOne(ParryError):
    pass


class InvalidFamily(ParryError):
    pass


class FieldMismatch(ParryError):
    pass


class DivisionByZero(ParryError, ZeroDivisionError):
    pass


class NonInvertible(ParryError):
    """The modulus turned out to be reducible.

    ``factor`` is a nontrivial monic factor of the modulus found while
    inverting (or sign-testing) an element; callers may rebuild the field
    from it.
    """

    def __init__(self, factor, message: str | None = None):
        self.factor = factor
        super().__init__(message or f"modulus has nontrivial factor {factor!r}")


class DomainError(ParryError, ValueError):
    pass


class IncompleteOrbit(ParryError):
    pass


class ZeroMass(ParryError):
    pass


class IntegerBase(ParryError):
    pass


class EqualBases(ParryError):
    pass


class EmptySample(ParryError):
    pass
