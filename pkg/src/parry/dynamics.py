"""Exact iteration of x -> beta*x mod 1 along the orbit of 1."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DomainError, IncompleteOrbit
from .exactnum import FieldElement, floor, sign

DEFAULT_BUDGET = 10_000


class Classification(str, enum.Enum):
    SIMPLE_PARRY = "SimpleParry"
    PARRY = "Parry"
    BUDGET_EXCEEDED = "BudgetExceeded"


@dataclass(frozen=True)
class OrbitDescriptor:
    """The orbit T^1(1), T^2(1), ... split into preperiod and period.

    When the orbit reaches 0 the zero point itself is not listed; ``period``
    is then empty and ``hits_zero`` is set.  ``digits[n-1]`` is the digit
    produced when computing T^n(1).
    """

    beta: FieldElement
    preperiod: tuple[FieldElement, ...]
    period: tuple[FieldElement, ...]
    digits: tuple[int, ...]
    classification: Classification
    hits_zero: bool

    @property
    def is_complete(self) -> bool:
        return self.classification is not Classification.BUDGET_EXCEEDED

    @property
    def points(self) -> tuple[FieldElement, ...]:
        """Nonzero orbit points T^1(1), ..., T^m(1) in order."""
        return self.preperiod + self.period


def step(beta: FieldElement, x: FieldElement) -> tuple[int, FieldElement]:
    """One application of the beta-transformation: (floor(beta*x), beta*x mod 1)."""
    if sign(x) < 0 or sign(x - 1) >= 0:
        raise DomainError("step needs 0 <= x < 1")
    y = beta * x
    d = floor(y)
    return d, y - d


def orbit_of_one(beta: FieldElement, budget: int = DEFAULT_BUDGET) -> OrbitDescriptor:
    """Iterate from T^1(1) = beta - floor(beta) until 0, a repeat, or the budget runs out."""
    if budget < 1:
        raise ValueError("budget must be >= 1")
    if sign(beta - 1) <= 0:
        raise DomainError("beta must exceed 1")
    d1 = floor(beta)
    x = beta - d1
    digits = [d1]
    points: list[FieldElement] = []
    seen: dict[FieldElement, int] = {}
    for _ in range(budget):
        if x.is_zero():
            return OrbitDescriptor(beta, tuple(points), (), tuple(digits),
                                   Classification.SIMPLE_PARRY, True)
        j = seen.get(x)
        if j is not None:
            return OrbitDescriptor(beta, tuple(points[:j]), tuple(points[j:]), tuple(digits),
                                   Classification.PARRY, False)
        seen[x] = len(points)
        points.append(x)
        y = beta * x
        d = floor(y)
        digits.append(d)
        x = y - d
    return OrbitDescriptor(beta, tuple(points), (), tuple(digits),
                           Classification.BUDGET_EXCEEDED, False)


def orbit_set(d: OrbitDescriptor) -> set[FieldElement]:
    """O_beta = {T^n(1) : n >= 1}, including 0 when the orbit reaches it."""
    if not d.is_complete:
        raise IncompleteOrbit(f"orbit not resolved within budget ({len(d.preperiod)} points)")
    out = set(d.points)
    if d.hits_zero:
        out.add(d.beta.field.zero)
    return out


def iterate_one(beta: FieldElement, n: int) -> FieldElement:
    """T^n(1) by plain n-fold iteration (T^0(1) = 1)."""
    if n == 0:
        return beta.field.one
    x = beta - floor(beta)
    for _ in range(n - 1):
        y = beta * x
        x = y - floor(y)
    return x
