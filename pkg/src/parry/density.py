"""Right-continuous step functions on [0, 1) and the Parry density h_beta."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Sequence

from .dynamics import OrbitDescriptor
from .errors import DomainError, FieldMismatch, IncompleteOrbit, ZeroMass
from .exactnum import FieldElement, NumberField, equal_cross_field, sign


@dataclass(frozen=True)
class StepFunction:
    """f = values[i] on [b_i, b_{i+1}), with b_0 = 0, b_{r+1} = 1 and b_1..b_r = cuts.

    Instances built through :meth:`build` are canonical: cuts strictly
    increase inside (0, 1) and adjacent values differ.
    """

    field: NumberField
    cuts: tuple[FieldElement, ...]
    values: tuple[FieldElement, ...]

    def __post_init__(self):
        if len(self.values) != len(self.cuts) + 1:
            raise ValueError("need exactly one more value than cuts")

    @property
    def breakpoints(self) -> tuple[FieldElement, ...]:
        return (self.field.zero,) + self.cuts + (self.field.one,)

    @classmethod
    def constant(cls, field: NumberField, value) -> StepFunction:
        return cls(field, (), (field.lift(value),))

    @classmethod
    def build(cls, field: NumberField, cuts: Sequence[FieldElement],
              values: Sequence[FieldElement]) -> StepFunction:
        """Canonicalize: drop cuts outside (0,1) or repeated, merge equal neighbours.

        ``cuts`` must already be sorted (non-strictly) and lie in [0, 1].
        """
        out_cuts: list[FieldElement] = []
        out_vals: list[FieldElement] = [values[0]]
        for c, v in zip(cuts, values[1:]):
            if sign(c) <= 0:
                out_vals[-1] = v
                continue
            if sign(c - 1) >= 0:
                break
            if out_cuts and out_cuts[-1] == c:
                out_vals[-1] = v
                continue
            if v == out_vals[-1]:
                continue
            out_cuts.append(c)
            out_vals.append(v)
        return cls(field, tuple(out_cuts), tuple(out_vals))

    def segments(self):
        """Yield (lo, hi, value) for each constant piece."""
        bps = self.breakpoints
        for i, v in enumerate(self.values):
            yield bps[i], bps[i + 1], v


def _sorted_elements(xs: Iterable[FieldElement]) -> list[FieldElement]:
    return sorted(xs, key=cmp_to_key(lambda a, b: sign(a - b)))


def indicator_sum(field: NumberField, base, terms: Sequence[tuple[FieldElement, FieldElement]]) -> StepFunction:
    """base + sum of coef * 1_[0, t) over (t, coef) pairs, canonicalized.

    Coefficients of coincident points are summed; points <= 0 contribute nothing.
    """
    acc: dict[FieldElement, FieldElement] = {}
    for t, coef in terms:
        if sign(t) <= 0:
            continue
        if sign(t - 1) > 0:
            raise DomainError("indicator endpoint beyond 1")
        acc[t] = acc.get(t, field.zero) + coef
    points = _sorted_elements(acc)
    # value on [points[i-1], points[i]) = base + coefficients of points >= points[i]
    tail = field.lift(base)
    suffix = []
    for t in reversed(points):
        tail = tail + acc[t]
        suffix.append(tail)
    suffix.reverse()
    values = suffix + [field.lift(base)]
    return StepFunction.build(field, points, values)


def _require_complete(d: OrbitDescriptor) -> None:
    if not d.is_complete:
        raise IncompleteOrbit("density needs an eventually periodic orbit of 1")


def density_terms(d: OrbitDescriptor) -> list[tuple[FieldElement, FieldElement]]:
    """(orbit point, coefficient) pairs of h_beta beyond the constant 1.

    Preperiod point T^n(1) carries 1/beta^n; a period point of index k
    (period length L) carries beta^L/(beta^L - 1) * 1/beta^k.
    """
    _require_complete(d)
    beta = d.beta
    inv = 1 / beta
    terms = []
    power = beta.field.one
    for t in d.preperiod:
        power = power * inv
        terms.append((t, power))
    if d.period:
        L = len(d.period)
        bL = beta ** L
        boost = bL / (bL - 1)
        for y in d.period:
            power = power * inv
            terms.append((y, boost * power))
    return terms


def build_density(d: OrbitDescriptor) -> StepFunction:
    """h_beta(x) = sum over n >= 0 with x < T^n(1) of beta^-n."""
    return indicator_sum(d.beta.field, 1, density_terms(d))


def integral(f: StepFunction) -> FieldElement:
    total = f.field.zero
    for lo, hi, v in f.segments():
        total = total + v * (hi - lo)
    return total


def series_K(d: OrbitDescriptor) -> FieldElement:
    """K_beta = sum_{n >= 0} T^n(1) / beta^n with the periodic tail summed in closed form."""
    _require_complete(d)
    beta = d.beta
    inv = 1 / beta
    total = beta.field.one
    power = beta.field.one
    for t in d.preperiod:
        power = power * inv
        total = total + t * power
    if d.period:
        L = len(d.period)
        bL = beta ** L
        boost = bL / (bL - 1)
        tail = beta.field.zero
        for y in d.period:
            power = power * inv
            tail = tail + y * power
        total = total + boost * tail
    return total


def normalize(f: StepFunction) -> StepFunction:
    mass = integral(f)
    if sign(mass) <= 0:
        raise ZeroMass("cannot normalize a step function with non-positive integral")
    inv = 1 / mass
    return StepFunction(f.field, f.cuts, tuple(v * inv for v in f.values))


def evaluate(f: StepFunction, x) -> FieldElement:
    """Value at x in [0, 1); right-continuous at breakpoints."""
    if not isinstance(x, FieldElement):
        x = f.field.lift(x)
    elif x.field != f.field:
        if not x.is_rational():
            raise FieldMismatch("evaluation point must lie in the function's field")
        x = f.field.lift(x.coeffs[0])
    if sign(x) < 0 or sign(x - 1) >= 0:
        raise DomainError("x must lie in [0, 1)")
    lo, hi = 0, len(f.cuts)
    # first index i with cuts[i] > x
    while lo < hi:
        mid = (lo + hi) // 2
        if sign(f.cuts[mid] - x) > 0:
            hi = mid
        else:
            lo = mid + 1
    return f.values[lo]


def equal(f: StepFunction, g: StepFunction) -> bool:
    """Pointwise equality on [0, 1) of canonical step functions (fields may differ)."""
    if len(f.cuts) != len(g.cuts):
        return False
    if f.field is g.field or f.field == g.field:
        return f.cuts == g.cuts and f.values == g.values
    return (all(equal_cross_field(a, b) for a, b in zip(f.cuts, g.cuts))
            and all(equal_cross_field(a, b) for a, b in zip(f.values, g.values)))
