"""Deciding when two bases share the same Renyi-Parry measure.

The report produced here carries the whole chain of intermediate facts
used when arguing that coincidence forces the quadratic family: equal
normalising constants, equal nonzero orbit sets, zero in exactly one
orbit, and the coefficient-set identity with the value at 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cmp_to_key
from typing import Optional

from . import density as D
from .dynamics import DEFAULT_BUDGET, OrbitDescriptor, orbit_of_one
from .errors import EqualBases, IntegerBase
from .exactnum import (
    FieldElement,
    compare,
    equal_cross_field,
    floor,
    minimal_poly,
    quadratic_family_field,
    sign,
)


@dataclass(frozen=True)
class BaseProfile:
    """Orbit and (when available) density data for one base."""

    beta: FieldElement
    orbit: OrbitDescriptor
    h: Optional[D.StepFunction]
    normalized: Optional[D.StepFunction]
    K: Optional[FieldElement]

    @property
    def complete(self) -> bool:
        return self.orbit.is_complete


def profile(beta: FieldElement, budget: int = DEFAULT_BUDGET, orbit: OrbitDescriptor | None = None) -> BaseProfile:
    if orbit is None:
        orbit = orbit_of_one(beta, budget)
    if not orbit.is_complete:
        return BaseProfile(beta, orbit, None, None, None)
    h = D.build_density(orbit)
    K = D.integral(h)
    return BaseProfile(beta, orbit, h, D.normalize(h), K)


@dataclass
class CoefficientSets:
    """C, C1, C2 built with the zero-hitting base as the first base."""

    zero_side: int  # 1 or 2: which labelled base has 0 in its orbit
    m: int
    ell: int
    C: list[FieldElement]
    C1: list[FieldElement]
    C2: list[FieldElement]
    union_equal: bool
    max_C_is_inverse_base: bool


@dataclass
class CoincidenceReport:
    beta1: FieldElement
    beta2: FieldElement
    status: str  # "coincide", "distinct" or "unknown"
    coincide: Optional[bool]
    budget: int
    classifications: tuple[str, str]
    K_values: Optional[tuple[FieldElement, FieldElement]] = None
    K_equal: Optional[bool] = None
    orbit_sets_equal_mod_zero: Optional[bool] = None
    zero_membership: Optional[tuple[bool, bool]] = None
    family_params: Optional[tuple[int, int]] = None
    beta2_is_beta1_plus_1: bool = False
    theorem_verdict: bool = False
    coefficient_sets: Optional[CoefficientSets] = None
    zero_value_condition_holds: Optional[bool] = None
    notes: list[str] = dc_field(default_factory=list)


def make_pair(p: int, q: int) -> tuple[FieldElement, FieldElement]:
    """(beta1, beta1 + 1) with beta1 the root > 1 of x^2 - q x - p."""
    b1 = quadratic_family_field(p, q).gen
    return b1, b1 + 1


def classify_family(beta: FieldElement) -> Optional[tuple[int, int]]:
    """(p, q) if the minimal polynomial of beta is x^2 - q x - p with 1 <= p <= q."""
    f = minimal_poly(beta)
    if len(f) != 3:
        return None
    c0, c1 = f[0], f[1]
    if c0.denominator != 1 or c1.denominator != 1:
        return None
    p, q = -int(c0), -int(c1)
    if 1 <= p <= q:
        return p, q
    return None


def is_pisot_quadratic(p: int, q: int) -> bool:
    """Both beta1 and beta1 + 1 are quadratic Pisot numbers.

    The Galois conjugate of beta1 is -p/beta1 and that of beta1 + 1 is
    1 - p/beta1; both lie in Q(beta1), so |conjugate| < 1 is a pair of
    exact sign tests.
    """
    beta = quadratic_family_field(p, q).gen
    conj1 = -p / beta
    conj2 = conj1 + 1
    return all(sign(1 - c) > 0 and sign(1 + c) > 0 for c in (conj1, conj2))


def _is_integer(beta: FieldElement) -> bool:
    return (beta - floor(beta)).is_zero()


def _check_pair(beta1: FieldElement, beta2: FieldElement) -> tuple[FieldElement, FieldElement]:
    """Validate and order a pair so that the smaller base comes first."""
    for b in (beta1, beta2):
        if sign(b - 1) <= 0:
            raise ValueError("bases must exceed 1")
        if _is_integer(b):
            raise IntegerBase(f"integer base {floor(b)} is excluded")
    c = compare(beta1, beta2)
    if c == 0:
        raise EqualBases("the two bases are equal")
    return (beta1, beta2) if c < 0 else (beta2, beta1)


def theorem_verdict(beta1: FieldElement, beta2: FieldElement) -> bool:
    """Predicted coincidence: smaller base in the (p, q) family and larger = smaller + 1."""
    lo, hi = _check_pair(beta1, beta2)
    return classify_family(lo) is not None and equal_cross_field(hi, lo + 1)


def _by_value(xs):
    return sorted(xs, key=cmp_to_key(lambda a, b: sign(a - b)))


def _dedupe_sorted(xs: list[FieldElement]) -> list[FieldElement]:
    out: list[FieldElement] = []
    for x in xs:
        if not out or out[-1] != x:
            out.append(x)
    return out


def _sets_equal(xs: list[FieldElement], ys: list[FieldElement]) -> bool:
    """Set equality of two lists, each living in a single field."""
    a = _dedupe_sorted(_by_value(xs))
    b = _dedupe_sorted(_by_value(ys))
    return len(a) == len(b) and all(equal_cross_field(x, y) for x, y in zip(a, b))


def coefficient_sets(zero_orbit: OrbitDescriptor, other: OrbitDescriptor, zero_side: int) -> tuple[CoefficientSets, bool]:
    """Coefficient sets of the two densities and the value-at-zero identity.

    ``zero_orbit`` must reach 0 and ``other`` must be eventually periodic
    without reaching 0.  Returns the sets together with whether
    sum_{k=0}^{m} beta_a^{-k} equals beta_b / (beta_b - 1).
    """
    ba, bb = zero_orbit.beta, other.beta
    m = len(zero_orbit.points)
    ell = len(other.preperiod) + 1
    mb = len(other.points)
    inv_a, inv_b = 1 / ba, 1 / bb
    C = []
    power = ba.field.one
    for _ in range(m):
        power = power * inv_a
        C.append(power)
    C1, C2 = [], []
    power = bb.field.one
    for _ in range(1, ell):
        power = power * inv_b
        C1.append(power)
    period_len = mb + 1 - ell
    bL = bb ** period_len
    boost = bL / (bL - 1)
    for _ in range(ell, mb + 1):
        power = power * inv_b
        C2.append(boost * power)
    union_equal = _sets_equal(C, C1 + C2)
    max_ok = bool(C) and equal_cross_field(max(C, key=cmp_to_key(lambda x, y: sign(x - y))), inv_a)
    lhs = ba.field.zero
    power = ba.field.one
    for _ in range(m + 1):
        lhs = lhs + power
        power = power * inv_a
    rhs = bb / (bb - 1)
    cond = equal_cross_field(lhs, rhs)
    return CoefficientSets(zero_side, m, ell, C, C1, C2, union_equal, max_ok), cond


def compare_profiles(p1: BaseProfile, p2: BaseProfile, budget: int) -> CoincidenceReport:
    """Full report for an already validated, ordered pair (p1.beta < p2.beta)."""
    b1, b2 = p1.beta, p2.beta
    report = CoincidenceReport(
        beta1=b1, beta2=b2, status="unknown", coincide=None, budget=budget,
        classifications=(p1.orbit.classification.value, p2.orbit.classification.value),
    )
    report.family_params = classify_family(b1)
    report.beta2_is_beta1_plus_1 = equal_cross_field(b2, b1 + 1)
    report.theorem_verdict = report.family_params is not None and report.beta2_is_beta1_plus_1
    if not (p1.complete and p2.complete):
        report.notes.append(f"orbit of 1 not resolved within budget {budget}; verdict unknown")
        return report
    same = D.equal(p1.normalized, p2.normalized)
    report.coincide = same
    report.status = "coincide" if same else "distinct"
    report.K_values = (p1.K, p2.K)
    report.K_equal = equal_cross_field(p1.K, p2.K)
    o1, o2 = p1.orbit, p2.orbit
    report.orbit_sets_equal_mod_zero = _sets_equal(list(o1.points), list(o2.points))
    report.zero_membership = (o1.hits_zero, o2.hits_zero)
    if o1.hits_zero != o2.hits_zero:
        if o1.hits_zero:
            sets, cond = coefficient_sets(o1, o2, 1)
        else:
            sets, cond = coefficient_sets(o2, o1, 2)
        report.coefficient_sets = sets
        report.zero_value_condition_holds = cond
    return report


def coincide(beta1: FieldElement, beta2: FieldElement, budget: int = DEFAULT_BUDGET) -> CoincidenceReport:
    """Decide whether nu_beta1 = nu_beta2 and collect the diagnostics.

    The smaller base is always reported as ``beta1``.  If either orbit of
    1 is not resolved within ``budget`` the status is ``"unknown"`` and
    ``coincide`` is None.
    """
    lo, hi = _check_pair(beta1, beta2)
    return compare_profiles(profile(lo, budget), profile(hi, budget), budget)


def multiplicative_dependence(beta1: FieldElement, beta2: FieldElement,
                              exponent_bound: int) -> Optional[tuple[int, int]]:
    """Lexicographically smallest (n, m) in [1, bound]^2 with beta1^n = beta2^m."""
    if exponent_bound < 1:
        return None
    pow1 = [beta1]
    for _ in range(exponent_bound - 1):
        pow1.append(pow1[-1] * beta1)
    pow2 = [beta2]
    for _ in range(exponent_bound - 1):
        pow2.append(pow2[-1] * beta2)
    for n, a in enumerate(pow1, 1):
        for m, b in enumerate(pow2, 1):
            if equal_cross_field(a, b):
                return n, m
    return None


def contradiction_replay(m: int) -> dict:
    """Replay the m >= 2 dead end: if beta^(m+1) = beta + 1 then T^(m+1)(1) lies in (0, 1).

    Takes beta as the root > 1 of x^(m+1) - x - 1 and iterates the orbit
    of 1 exactly; the returned dict records the relation check and the
    value T^(m+1)(1) = beta^m * (beta - 1).
    """
    from .dynamics import iterate_one
    from .exactnum import isolate_roots_above_one

    if m < 2:
        raise ValueError("m must be >= 2")
    poly = [Fraction(-1), Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    (field,) = isolate_roots_above_one(poly)
    beta = field.gen
    t1 = iterate_one(beta, 1)
    t_m1 = iterate_one(beta, m + 1)
    return {
        "beta": beta,
        "relation_holds": (beta ** (m + 1) - beta - 1).is_zero(),
        "first_digit": floor(beta),
        "T1_is_beta_minus_1": t1 == beta - 1,
        "T_m_plus_1": t_m1,
        "T_m_plus_1_formula": t_m1 == beta ** m * (beta - 1),
        "T_m_plus_1_in_open_unit": sign(t_m1) > 0 and sign(t_m1 - 1) < 0,
    }
