from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from parry import poly as P
from parry.errors import DivisionByZero, FieldMismatch, InvalidFamily, NoRootAboveOne, NonInvertible
from parry.exactnum import (
    NumberField,
    char_poly,
    compare,
    equal_cross_field,
    floor,
    invert,
    isolate_roots_above_one,
    minimal_poly,
    quadratic_family_field,
    rational_field,
    sign,
    to_interval,
)

from .oracles import mp_value

small = st.fractions(min_value=-50, max_value=50, max_denominator=30)


def coeff_vectors(d):
    return st.lists(small, min_size=d, max_size=d)


# ---- construction ---------------------------------------------------------------------


def test_golden_isolation():
    (f,) = isolate_roots_above_one([-1, -1, 1])
    assert f.root_interval == (Fraction(3, 2), Fraction(13, 8))
    assert f.degree == 2


def test_linear_polynomial():
    (f,) = isolate_roots_above_one([-2, 1])
    assert f.degree == 1
    assert f.gen.rational_value() == 2


def test_no_root_above_one():
    with pytest.raises(NoRootAboveOne):
        isolate_roots_above_one([1, 0, 1])
    with pytest.raises(NoRootAboveOne):
        isolate_roots_above_one([-1, 1])


def test_reducible_input_is_split():
    # (x^2 - x - 1)(x - 3): two fields, sorted by root
    fields = isolate_roots_above_one(P.mul(P.make([-1, -1, 1]), P.make([-3, 1])))
    assert [f.degree for f in fields] == [2, 1]
    assert fields[1].gen.rational_value() == 3


def test_several_roots_sorted():
    # (x^2 - 3x + 1)(x^2 - 4x + 2): roots 0.38, 0.59, 2.62, 3.41
    f = P.mul(P.make([1, -3, 1]), P.make([2, -4, 1]))
    fields = isolate_roots_above_one(f)
    assert len(fields) == 2
    assert compare(fields[0].gen, fields[1].gen) < 0


def test_quadratic_family_examples():
    g = quadratic_family_field(1, 1).gen
    assert abs(float(g) - 1.6180339887) < 1e-9
    s = quadratic_family_field(1, 2).gen
    assert (s * s - 2 * s - 1).is_zero()
    assert abs(float(s) - (1 + 2 ** 0.5)) < 1e-12
    with pytest.raises(InvalidFamily):
        quadratic_family_field(2, 1)
    with pytest.raises(InvalidFamily):
        quadratic_family_field(0, 3)


def test_non_monic_modulus_rejected():
    with pytest.raises(ValueError):
        NumberField([-1, -1, 2], Fraction(1), Fraction(2))


# ---- arithmetic -------------------------------------------------------------------------


def test_ring_examples(golden):
    t = golden
    assert t * t == t + 1
    one = t.field.one
    assert t * (t - 1) == one
    assert t + (1 - t) == one
    assert (t == 1) is False  # no implicit equality with plain numbers
    assert invert(t) == t - 1
    assert invert(t.field.element([2])) == t.field.element([Fraction(1, 2)])
    with pytest.raises(DivisionByZero):
        invert(t.field.zero)


def test_field_mismatch(golden, silver):
    with pytest.raises(FieldMismatch):
        golden + silver


def test_reducible_modulus_reports_factor():
    # Q[x]/(x^2 - 3x + 2) around the root 2 is not a field
    field = NumberField([2, -3, 1], Fraction(3, 2), Fraction(5, 2))
    with pytest.raises(NonInvertible) as exc:
        invert(field.gen - 1)
    assert P.degree(exc.value.factor) == 1


@settings(max_examples=60, deadline=None)
@given(coeff_vectors(2), coeff_vectors(2), coeff_vectors(2))
def test_ring_axioms_golden(a, b, c):
    F = quadratic_family_field(1, 1)
    x, y, z = F.element(a), F.element(b), F.element(c)
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    if not x.is_zero():
        assert x * invert(x) == F.one
        assert (y / x) * x == y


@settings(max_examples=40, deadline=None)
@given(coeff_vectors(3))
def test_inverse_plastic(a):
    F = isolate_roots_above_one([-1, -1, 0, 1])[0]
    x = F.element(a)
    if not x.is_zero():
        assert x * invert(x) == F.one


# ---- sign / floor / intervals -------------------------------------------------------------


def test_sign_examples(golden):
    t = golden
    assert sign(t * t - t - 1) == 0
    assert sign(t - Fraction(8, 5)) == 1
    assert sign(-t) == -1


def test_floor_examples(golden):
    assert floor(golden) == 1
    assert floor(golden * golden) == 2
    assert floor(rational_field(Fraction(7, 2)).gen) == 3


def test_to_interval_examples(golden):
    phi = (1 + mpmath.sqrt(5)) / 2
    lo, hi = to_interval(golden, Fraction(1, 1000))
    assert hi - lo <= Fraction(1, 1000)
    assert mpmath.mpf(lo.numerator) / lo.denominator <= phi <= mpmath.mpf(hi.numerator) / hi.denominator
    q = golden.field.element([Fraction(1, 3)])
    assert to_interval(q, Fraction(1, 10)) == (Fraction(1, 3), Fraction(1, 3))
    lo, hi = to_interval(-golden, Fraction(1, 100))
    assert hi - lo <= Fraction(1, 100)
    assert mpmath.mpf(lo.numerator) / lo.denominator <= -phi <= mpmath.mpf(hi.numerator) / hi.denominator


def test_sign_of_tiny_element(golden):
    # F_n theta - F_{n+1} -> 0 geometrically; sign alternates with n
    a, b = 1, 1
    for n in range(2, 120):
        a, b = b, a + b
        e = a * golden - b
        assert sign(e) == (1 if n % 2 == 1 else -1)


@settings(max_examples=80, deadline=None)
@given(coeff_vectors(3))
def test_sign_and_floor_match_mpmath_plastic(a):
    F = isolate_roots_above_one([-1, -1, 0, 1])[0]
    x = F.element(a)
    v = mp_value(x)
    if x.is_zero():
        assert sign(x) == 0
        return
    assert sign(x) == (1 if v > 0 else -1)
    assert floor(x) == int(mpmath.floor(v))
    lo, hi = to_interval(x, Fraction(1, 10 ** 30))
    with mpmath.workdps(60):
        assert mpmath.mpf(lo.numerator) / lo.denominator <= v + mpmath.mpf(10) ** -50
        assert v - mpmath.mpf(10) ** -50 <= mpmath.mpf(hi.numerator) / hi.denominator


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.integers(1, 8), coeff_vectors(2))
def test_floor_matches_mpmath_family(p, q, a):
    if p > q:
        p, q = q, p
    F = quadratic_family_field(p, q)
    x = F.element(a)
    assert floor(x) == int(mpmath.floor(mp_value(x)))


def test_floor_at_exact_integer(golden):
    assert floor(golden * golden - golden + 2) == 3
    assert floor(golden * 0 - 4) == -4


# ---- polynomial invariants ------------------------------------------------------------


def test_char_poly_examples(golden):
    assert char_poly(golden) == P.make([-1, -1, 1])
    assert char_poly(golden - 1) == P.make([-1, 1, 1])
    assert char_poly(golden.field.element([3])) == P.make([9, -6, 1])
    assert minimal_poly(golden.field.element([3])) == P.make([-3, 1])


@settings(max_examples=40, deadline=None)
@given(coeff_vectors(3))
def test_char_poly_matches_sympy(a):
    F = isolate_roots_above_one([-1, -1, 0, 1])[0]
    x = F.element(a)
    X, T = sympy.symbols("X T")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * T ** i for i, c in enumerate(x.coeffs))
    res = sympy.resultant(T ** 3 - T - 1, X - expr, T)
    expected = sympy.Poly(res, X).monic().all_coeffs()[::-1]
    got = char_poly(x)
    assert [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in expected] == list(got)


# ---- cross-field comparison -----------------------------------------------------------------


def test_equal_cross_field_examples(golden, golden_sq, silver):
    assert equal_cross_field(golden - 1, golden_sq - 2)
    assert equal_cross_field(golden.field.element([Fraction(1, 2)]), silver.field.element([Fraction(1, 2)]))
    assert not equal_cross_field(golden, silver)
    assert equal_cross_field(golden * golden, golden_sq)
    assert not equal_cross_field(golden, golden_sq)


def test_conjugate_roots_are_distinguished():
    # x^2 - 5x + 5 has roots 1.38 and 3.62, same minimal polynomial
    lo, hi = isolate_roots_above_one([5, -5, 1])
    assert not equal_cross_field(lo.gen, hi.gen)
    assert equal_cross_field(lo.gen, 5 - hi.gen)
    assert compare(lo.gen, 5 - hi.gen) == 0


@settings(max_examples=40, deadline=None)
@given(coeff_vectors(2), coeff_vectors(2))
def test_compare_matches_mpmath(a, b):
    F1 = quadratic_family_field(1, 1)
    F2 = quadratic_family_field(1, 2)
    x, y = F1.element(a), F2.element(b)
    vx, vy = mp_value(x), mp_value(y)
    c = compare(x, y)
    if x.is_rational() and y.is_rational():
        assert c == (x.rational_value() > y.rational_value()) - (x.rational_value() < y.rational_value())
    else:
        assert c == (1 if vx > vy else -1)


# ---- further properties -------------------------------------------------------------


@settings(max_examples=50, deadline=None)
@given(coeff_vectors(3), coeff_vectors(3))
def test_inverse_of_product(a, b):
    F = isolate_roots_above_one([-1, -1, 0, 1])[0]
    x, y = F.element(a), F.element(b)
    if x.is_zero() or y.is_zero():
        return
    assert invert(x * y) == invert(x) * invert(y)


@settings(max_examples=50, deadline=None)
@given(coeff_vectors(2), coeff_vectors(2), coeff_vectors(2))
def test_sign_is_a_total_order(a, b, c):
    F = quadratic_family_field(2, 3)
    x, y, z = F.element(a), F.element(b), F.element(c)
    assert sign(x - y) == -sign(y - x)
    if sign(x - y) <= 0 and sign(y - z) <= 0:
        assert sign(x - z) <= 0


@settings(max_examples=60, deadline=None)
@given(coeff_vectors(3))
def test_floor_brackets_value(a):
    F = isolate_roots_above_one([-1, -2, -1, 1])[0]
    x = F.element(a)
    n = floor(x)
    assert sign(x - n) >= 0 and sign(x - (n + 1)) < 0


@settings(max_examples=50, deadline=None)
@given(coeff_vectors(2), coeff_vectors(2))
def test_cross_field_agrees_with_common_field(a, b):
    # Q(theta1) with theta1^2 = theta1 + 1 and Q(theta2) with theta2^2 = 3 theta2 - 1 share theta2 = theta1 + 1
    F1 = quadratic_family_field(1, 1)
    F2 = isolate_roots_above_one([1, -3, 1])[-1]
    x = F2.element(b)
    mapped = x.coeffs[0] + x.coeffs[1] * (F1.gen + 1)
    y = F1.element(a)
    assert equal_cross_field(x, mapped)
    assert equal_cross_field(x, y) == (mapped == y)


def test_orbit_stays_in_integer_lattice(plastic):
    x = plastic - floor(plastic)
    for _ in range(200):
        assert all(c.denominator == 1 for c in x.coeffs)
        y = plastic * x
        x = y - floor(y)
