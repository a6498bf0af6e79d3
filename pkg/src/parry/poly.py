"""Dense univariate polynomials over Q.

A polynomial is a tuple of ``Fraction`` coefficients ordered from the
constant term up to the leading term, with no trailing zeros.  The zero
polynomial is the empty tuple.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Poly = tuple  # tuple[Fraction, ...]


def make(coeffs: Iterable) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(f: Poly) -> int:
    return len(f) - 1


def add(f: Poly, g: Poly) -> Poly:
    n = max(len(f), len(g))
    return make((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n))


def neg(f: Poly) -> Poly:
    return tuple(-c for c in f)


def sub(f: Poly, g: Poly) -> Poly:
    return add(f, neg(g))


def scale(f: Poly, c) -> Poly:
    return make(c * a for a in f)


def mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return make(out)


def divmod_(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f)
    dg = len(g) - 1
    lead = g[-1]
    if len(rem) - 1 < dg:
        return (), make(rem)
    quo = [Fraction(0)] * (len(rem) - dg)
    for k in range(len(rem) - 1 - dg, -1, -1):
        c = rem[k + dg] / lead
        quo[k] = c
        if c:
            for j in range(dg + 1):
                rem[k + j] -= c * g[j]
    return make(quo), make(rem[:dg])


def rem(f: Poly, g: Poly) -> Poly:
    return divmod_(f, g)[1]


def monic(f: Poly) -> Poly:
    if not f:
        return f
    lead = f[-1]
    return tuple(c / lead for c in f)


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    while g:
        f, g = g, rem(f, g)
    return monic(f)


def xgcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (d, s, t) with s*f + t*g = d = monic gcd(f, g)."""
    r0, r1 = f, g
    s0, s1 = (Fraction(1),), ()
    t0, t1 = (), (Fraction(1),)
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return (), s0, t0
    lead = r0[-1]
    return monic(r0), scale(s0, 1 / lead), scale(t0, 1 / lead)


def derivative(f: Poly) -> Poly:
    return make(i * c for i, c in enumerate(f) if i > 0)


def squarefree(f: Poly) -> Poly:
    """Monic squarefree part f / gcd(f, f')."""
    if len(f) <= 2:
        return monic(f)
    g = gcd(f, derivative(f))
    return monic(divmod_(f, g)[0])


def evaluate(f: Poly, x):
    acc = Fraction(0) if not isinstance(x, Fraction) else x * 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def compose_shift(f: Poly, a) -> Poly:
    """Return f(x + a)."""
    out: Poly = ()
    for c in reversed(f):
        out = add(mul(out, (Fraction(a), Fraction(1))), (c,))
    return out


def integer_content(f: Poly) -> tuple[int, ...]:
    """Primitive integer polynomial with the same roots and positive lead."""
    if not f:
        return ()
    den = lcm(*(c.denominator for c in f))
    ints = [int(c * den) for c in f]
    from math import gcd as igcd

    g = 0
    for v in ints:
        g = igcd(g, v)
    if ints[-1] < 0:
        g = -g
    return tuple(v // g for v in ints)


def sturm_sequence(f: Poly) -> list[Poly]:
    seq = [f, derivative(f)]
    while seq[-1]:
        seq.append(neg(rem(seq[-2], seq[-1])))
    return seq[:-1]


def _variations(values: Sequence) -> int:
    count = 0
    last = 0
    for v in values:
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if last and s != last:
            count += 1
        last = s
    return count


def sign_variations_at(seq: Sequence[Poly], x) -> int:
    return _variations([evaluate(p, x) for p in seq])


def count_roots(seq: Sequence[Poly], lo, hi) -> int:
    """Distinct real roots of seq[0] in the half-open interval (lo, hi]."""
    return sign_variations_at(seq, lo) - sign_variations_at(seq, hi)


def count_roots_closed(f: Poly, lo, hi, seq: Sequence[Poly] | None = None) -> int:
    """Distinct real roots of squarefree f in [lo, hi]."""
    if seq is None:
        seq = sturm_sequence(f)
    n = count_roots(seq, lo, hi)
    if evaluate(f, lo) == 0:
        n += 1
    return n


def cauchy_bound(f: Poly) -> Fraction:
    """All real roots of f lie in (-B, B)."""
    lead = abs(f[-1])
    return 1 + max((abs(c) / lead for c in f[:-1]), default=Fraction(0))


def to_str(f: Poly, var: str = "x") -> str:
    if not f:
        return "0"
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for s, body in terms[1:]:
        out += f" {s} {body}"
    return out
