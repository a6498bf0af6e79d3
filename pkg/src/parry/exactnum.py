"""Exact arithmetic in real algebraic number fields Q(theta), theta > 1.

Elements are stored as reduced coefficient vectors over Q.  Their real
value is never approximated implicitly: signs are decided by a zero test
on the coefficients followed by integer interval evaluation against a
dyadic enclosure of theta that is refined by bisection on demand.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor as _ifloor, lcm
from numbers import Rational
from typing import Iterable, Sequence

from . import poly as P
from .errors import (
    DivisionByZero,
    FieldMismatch,
    InvalidFamily,
    NoRootAboveOne,
    NonInvertible,
)

__all__ = [
    "NumberField",
    "FieldElement",
    "isolate_roots_above_one",
    "quadratic_family_field",
    "rational_field",
    "char_poly",
    "minimal_poly",
    "equal_cross_field",
    "compare",
    "to_interval",
    "sign",
    "floor",
    "invert",
]

# precision (bits of the theta enclosure) tried first by sign tests
_START_BITS = 48
# isolating intervals handed out by root isolation are at most this wide
_ISOLATION_WIDTH = Fraction(1, 8)


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _hom_value(coeffs: Sequence[int], num: int, k: int) -> int:
    d = len(coeffs) - 1
    acc = 0
    for i in range(d, -1, -1):
        acc = acc * num + (coeffs[i] << (k * (d - i)))
    return acc


class NumberField:
    """Q[x]/(m) with a distinguished real root theta > 1 of the monic modulus m.

    ``root_interval`` is a rational pair isolating theta among the real roots
    of ``m``.  The field keeps a private dyadic enclosure of theta that only
    ever shrinks; this is the single piece of internal state and refining it
    does not change the mathematical value of anything.
    """

    __slots__ = ("modulus", "degree", "_int_mod", "_theta", "_L", "_H", "_k",
                 "_reduce_table", "_hash", "_sturm", "root_interval", "_sL")

    def __init__(self, modulus: Iterable, lo, hi):
        m = P.make(modulus)
        if len(m) < 2:
            raise ValueError("modulus must have degree >= 1")
        if m[-1] != 1:
            raise ValueError("modulus must be monic")
        lo, hi = Fraction(lo), Fraction(hi)
        if not (1 < lo <= hi):
            raise ValueError(f"root interval must satisfy 1 < lo <= hi, got [{lo}, {hi}]")
        self.modulus: tuple = m
        self.degree: int = len(m) - 1
        self._int_mod = P.integer_content(m)
        self._hash = hash(m)
        self._theta: Fraction | None = None
        self._sL: int | None = None
        self.root_interval: tuple[Fraction, Fraction] = (lo, hi)
        if self.degree == 1:
            theta = -m[0]
            if not (lo <= theta <= hi):
                raise ValueError("root interval does not contain the root")
            self._theta = theta
            self._L = self._H = self._k = 0
            self._sturm = None
        else:
            self._sturm = P.sturm_sequence(P.squarefree(m))
            if P.count_roots_closed(self._sturm[0], lo, hi, self._sturm) != 1:
                raise ValueError(f"[{lo}, {hi}] does not isolate exactly one root of {P.to_str(m)}")
            self._init_dyadic(lo, hi)
        self._reduce_table = self._build_reduce_table()

    # ---- enclosure management -------------------------------------------------

    def _init_dyadic(self, lo: Fraction, hi: Fraction) -> None:
        f, seq = self._sturm[0], self._sturm
        k = 1
        while hi > lo and Fraction(1, 1 << k) > (hi - lo) / 2:
            k += 1
        while True:
            L = _ifloor(lo * (1 << k))
            H = -_ifloor(-hi * (1 << k))
            a, b = Fraction(L, 1 << k), Fraction(H, 1 << k)
            if a > 1 and P.count_roots_closed(f, a, b, seq) == 1:
                break
            mid = (lo + hi) / 2
            if P.count_roots_closed(f, lo, mid, seq) == 1:
                hi = mid
            else:
                lo = mid
            k += 1
        self._L, self._H, self._k = L, H, k
        # make the sign of m differ strictly at the two ends (or hit the root)
        sL = _sign(_hom_value(self._int_mod, L, k))
        sH = _sign(_hom_value(self._int_mod, H, k))
        if sL == 0:
            self._H = L
        elif sH == 0:
            self._L = H
        elif sL == sH:
            # even multiplicity cannot occur for the squarefree part; the
            # modulus itself must then be non-squarefree
            raise ValueError("modulus must be squarefree")

    def _refine_to(self, bits: int) -> None:
        """Bisect the enclosure until its width is at most 2^-bits."""
        if self._theta is not None:
            return
        L, H, k = self._L, self._H, self._k
        m = self._int_mod
        if L == H:
            if k < bits:
                L <<= bits - k
                self._L = self._H = L
                self._k = bits
            return
        if self._sL is None:
            self._sL = _sign(_hom_value(m, L, k))
        sL = self._sL
        if bits - k > 64 and H - L <= 1 and k >= 32:
            got = self._newton_bracket(L, H, k, bits, sL)
            if got is not None:
                L, H, k = got
        while True:
            if H - L > 1:
                mid = (L + H) // 2
            elif k < bits:
                L, H, k = 2 * L, 2 * H, k + 1
                mid = L + 1
            else:
                break
            sm = _sign(_hom_value(m, mid, k))
            if sm == 0:
                L = H = mid
                self._L, self._H, self._k = L, H, k
                return self._refine_to(bits)
            if sm == sL:
                L = mid
            else:
                H = mid
        self._L, self._H, self._k = L, H, k

    def _newton_bracket(self, L: int, H: int, k: int, bits: int, sL: int):
        """Jump from precision k to ``bits`` with fixed-point Newton steps.

        The result is only trusted after exact sign checks at both ends,
        inside the current isolating enclosure; None means fall back to bisection.
        """
        m = self._int_mod
        dm = [i * c for i, c in enumerate(m)][1:]
        X, prec = L, k
        target = bits + 8
        while prec < target:
            new = min(2 * prec, target)
            X <<= new - prec
            prec = new
            for _ in range(2):
                den = _hom_value(dm, X, prec)
                if den == 0:
                    return None
                X -= _hom_value(m, X, prec) // den
        Xb = X >> (prec - bits)
        lo_old, hi_old = L << (bits - k), H << (bits - k)
        lo, hi = max(Xb - 2, lo_old), min(Xb + 3, hi_old)
        if lo >= hi:
            return None
        if _sign(_hom_value(m, lo, bits)) != sL or _sign(_hom_value(m, hi, bits)) != -sL:
            return None
        return lo, hi, bits

    def enclosure(self, bits: int) -> tuple[int, int, int]:
        """Integers (L, H, k) with L/2^k <= theta <= H/2^k, width <= 2^-bits."""
        if self._k < bits or (self._H - self._L) > 1:
            # overshoot so that slowly growing demands do not refine every call
            self._refine_to(bits + bits // 4)
        L, H, k = self._L, self._H, self._k
        if k > bits:
            s = k - bits
            return L >> s, -((-H) >> s), bits
        return L, H, k

    def _current_interval(self) -> tuple[Fraction, Fraction]:
        if self._theta is not None:
            return self._theta, self._theta
        return Fraction(self._L, 1 << self._k), Fraction(self._H, 1 << self._k)

    def theta_interval(self, bits: int) -> tuple[Fraction, Fraction]:
        if self._theta is not None:
            return self._theta, self._theta
        L, H, k = self.enclosure(bits)
        return Fraction(L, 1 << k), Fraction(H, 1 << k)

    # ---- identity ------------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, NumberField) or other.modulus != self.modulus:
            return False
        if self._theta is not None:
            return True
        a1, b1 = self._current_interval()
        a2, b2 = other._current_interval()
        lo, hi = max(a1, a2), min(b1, b2)
        if lo > hi:
            return False
        # each interval holds exactly one root, so they hold the same one
        # iff their intersection holds a root
        return P.count_roots_closed(self._sturm[0], lo, hi, self._sturm) >= 1

    def __hash__(self):
        return self._hash

    def __repr__(self):
        lo, hi = self._current_interval()
        return f"NumberField({P.to_str(self.modulus)}, [{float(lo):.12g}, {float(hi):.12g}])"

    # ---- element construction ------------------------------------------------

    def _build_reduce_table(self) -> list[tuple]:
        """theta^j reduced mod m, for j = d .. 2d-2."""
        d = self.degree
        m = self.modulus
        table = []
        cur = [-c for c in m[:d]]  # theta^d
        for _ in range(max(d - 1, 0)):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if top:
                cur = [c - top * mc for c, mc in zip(cur, m[:d])]
        if d >= 1:
            table.append(tuple(cur))
        return table

    def element(self, coeffs: Iterable) -> FieldElement:
        cs = [Fraction(c) for c in coeffs]
        d = self.degree
        if len(cs) > d:
            cs = list(P.rem(P.make(cs), self.modulus))
        cs += [Fraction(0)] * (d - len(cs))
        return FieldElement._raw(self, tuple(cs))

    def __call__(self, value) -> FieldElement:
        return self.lift(value)

    def lift(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value.field!r} vs {self!r}")
            return value
        return self.element([Fraction(value)])

    @property
    def gen(self) -> FieldElement:
        if self.degree == 1:
            return self.element([self._theta])
        return self.element([0, 1])

    @property
    def one(self) -> FieldElement:
        return self.element([1])

    @property
    def zero(self) -> FieldElement:
        return self.element([])


def rational_field(value) -> NumberField:
    """Degree-one field holding the rational ``value`` > 1 as its generator."""
    v = Fraction(value)
    return NumberField([-v, 1], v, v)


class FieldElement:
    """c_0 + c_1 theta + ... + c_{d-1} theta^{d-1} in a NumberField."""

    __slots__ = ("field", "coeffs", "_hash", "_ints")

    def __init__(self, field: NumberField, coeffs: Iterable):
        e = field.element(coeffs)
        self.field = e.field
        self.coeffs = e.coeffs
        self._hash = None
        self._ints = None

    @classmethod
    def _raw(cls, field: NumberField, coeffs: tuple) -> FieldElement:
        obj = object.__new__(cls)
        obj.field = field
        obj.coeffs = coeffs
        obj._hash = None
        obj._ints = None
        return obj

    # ---- coercion -------------------------------------------------------------

    def _coerce(self, other) -> FieldElement | None:
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return other
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        if isinstance(other, (int, Rational)):
            return self.field.element([other])
        return None

    # ---- ring operations -----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement._raw(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement._raw(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return FieldElement._raw(self.field, tuple(-a for a in self.coeffs))

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not isinstance(other, FieldElement):
            c = Fraction(other)
            return FieldElement._raw(self.field, tuple(a * c for a in self.coeffs))
        return _mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not isinstance(other, FieldElement):
            c = Fraction(other)
            if c == 0:
                raise DivisionByZero("division by zero")
            return FieldElement._raw(self.field, tuple(a / c for a in self.coeffs))
        return _mul(self, invert(o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _mul(o, invert(self))

    def __pow__(self, n: int):
        if n < 0:
            return invert(self) ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = _mul(result, base)
            n >>= 1
            if n:
                base = _mul(base, base)
        return result

    # ---- comparison -----------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return (self.field is other.field or self.field == other.field) and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.modulus, self.coeffs))
        return self._hash

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare FieldElement with {type(other).__name__}")
        return sign(self - o)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    # ---- queries -----------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        if self.field.degree == 1:
            return self.coeffs[0]
        return self.coeffs[0]

    def __float__(self):
        lo, hi = to_interval(self, Fraction(1, 1 << 60))
        return float((lo + hi) / 2)

    def __repr__(self):
        if self.field.degree == 1:
            return f"FieldElement({self.coeffs[0]})"
        return f"FieldElement({P.to_str(P.make(self.coeffs), 't')} | {P.to_str(self.field.modulus, 't')})"

    def _scaled_ints(self) -> tuple[tuple[int, ...], int]:
        if self._ints is None:
            den = lcm(*(c.denominator for c in self.coeffs))
            self._ints = (tuple(int(c * den) for c in self.coeffs), den)
        return self._ints


def _mul(a: FieldElement, b: FieldElement) -> FieldElement:
    d = a.field.degree
    prod = [Fraction(0)] * (2 * d - 1)
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in enumerate(b.coeffs):
            if y:
                prod[i + j] += x * y
    out = prod[:d]
    table = a.field._reduce_table
    for j in range(d, 2 * d - 1):
        c = prod[j]
        if c:
            row = table[j - d]
            for i in range(d):
                out[i] += c * row[i]
    return FieldElement._raw(a.field, tuple(out))


def invert(a: FieldElement) -> FieldElement:
    """Multiplicative inverse via extended Euclid against the modulus."""
    if a.is_zero():
        raise DivisionByZero("inverse of zero")
    field = a.field
    if a.is_rational():
        return field.element([1 / a.coeffs[0]])
    g, s, _ = P.xgcd(P.make(a.coeffs), field.modulus)
    if len(g) != 1:
        raise NonInvertible(g)
    return field.element(s)


# ---- real-valued queries --------------------------------------------------------------


def _int_bounds(a: FieldElement, bits: int) -> tuple[int, int, int]:
    """Integers (lo, hi, scale) with lo/scale <= a <= hi/scale, for degree >= 2."""
    ints, den = a._scaled_ints()
    L, H, k = a.field.enclosure(bits)
    d = a.field.degree - 1
    lo = hi = 0
    Lp = Hp = 1
    for i, c in enumerate(ints):
        if i:
            Lp *= L
            Hp *= H
        if not c:
            continue
        shift = k * (d - i)
        if c > 0:
            lo += (c * Lp) << shift
            hi += (c * Hp) << shift
        else:
            lo += (c * Hp) << shift
            hi += (c * Lp) << shift
    return lo, hi, den << (k * d)


def _value_bounds(a: FieldElement, bits: int) -> tuple[Fraction, Fraction]:
    if a.field._theta is not None:
        v = a.coeffs[0]
        return v, v
    lo, hi, scale = _int_bounds(a, bits)
    return Fraction(lo, scale), Fraction(hi, scale)


def _first_bits(a: FieldElement) -> int:
    """Starting precision: enough to resolve the element's coefficient size."""
    ints, den = a._scaled_ints()
    size = max(max((abs(c).bit_length() for c in ints), default=0), den.bit_length())
    return _START_BITS + size


def sign(a: FieldElement) -> int:
    """Exact sign of the real value of ``a``."""
    if a.is_zero():
        return 0
    if a.is_rational():
        return _sign(a.coeffs[0])
    bits = _first_bits(a)
    checked_gcd = False
    while True:
        lo, hi, _ = _int_bounds(a, bits)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        if not checked_gcd and bits >= _first_bits(a) + 3 * _START_BITS:
            # a nonzero vector can only vanish at theta if m is reducible
            checked_gcd = True
            _check_vanishing(a)
        bits = max(2 * bits, bits + 32)


def _check_vanishing(a: FieldElement) -> None:
    field = a.field
    g = P.gcd(P.make(a.coeffs), field.modulus)
    if len(g) > 1:
        lo, hi = field._current_interval()
        if P.count_roots_closed(P.squarefree(g), lo, hi) >= 1:
            raise NonInvertible(g, f"element vanishes at theta; modulus factor {P.to_str(g)}")


def to_interval(a: FieldElement, width) -> tuple[Fraction, Fraction]:
    """Rational enclosure [lo, hi] of ``a`` with hi - lo <= width."""
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    if a.is_rational():
        v = a.coeffs[0]
        return v, v
    bits = _first_bits(a)
    while True:
        lo, hi = _value_bounds(a, bits)
        if hi - lo <= width:
            return lo, hi
        bits = max(2 * bits, bits + 32)


def floor(a: FieldElement) -> int:
    """The unique integer n with n <= a < n + 1."""
    if a.is_rational():
        return _ifloor(a.coeffs[0])
    bits = _first_bits(a)
    while True:
        lo, hi, scale = _int_bounds(a, bits)
        if hi - lo < scale:
            break
        bits = max(2 * bits, bits + 32)
    n = hi // scale
    if n * scale <= lo:
        return n
    return n if sign(a - n) >= 0 else n - 1


# ---- polynomial invariants -----------------------------------------------------------


def _mult_matrix(a: FieldElement) -> list[list[Fraction]]:
    """Matrix of x -> a*x in the power basis (column j = a * theta^j)."""
    field = a.field
    d = field.degree
    cols = []
    cur = a
    t = field.element([0, 1]) if d > 1 else field.one
    for j in range(d):
        cols.append(cur.coeffs)
        if j + 1 < d:
            cur = _mul(cur, t)
    return [[cols[j][i] for j in range(d)] for i in range(d)]


def char_poly(a: FieldElement) -> tuple:
    """Characteristic polynomial of multiplication by ``a`` (monic, degree d).

    Computed with the Faddeev-LeVerrier recurrence over Q.
    """
    A = _mult_matrix(a)
    n = len(A)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    M = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M <- A*M + c_{n-k+1} I
        AM = [[sum(A[i][t] * M[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            AM[i][i] += coeffs[n - k + 1]
        M = AM
        AMk = [[sum(A[i][t] * M[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -sum(AMk[i][i] for i in range(n)) / k
    return P.make(coeffs)


def minimal_poly(a: FieldElement) -> tuple:
    """Minimal polynomial of ``a`` over Q.

    For an irreducible modulus the characteristic polynomial is a power of
    the minimal polynomial, so its squarefree part is the answer.
    """
    return P.squarefree(char_poly(a))


def _hull_isolates(f: tuple, lo: Fraction, hi: Fraction) -> bool:
    return P.count_roots_closed(f, lo, hi) == 1


def equal_cross_field(a: FieldElement, b: FieldElement) -> bool:
    """True iff the real values of ``a`` and ``b`` coincide (any fields)."""
    if a.field is b.field or a.field == b.field:
        return a.coeffs == b.coeffs
    ra, rb = a.is_rational(), b.is_rational()
    if ra or rb:
        return ra and rb and a.coeffs[0] == b.coeffs[0]
    lo1, hi1 = _value_bounds(a, _START_BITS)
    lo2, hi2 = _value_bounds(b, _START_BITS)
    if hi1 < lo2 or hi2 < lo1:
        return False
    f = minimal_poly(a)
    if f != minimal_poly(b):
        return False
    bits = _START_BITS
    while True:
        lo1, hi1 = _value_bounds(a, bits)
        lo2, hi2 = _value_bounds(b, bits)
        if hi1 < lo2 or hi2 < lo1:
            return False
        if _hull_isolates(f, min(lo1, lo2), max(hi1, hi2)):
            return True
        bits *= 2


def compare(a: FieldElement, b: FieldElement) -> int:
    """Sign of a - b for elements of possibly different fields."""
    if a.field is b.field or a.field == b.field:
        return sign(a - b)
    if a.is_rational() and b.is_rational():
        return _sign(a.coeffs[0] - b.coeffs[0])
    bits = _START_BITS
    checked = False
    while True:
        lo1, hi1 = _value_bounds(a, bits)
        lo2, hi2 = _value_bounds(b, bits)
        if hi1 < lo2:
            return -1
        if hi2 < lo1:
            return 1
        if not checked:
            checked = True
            if equal_cross_field(a, b):
                return 0
        bits *= 2


# ---- constructors ---------------------------------------------------------------------


def _irreducible_factors(f: tuple) -> list[tuple]:
    """Distinct monic irreducible factors of f over Q (delegated to sympy)."""
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(f))
    _, factors = sympy.factor_list(expr, x)
    out = []
    for fac, _mult in factors:
        cs = sympy.Poly(fac, x).all_coeffs()[::-1]
        out.append(P.monic(P.make(Fraction(int(c.p), int(c.q)) for c in cs)))
    return out


def _isolate_above_one(f: tuple) -> list[tuple[Fraction, Fraction]]:
    """Closed intervals with lo > 1, each holding exactly one root > 1 of squarefree f."""
    seq = P.sturm_sequence(f)
    top = P.cauchy_bound(f)
    pending = [(Fraction(1), top)]
    found = []
    while pending:
        a, b = pending.pop()
        n = P.count_roots(seq, a, b)  # roots in (a, b]
        if n == 0:
            continue
        if n == 1 and a > 1 and P.count_roots_closed(f, a, b, seq) == 1:
            while b - a > _ISOLATION_WIDTH:
                mid = (a + b) / 2
                if P.count_roots_closed(f, a, mid, seq) == 1:
                    b = mid
                else:
                    a = mid
            found.append((a, b))
            continue
        mid = (a + b) / 2
        pending.append((a, mid))
        pending.append((mid, b))
    found.sort()
    return found


def isolate_roots_above_one(poly: Iterable) -> list[NumberField]:
    """One NumberField per distinct real root theta > 1 of a monic polynomial.

    The modulus of each field is the irreducible factor of ``poly`` that
    vanishes at theta, so that coefficient-vector equality is value equality.
    """
    f = P.make(poly)
    if len(f) < 2 or f[-1] != 1:
        raise ValueError("polynomial must be monic of degree >= 1")
    fields = []
    for fac in _irreducible_factors(P.squarefree(f)):
        for lo, hi in _isolate_above_one(fac):
            fields.append(NumberField(fac, lo, hi))
    if not fields:
        raise NoRootAboveOne(f"{P.to_str(f)} has no real root above 1")
    fields.sort(key=_SortKey)
    return fields


class _SortKey:
    __slots__ = ("g",)

    def __init__(self, field: NumberField):
        self.g = field.gen

    def __lt__(self, other):
        return compare(self.g, other.g) < 0


def quadratic_family_field(p: int, q: int) -> NumberField:
    """Field of the root of x^2 - q x - p in (q, q+1), for naturals 1 <= p <= q."""
    if not (isinstance(p, int) and isinstance(q, int)) or p < 1 or p > q:
        raise InvalidFamily(f"need naturals 1 <= p <= q, got p={p}, q={q}")
    m = P.make([-p, -q, 1])
    lo, hi = Fraction(q), Fraction(q + 1)
    # m(q) = -p < 0 < q + 1 - p = m(q+1); shrink until strictly inside (q, q+1)
    while lo == q or hi == q + 1:
        mid = (lo + hi) / 2
        if P.evaluate(m, mid) < 0:
            lo = mid
        else:
            hi = mid
    return NumberField(m, lo, hi)
