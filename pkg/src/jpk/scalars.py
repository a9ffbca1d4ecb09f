"""Exact scalars: rationals and the rational-function field Q(d).

``BigRat`` is ``gmpy2.mpq``.  ``DPoly`` is a univariate polynomial in the
Jack parameter ``d`` with rational coefficients, and ``DRat`` a reduced
quotient of two of them.  Every ``DRat`` is kept in a canonical form
(reduced, denominator primitive over Z with positive leading coefficient),
so equality is structural.

Two coefficient fields are exposed for the rest of the package:
``SymbolicField`` (elements are ``DRat``) and ``SpecializedField`` (``d``
replaced by a fixed nonzero rational, elements are ``mpq``).
"""
from __future__ import annotations

from functools import reduce
from math import gcd, lcm

from gmpy2 import mpq

BigRat = mpq

_ZERO = mpq(0)
_ONE = mpq(1)


class DivisionByZero(ZeroDivisionError):
    pass


class PoleAtSpecialization(ArithmeticError):
    pass


class SpecializationZeroD(ValueError):
    pass


def parse_rat(text) -> mpq:
    """Parse ``"p/q"``, ``"p"`` or an int into an mpq."""
    if isinstance(text, str):
        text = text.strip()
        if "/" in text:
            p, q = text.split("/", 1)
            q = int(q)
            if q == 0:
                raise DivisionByZero(f"zero denominator in {text!r}")
            return mpq(int(p), q)
        return mpq(int(text))
    return mpq(text)


def rat_str(x) -> str:
    x = mpq(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# DPoly
# ---------------------------------------------------------------------------


def _strip(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


class DPoly:
    """Polynomial in d, coefficients ascending, trailing zeros stripped."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        self.c = _strip([mpq(x) for x in coeffs])

    @classmethod
    def _raw(cls, c):
        p = object.__new__(cls)
        p.c = c
        return p

    @classmethod
    def const(cls, x):
        x = mpq(x)
        return cls._raw((x,) if x else ())

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    @property
    def lc(self):
        return self.c[-1] if self.c else _ZERO

    def is_zero(self) -> bool:
        return not self.c

    def is_one(self) -> bool:
        return len(self.c) == 1 and self.c[0] == 1

    def is_const(self) -> bool:
        return len(self.c) <= 1

    def __eq__(self, other):
        return isinstance(other, DPoly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"DPoly({[rat_str(x) for x in self.c]})"

    def __neg__(self):
        return DPoly._raw(tuple(-x for x in self.c))

    def __add__(self, other):
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return DPoly._raw(_strip(out))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.c, other.c
        if not a or not b:
            return DPoly._raw(())
        if len(a) == 1:
            s = a[0]
            return DPoly._raw(tuple(s * x for x in b))
        if len(b) == 1:
            s = b[0]
            return DPoly._raw(tuple(s * x for x in a))
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return DPoly._raw(tuple(out))

    def scale(self, s):
        s = mpq(s)
        if not s:
            return DPoly._raw(())
        return DPoly._raw(tuple(s * x for x in self.c))

    def divmod(self, other):
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        b = other.c
        rem = list(self.c)
        db = len(b) - 1
        if len(rem) - 1 < db:
            return DPoly._raw(()), self
        inv = 1 / b[-1]
        q = [_ZERO] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            t = rem[k] * inv
            if t:
                q[k - db] = t
                for j in range(db + 1):
                    rem[k - db + j] -= t * b[j]
        return DPoly._raw(_strip(q)), DPoly._raw(_strip(rem[:db]))

    def exact_quo(self, other):
        q, rem = self.divmod(other)
        assert rem.is_zero(), "inexact polynomial quotient"
        return q

    def monic(self):
        if not self.c:
            return self
        return self.scale(1 / self.c[-1])

    def __call__(self, x):
        acc = _ZERO
        for coef in reversed(self.c):
            acc = acc * x + coef
        return acc

    def content_scale(self):
        """Factor s with s*self primitive in Z[d] and positive leading coefficient."""
        L = reduce(lcm, (x.denominator for x in self.c), 1)
        G = reduce(gcd, (int(x * L) for x in self.c), 0)
        s = mpq(L, G)
        return -s if self.c[-1] < 0 else s


def dpoly_gcd(f: DPoly, g: DPoly) -> DPoly:
    """Monic gcd over Q by the Euclidean algorithm on monic remainders."""
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.is_const() or g.is_const():
        return ONE_POLY
    a, b = f.monic(), g.monic()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        _, rem = a.divmod(b)
        a, b = b, rem.monic()
    return a


ONE_POLY = DPoly._raw((_ONE,))
ZERO_POLY = DPoly._raw(())
D_POLY = DPoly._raw((_ZERO, _ONE))


# ---------------------------------------------------------------------------
# DRat
# ---------------------------------------------------------------------------


class DRat:
    """Element of Q(d) in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num=ZERO_POLY, den=ONE_POLY):
        if not isinstance(num, DPoly):
            num = DPoly.const(num)
        if not isinstance(den, DPoly):
            den = DPoly.const(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        self.num, self.den = _canon(num, den)

    @classmethod
    def _raw(cls, num, den):
        x = object.__new__(cls)
        x.num = num
        x.den = den
        return x

    @classmethod
    def var(cls):
        return cls._raw(D_POLY, ONE_POLY)

    @classmethod
    def const(cls, x):
        return cls._raw(DPoly.const(x), ONE_POLY)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, DRat):
            return x
        if isinstance(x, (int, type(_ONE))):
            return cls._raw(DPoly.const(x), ONE_POLY)
        if isinstance(x, str):
            return cls.const(parse_rat(x))
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.num.c

    def __bool__(self):
        return bool(self.num.c)

    def is_const(self) -> bool:
        return self.den.is_one() and self.num.is_const()

    def const_value(self):
        if not self.is_const():
            raise ValueError(f"{self} is not a constant")
        return self.num.c[0] if self.num.c else _ZERO

    def __eq__(self, other):
        o = DRat.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num.c == o.num.c and self.den.c == o.den.c

    def __hash__(self):
        if self.den.is_one() and self.num.is_const():
            return hash(self.num.c[0] if self.num.c else _ZERO)
        return hash((self.num.c, self.den.c))

    def __neg__(self):
        return DRat._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = DRat.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not o.num.c:
            return self
        if not self.num.c:
            return o
        b1, b2 = self.den, o.den
        if b1.is_one() and b2.is_one():
            return DRat._raw(self.num + o.num, ONE_POLY)
        if b1 == b2:
            return _make(self.num + o.num, b1)
        g = dpoly_gcd(b1, b2)
        if g.is_one():
            return _make(self.num * b2 + o.num * b1, b1 * b2, reduced=True)
        c1 = b1.exact_quo(g)
        c2 = b2.exact_quo(g)
        return _make(self.num * c2 + o.num * c1, c1 * b2)

    __radd__ = __add__

    def __sub__(self, other):
        o = DRat.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = DRat.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = DRat.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not self.num.c or not o.num.c:
            return ZERO
        a1, b1, a2, b2 = self.num, self.den, o.num, o.den
        if b1.is_one() and b2.is_one():
            return DRat._raw(a1 * a2, ONE_POLY)
        g1 = dpoly_gcd(a1, b2)
        g2 = dpoly_gcd(a2, b1)
        if not g1.is_one():
            a1 = a1.exact_quo(g1)
            b2 = b2.exact_quo(g1)
        if not g2.is_one():
            a2 = a2.exact_quo(g2)
            b1 = b1.exact_quo(g2)
        return _make(a1 * a2, b1 * b2, reduced=True)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.c:
            raise DivisionByZero("inverse of zero in Q(d)")
        return _make(self.den, self.num, reduced=True)

    def __truediv__(self, other):
        o = DRat.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = DRat.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __repr__(self):
        return f"DRat({format_drat(self)})"

    def __str__(self):
        return format_drat(self)

    def canonical(self):
        """Re-run normalization; identity on canonical values."""
        return DRat(self.num, self.den)


def _canon(num: DPoly, den: DPoly):
    if num.is_zero():
        return ZERO_POLY, ONE_POLY
    g = dpoly_gcd(num, den)
    if not g.is_one():
        num = num.exact_quo(g)
        den = den.exact_quo(g)
    return _normalize_scale(num, den)


def _normalize_scale(num, den):
    s = den.content_scale()
    if s != 1:
        num = num.scale(s)
        den = den.scale(s)
    return num, den


def _make(num, den, reduced=False):
    if num.is_zero():
        return ZERO
    if reduced:
        return DRat._raw(*_normalize_scale(num, den))
    return DRat._raw(*_canon(num, den))


ZERO = DRat._raw(ZERO_POLY, ONE_POLY)
ONE = DRat._raw(ONE_POLY, ONE_POLY)


def drat_eval(a, d0) -> mpq:
    """Substitute d = d0 (a rational) into a."""
    d0 = mpq(d0)
    if d0 == 0:
        raise SpecializationZeroD("the Jack parameter must be nonzero")
    if not isinstance(a, DRat):
        return mpq(a)
    den = a.den(d0)
    if den == 0:
        raise PoleAtSpecialization(f"{a} has a pole at d={rat_str(d0)}")
    return a.num(d0) / den


# ---------------------------------------------------------------------------
# Formatting / serialization
# ---------------------------------------------------------------------------


def format_dpoly(p: DPoly, var="d") -> str:
    """Compact rendering, descending powers: '2d^2-d+1/2'."""
    if p.is_zero():
        return "0"
    out = ""
    for k in range(len(p.c) - 1, -1, -1):
        x = p.c[k]
        if not x:
            continue
        ax = abs(x)
        if k == 0:
            body = rat_str(ax)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if ax == 1:
                body = mono
            elif ax.denominator == 1:
                body = f"{ax}{mono}"
            else:
                lead = "" if ax.numerator == 1 else str(ax.numerator)
                body = f"{lead}{mono}/{ax.denominator}"
        if x < 0:
            out += "-" + body
        else:
            out += ("+" if out else "") + body
    return out


def _atomic(s):
    return not any(ch in s for ch in "+-/*")


def format_drat(a) -> str:
    if not isinstance(a, DRat):
        return rat_str(a)
    if a.den.is_one():
        return format_dpoly(a.num)
    num, den = _integer_parts(a)
    n, dn = format_dpoly(num), format_dpoly(den)
    n = n if _atomic(n) else f"({n})"
    dn = dn if _atomic(dn) else f"({dn})"
    return f"{n}/{dn}"


def coeff_parts(a):
    """(negative, text) with text parenthesized unless it is a single factor."""
    s = format_drat(a)
    neg = s.startswith("-") and not any(ch in s[1:] for ch in "+-")
    if neg:
        s = s[1:]
    return neg, (s if _atomic(s) else f"({s})")


def _integer_parts(a: DRat):
    """Scale num and den to integer coefficients (same scale on both)."""
    L = reduce(lcm, (x.denominator for x in a.num.c + a.den.c), 1)
    return a.num.scale(L), a.den.scale(L)


def _latex_poly(p: DPoly) -> str:
    return format_dpoly(p).replace("*", "")


def latex_drat(a) -> str:
    """LaTeX rendering with integer-coefficient numerator and denominator."""
    if not isinstance(a, DRat):
        a = DRat.const(a)
    num, den = _integer_parts(a)
    n = _latex_poly(num)
    if den.is_one():
        return n
    if num.c and len([x for x in num.c if x]) == 1 and num.lc < 0:
        return "-\\frac{" + _latex_poly(-num) + "}{" + _latex_poly(den) + "}"
    return "\\frac{" + n + "}{" + _latex_poly(den) + "}"


def drat_to_json(a) -> dict:
    if not isinstance(a, DRat):
        a = DRat.const(a)
    return {
        "num": [rat_str(x) for x in a.num.c] or ["0"],
        "den": [rat_str(x) for x in a.den.c],
    }


def drat_from_json(obj) -> DRat:
    return DRat(DPoly([parse_rat(x) for x in obj["num"]]), DPoly([parse_rat(x) for x in obj["den"]]))


# ---------------------------------------------------------------------------
# Coefficient fields
# ---------------------------------------------------------------------------


class SymbolicField:
    """Q(d) with d an indeterminate."""

    symbolic = True
    key = "symbolic"

    def __init__(self):
        self.d = DRat.var()
        self.zero = ZERO
        self.one = ONE

    def __call__(self, x):
        if isinstance(x, DRat):
            return x
        return DRat.const(parse_rat(x) if isinstance(x, str) else x)

    def to_json(self, a):
        return drat_to_json(a)

    def from_json(self, obj):
        return drat_from_json(obj)

    def __repr__(self):
        return "SymbolicField()"

    def __eq__(self, other):
        return isinstance(other, SymbolicField)

    def __hash__(self):
        return hash(self.key)


class SpecializedField:
    """Q with the Jack parameter fixed to a nonzero rational d0."""

    symbolic = False

    def __init__(self, d0):
        d0 = parse_rat(d0) if isinstance(d0, str) else mpq(d0)
        if d0 == 0:
            raise SpecializationZeroD("the Jack parameter must be nonzero")
        self.d0 = d0
        self.d = d0
        self.zero = _ZERO
        self.one = _ONE
        self.key = f"d={rat_str(d0)}"

    def __call__(self, x):
        if isinstance(x, DRat):
            return drat_eval(x, self.d0)
        return parse_rat(x) if isinstance(x, str) else mpq(x)

    def to_json(self, a):
        return drat_to_json(a)

    def from_json(self, obj):
        return drat_eval(drat_from_json(obj), self.d0)

    def __repr__(self):
        return f"SpecializedField({rat_str(self.d0)})"

    def __eq__(self, other):
        return isinstance(other, SpecializedField) and other.d0 == self.d0

    def __hash__(self):
        return hash(self.key)


SYMBOLIC = SymbolicField()


def field_from_literal(text: str):
    if text is None or text == "symbolic":
        return SYMBOLIC
    return SpecializedField(parse_rat(text))


def is_zero(x) -> bool:
    return not x
