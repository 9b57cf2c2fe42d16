"""Exact scalar arithmetic: Q, Q(zeta_8), Q(sqrt(d)), Q(x), and quadratic extensions.

All classes are immutable and hashable, coerce ``int`` and ``Fraction``
operands on either side, and raise ``ZeroDivisionError`` (or the more
specific ``ZeroDivisorError``) on bad divisions instead of returning junk.
"""

from __future__ import annotations

import math
from fractions import Fraction


class ZeroDivisorError(ZeroDivisionError):
    """Inversion of a nonzero zero divisor in a quotient ring."""


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return None


def _inv_scalar(c):
    """Multiplicative inverse of a nonzero scalar of any supported type."""
    if isinstance(c, int):
        return Fraction(1, c)
    return 1 / c


# ---------------------------------------------------------------------------
# Q(zeta_8)


class Zeta8:
    """Element of Q(zeta) with zeta a primitive 8th root of unity.

    Stored on the power basis 1, zeta, zeta^2, zeta^3 with zeta^4 = -1,
    so equality is plain coefficient comparison.  i = zeta^2 and
    sqrt(2) = zeta - zeta^3.
    """

    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        object.__setattr__(self, "c",
                           (Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3)))

    def __setattr__(self, *a):
        raise AttributeError("Zeta8 is immutable")

    @staticmethod
    def coerce(x):
        if isinstance(x, Zeta8):
            return x
        f = _as_fraction(x)
        if f is not None:
            return Zeta8(f)
        return None

    # -- ring structure

    def __add__(self, other):
        o = Zeta8.coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        return Zeta8(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])

    __radd__ = __add__

    def __neg__(self):
        a = self.c
        return Zeta8(-a[0], -a[1], -a[2], -a[3])

    def __sub__(self, other):
        o = Zeta8.coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = Zeta8.coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = Zeta8.coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        # convolution with zeta^4 = -1 folding degrees 4..6 back with a sign
        out = [Fraction(0)] * 4
        for i in range(4):
            ai = a[i]
            if not ai:
                continue
            for j in range(4):
                bj = b[j]
                if not bj:
                    continue
                k = i + j
                if k < 4:
                    out[k] += ai * bj
                else:
                    out[k - 4] -= ai * bj
        return Zeta8(*out)

    __rmul__ = __mul__

    def galois(self, k):
        """Apply zeta -> zeta^k for odd k (the Galois action)."""
        if k % 2 == 0:
            raise ValueError("Galois exponent must be odd")
        out = [Fraction(0)] * 4
        for i, ci in enumerate(self.c):
            if not ci:
                continue
            e = (i * k) % 8
            if e < 4:
                out[e] += ci
            else:
                out[e - 4] -= ci
        return Zeta8(*out)

    def conjugate(self):
        """Complex conjugation zeta -> zeta^-1 = zeta^7."""
        return self.galois(7)

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_8)")
        # product of the three nontrivial Galois conjugates; x * cof is rational
        cof = self.galois(3) * self.galois(5) * self.galois(7)
        norm = (self * cof).c[0]
        return Zeta8(cof.c[0] / norm, cof.c[1] / norm, cof.c[2] / norm, cof.c[3] / norm)

    def __truediv__(self, other):
        o = Zeta8.coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = Zeta8.coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Zeta8(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- predicates and conversions

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        o = Zeta8.coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(("Zeta8", self.c))

    def is_rational(self):
        return not any(self.c[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.c[0]

    def to_complex(self):
        z = complex(math.cos(math.pi / 4), math.sin(math.pi / 4))
        return complex(self.c[0]) + complex(self.c[1]) * z \
            + complex(self.c[2]) * z * z + complex(self.c[3]) * z ** 3

    def __repr__(self):
        names = ["", "z", "z^2", "z^3"]
        parts = []
        for ci, n in zip(self.c, names):
            if not ci:
                continue
            if n and ci == 1:
                parts.append(n)
            elif n and ci == -1:
                parts.append(f"-{n}")
            else:
                parts.append(f"{ci}{'*' + n if n else ''}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def serialize(self):
        return [str(ci) for ci in self.c]


ZETA = Zeta8(0, 1)
I = Zeta8(0, 0, 1)
SQRT2 = Zeta8(0, 1, 0, -1)


# ---------------------------------------------------------------------------
# Q(sqrt(d))


class QuadExt:
    """a + b*sqrt(d) for a fixed positive integer radicand d."""

    __slots__ = ("d", "a", "b")

    def __init__(self, d, a=0, b=0):
        if not (isinstance(d, int) and d > 0):
            raise ValueError("radicand must be a positive integer")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, *a):
        raise AttributeError("QuadExt is immutable")

    def _coerce(self, x):
        if isinstance(x, QuadExt):
            if x.d != self.d:
                raise ValueError(f"mixed radicands {self.d} and {x.d}")
            return x
        f = _as_fraction(x)
        if f is not None:
            return QuadExt(self.d, f)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.d, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(self.d, -self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.d, self.a * o.a + self.d * self.b * o.b,
                       self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self):
        n = self.a * self.a - self.d * self.b * self.b
        if n == 0:
            if self:
                raise ZeroDivisorError(
                    f"{self!r} is a zero divisor (d = {self.d} is a square)")
            raise ZeroDivisionError("inverse of zero in Q(sqrt(d))")
        return QuadExt(self.d, self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = QuadExt(self.d, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash(("QuadExt", self.d, self.a, self.b))

    def to_float(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __repr__(self):
        if not self.b:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.d})"


# ---------------------------------------------------------------------------
# univariate polynomials over any exact field (or ring)


class Poly:
    """Dense univariate polynomial; coefficient type is whatever you feed it.

    ``coeffs[k]`` is the coefficient of x^k; trailing zeros are stripped, the
    zero polynomial has degree -1.  Division is exact division and raises if
    the quotient does not exist over the coefficient ring.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def x(power=1):
        return Poly([0] * power + [1])

    @staticmethod
    def const(c):
        return Poly([c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k <= self.degree else 0

    def _coerce(self, x):
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction, Zeta8, QuadExt, SqrtExt)):
            return Poly([x])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly([self[k] + o[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self or not o:
            return Poly()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if not b:
                    continue
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Poly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).degree < 0

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def divmod(self, other):
        """Polynomial division; requires the divisor's leading coefficient
        to be invertible (true over a field)."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        lead = other.coeffs[-1]
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quo = [0] * (dq + 1)
        inv_lead = _inv_scalar(lead)
        for k in range(dq, -1, -1):
            top = rem[k + other.degree]
            if not top:
                continue
            c = top * inv_lead
            quo[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
        return Poly(quo), Poly(rem)

    def __truediv__(self, other):
        """Exact division (by a polynomial or scalar); raises on remainder."""
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        q, r = self.divmod(o)
        if r:
            raise ValueError("inexact polynomial division")
        return q

    def gcd(self, other):
        """Monic gcd via Euclid; coefficient type must support division."""
        a, b = self, other
        while b:
            a, b = b, a.divmod(b)[1]
        if not a:
            return a
        return a * _inv_scalar(a.coeffs[-1])

    def derivative(self):
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def eval(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other):
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * other + Poly([c])
        return acc

    def map_coefficients(self, fn):
        return Poly([fn(c) for c in self.coeffs])

    def __repr__(self):
        if not self:
            return "Poly(0)"
        parts = [f"({c})*x^{k}" for k, c in enumerate(self.coeffs) if c]
        return "Poly(" + " + ".join(parts) + ")"


# ---------------------------------------------------------------------------
# rational functions


class RatFunc:
    """Quotient of two univariate polynomials, kept reduced with monic
    denominator.  Coefficients must form a field."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if den is None:
            den = Poly([1])
        elif not isinstance(den, Poly):
            den = Poly.const(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        g = num.gcd(den)
        if g and g.degree > 0:
            num, den = num / g, den / g
        lead = den.coeffs[-1]
        if lead != 1:
            inv = _inv_scalar(lead)
            num, den = num * inv, den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def t():
        return RatFunc(Poly.x())

    def _coerce(self, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            return RatFunc(x)
        f = _as_fraction(x)
        if f is not None:
            return RatFunc(Poly.const(f))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = RatFunc(Poly([1]))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash(("RatFunc", self.num, self.den))

    def eval(self, x):
        d = self.den.eval(x)
        if not d:
            raise ZeroDivisionError("pole of rational function")
        return self.num.eval(x) / d

    def __repr__(self):
        if self.den == Poly([1]):
            return repr(self.num)
        return f"({self.num!r}) / ({self.den!r})"


# ---------------------------------------------------------------------------
# quadratic quotient extensions base[s]/(s^2 - r)


class SqrtExt:
    """a + b*s with s^2 = r, over any exact base ring.

    Over a field base this is a field whenever r is a non-square; the class
    does not check that up front but detects zero divisors lazily when
    inverting, as they arise.  Over a ring base (e.g. Poly) division is
    exact division.
    """

    __slots__ = ("a", "b", "r")

    def __init__(self, a, b, r):
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "r", r)

    def __setattr__(self, *a):
        raise AttributeError("SqrtExt is immutable")

    @staticmethod
    def gen(r):
        """The adjoined square root s with s^2 = r."""
        zero = r - r
        return SqrtExt(zero, zero + 1, r)

    def _coerce(self, x):
        if isinstance(x, SqrtExt):
            if x.r != self.r:
                raise ValueError("mixed quadratic extensions")
            return x
        try:
            zero = self.r - self.r
            return SqrtExt(zero + x, zero, self.r)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return SqrtExt(self.a + o.a, self.b + o.b, self.r)

    __radd__ = __add__

    def __neg__(self):
        return SqrtExt(-self.a, -self.b, self.r)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return SqrtExt(self.a * o.a + self.r * (self.b * o.b),
                       self.a * o.b + self.b * o.a, self.r)

    __rmul__ = __mul__

    def conjugate(self):
        return SqrtExt(self.a, -self.b, self.r)

    def norm(self):
        return self.a * self.a - self.r * (self.b * self.b)

    def inverse(self):
        n = self.norm()
        if not n:
            if self:
                raise ZeroDivisorError(
                    f"{self!r} is a zero divisor: its norm vanishes, "
                    "so s^2 - r is reducible here")
            raise ZeroDivisionError("inverse of zero in quadratic extension")
        return SqrtExt(self.a / n, -self.b / n, self.r)

    def __truediv__(self, other):
        """Division; exact over ring bases (conjugate trick + exact base
        division), honest field division over field bases."""
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if not n:
            if o:
                raise ZeroDivisorError(f"{o!r} is a zero divisor")
            raise ZeroDivisionError("division by zero in quadratic extension")
        num = self * o.conjugate()
        return SqrtExt(num.a / n, num.b / n, self.r)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self._coerce(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash(("SqrtExt", self.a, self.b))

    def __repr__(self):
        return f"({self.a!r}) + ({self.b!r})*s"


# ---------------------------------------------------------------------------
# serialization helpers


def serialize_scalar(x):
    """JSON-encodable form: rationals as 'p/q' strings, Zeta8 as 4-arrays."""
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Zeta8):
        return x.serialize()
    if isinstance(x, QuadExt):
        return {"d": x.d, "a": str(x.a), "b": str(x.b)}
    raise TypeError(f"cannot serialize {type(x).__name__}")


def parse_scalar(text):
    """Inverse of serialize_scalar for CLI input: 'p/q' or 'c0,c1,c2,c3'."""
    text = text.strip()
    if "," in text:
        parts = [Fraction(p) for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError("Zeta8 literal needs 4 comma-separated rationals")
        return Zeta8(*parts)
    return Fraction(text)
