"""Sparse homogeneous polynomials in a fixed number of variables.

Terms live in a dict mapping exponent vectors to nonzero coefficients; every
stored monomial has the same total degree.  Coefficients can be ints,
Fractions, Zeta8, QuadExt or SqrtExt elements, mixed freely as long as the
scalar types coerce one another.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import Poly, _inv_scalar, serialize_scalar


class HomogPoly:
    """Homogeneous polynomial; the zero polynomial has degree None."""

    __slots__ = ("nvars", "degree", "terms")

    def __init__(self, nvars, terms=None, degree=None):
        cleaned = {}
        deg = degree
        for exps, c in (terms or {}).items():
            if not c:
                continue
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has wrong length")
            d = sum(exps)
            if deg is None:
                deg = d
            elif d != deg:
                raise ValueError(f"mixed total degrees {deg} and {d}")
            cleaned[exps] = cleaned.get(exps, 0) + c
        cleaned = {e: c for e, c in cleaned.items() if c}
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "degree", deg if cleaned else degree)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, *a):
        raise AttributeError("HomogPoly is immutable")

    @staticmethod
    def zero(nvars, degree=None):
        return HomogPoly(nvars, {}, degree)

    @staticmethod
    def monomial(nvars, exps, coeff=1):
        return HomogPoly(nvars, {tuple(exps): coeff})

    @staticmethod
    def variable(nvars, i):
        e = [0] * nvars
        e[i] = 1
        return HomogPoly(nvars, {tuple(e): 1})

    @staticmethod
    def linear_form(coeffs):
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return HomogPoly(n, terms, degree=1)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check_compatible(self, other):
        if self.nvars != other.nvars:
            raise ValueError("mixed variable counts")
        if self.terms and other.terms and self.degree != other.degree:
            raise ValueError(
                f"cannot add degree {self.degree} and degree {other.degree}")

    def __add__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        deg = self.degree if self.terms else other.degree
        return HomogPoly(self.nvars, terms, deg)

    def __neg__(self):
        return HomogPoly(self.nvars, {e: -c for e, c in self.terms.items()},
                         self.degree)

    def __sub__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HomogPoly):
            if self.nvars != other.nvars:
                raise ValueError("mixed variable counts")
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    out[e] = out.get(e, 0) + c1 * c2
            deg = None
            if self.terms and other.terms:
                deg = self.degree + other.degree
            return HomogPoly(self.nvars, out, deg)
        # scalar multiple
        return HomogPoly(self.nvars,
                         {e: c * other for e, c in self.terms.items()},
                         self.degree)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = HomogPoly(self.nvars, {tuple([0] * self.nvars): 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        if self.nvars != other.nvars:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[e] == other.terms[e] for e in self.terms)

    def __hash__(self):
        return hash(("HomogPoly", self.nvars, frozenset(self.terms.items())))

    # -- evaluation and substitution

    def eval(self, point):
        """Exact evaluation at a point (sequence of scalars)."""
        if len(point) != self.nvars:
            raise ValueError(
                f"point has {len(point)} coordinates, expected {self.nvars}")
        total = 0
        for exps, c in self.terms.items():
            m = c
            for x, e in zip(point, exps):
                for _ in range(e):
                    m = m * x
            total = m + total
        return total

    def substitute(self, images):
        """Substitute images[i] for variable i; images are homogeneous
        polynomials of one common degree in a common variable set."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        nv = images[0].nvars
        degs = {im.degree for im in images if im.terms}
        if len(degs) > 1:
            raise ValueError(f"images have mixed degrees {sorted(degs)}")
        img_deg = degs.pop() if degs else 1
        out_deg = None if self.degree is None else self.degree * img_deg
        acc = HomogPoly.zero(nv, out_deg)
        for exps, c in self.terms.items():
            m = HomogPoly(nv, {tuple([0] * nv): c})
            for im, e in zip(images, exps):
                if e:
                    if im.nvars != nv:
                        raise ValueError("images live in different rings")
                    m = m * im ** e
            if m.terms and m.degree != out_deg:
                # a zero image killed the monomial's degree bookkeeping
                raise AssertionError("inhomogeneous substitution result")
            acc = acc + m
        return acc

    def map_coefficients(self, fn):
        return HomogPoly(self.nvars, {e: fn(c) for e, c in self.terms.items()},
                         self.degree)

    def partial(self, i):
        """Partial derivative with respect to variable i."""
        out = {}
        for exps, c in self.terms.items():
            if exps[i] == 0:
                continue
            e = list(exps)
            e[i] -= 1
            out[tuple(e)] = c * exps[i]
        deg = None if self.degree in (None, 0) else self.degree - 1
        return HomogPoly(self.nvars, out, deg)

    # -- binary-form helpers (nvars == 2)

    def _require_binary(self):
        if self.nvars != 2:
            raise ValueError("operation needs a binary form")

    def min_y_power(self):
        self._require_binary()
        return min((e[1] for e in self.terms), default=0)

    def dehomogenize(self):
        """p(x, 1) as a univariate Poly in x."""
        self._require_binary()
        if not self.terms:
            return Poly()
        coeffs = [0] * (self.degree + 1)
        for (ex, _ey), c in self.terms.items():
            coeffs[ex] = coeffs[ex] + c
        return Poly(coeffs)

    @staticmethod
    def rehomogenize(poly, degree=None, pad_with_y=True):
        """Univariate p(x) back to a binary form of the given total degree."""
        if degree is None:
            degree = poly.degree
        terms = {}
        for k, c in enumerate(poly.coeffs):
            if c:
                terms[(k, degree - k)] = c
        return HomogPoly(2, terms, degree)

    def gcd(self, other):
        """Monic gcd of two binary forms over a field.

        Powers of y are handled separately (they vanish at y = 1), the rest
        goes through the univariate Euclid at y = 1; the result is monic
        after dehomogenization.
        """
        self._require_binary()
        other._require_binary()
        if not self.terms:
            return other.monic() if other.terms else other
        if not other.terms:
            return self.monic()
        ya, yb = self.min_y_power(), other.min_y_power()
        g = self.dehomogenize().gcd(other.dehomogenize())
        yk = min(ya, yb)
        out = HomogPoly.rehomogenize(g, g.degree + yk)
        return out

    def monic(self):
        """Scale so the dehomogenization at y = 1 is monic (binary forms)."""
        self._require_binary()
        if not self.terms:
            return self
        d = self.dehomogenize()
        if not d:
            # pure power of y: normalize the y-coefficient instead
            lead = self.terms[(0, self.degree)]
            return self * _inv_scalar(lead)
        return self * _inv_scalar(d.coeffs[-1])

    def divides(self, other):
        """Exact divisibility test for binary forms; returns the quotient
        or None."""
        self._require_binary()
        if not self.terms:
            return None
        ys, yo = self.min_y_power(), other.min_y_power()
        if ys > yo:
            return None
        q, r = other.dehomogenize().divmod(self.dehomogenize())
        if r:
            return None
        qdeg = other.degree - self.degree
        return HomogPoly.rehomogenize(q, qdeg)

    def serialize(self):
        return [[list(e), serialize_scalar(c)] for e, c in sorted(self.terms.items())]

    def __repr__(self):
        if not self.terms:
            return f"HomogPoly({self.nvars}, 0)"
        bits = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i + 1}^{k}" if k > 1 else f"x{i + 1}"
                            for i, k in enumerate(e) if k)
            bits.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(bits)
