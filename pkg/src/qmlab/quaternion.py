"""Rational quaternion algebras (a,b)_Q and the orders Z[phi_j, psi_j].

Hilbert symbols at all places, ramified primes and the discriminant, the
skew-field test, reduced discriminants of orders via the trace form, and
the maximality table for the matrix-model orders attached to abelian
surfaces with an order-3 or order-4 automorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from sympy import factorint

from .matrices import Mat
from .symplectic import automorphism_matrix, psi_matrix


# ---------------------------------------------------------------------------
# Hilbert symbols


def _val_unit(x, p):
    """x = p^v * u with u a p-unit; returns (v, u) for a nonzero Fraction."""
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v, Fraction(num, den)


def _legendre_unit(u, p):
    """Legendre symbol of a p-unit (given as a Fraction) modulo an odd
    prime."""
    a = (u.numerator * pow(u.denominator, -1, p)) % p
    s = pow(a, (p - 1) // 2, p)
    return 1 if s == 1 else -1


def _is_prime(p):
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def hilbert_symbol(a, b, p):
    """The Hilbert symbol (a, b)_p in {+1, -1}; p a prime or the string
    'inf' / float('inf') for the real place."""
    a, b = Fraction(a), Fraction(b)
    if not a or not b:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    if p in ("inf", float("inf")):
        return -1 if (a < 0 and b < 0) else 1
    if not (isinstance(p, int) and _is_prime(p)):
        raise ValueError(f"{p} is not a prime or 'inf'")
    alpha, u = _val_unit(a, p)
    beta, v = _val_unit(b, p)
    if p != 2:
        sign = -1 if (alpha * beta) % 2 and (p % 4 == 3) else 1
        if beta % 2:
            sign *= _legendre_unit(u, p)
        if alpha % 2:
            sign *= _legendre_unit(v, p)
        return sign
    # p = 2: epsilon(u) = (u-1)/2, omega(u) = (u^2-1)/8 on odd units
    u2 = (u.numerator * pow(u.denominator, -1, 8)) % 8
    v2 = (v.numerator * pow(v.denominator, -1, 8)) % 8
    eps_u, eps_v = ((u2 - 1) // 2) % 2, ((v2 - 1) // 2) % 2
    om_u, om_v = ((u2 * u2 - 1) // 8) % 2, ((v2 * v2 - 1) // 8) % 2
    expo = eps_u * eps_v + alpha * om_v + beta * om_u
    return -1 if expo % 2 else 1


def _candidate_primes(a, b):
    primes = {2}
    for x in (a, b):
        for v in (x.numerator, x.denominator):
            primes.update(factorint(abs(v)).keys())
    primes.discard(1)
    return sorted(primes)


@dataclass(frozen=True)
class QuatAlg:
    """The quaternion algebra (a, b)_Q with i^2 = a, j^2 = b, ij = -ji."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if not self.a or not self.b:
            raise ValueError("(a,b)_Q needs nonzero a, b")

    def ramified_primes(self):
        return [p for p in _candidate_primes(self.a, self.b)
                if hilbert_symbol(self.a, self.b, p) == -1]

    def ramified_at_infinity(self):
        return hilbert_symbol(self.a, self.b, "inf") == -1

    def discriminant(self):
        """Product of the finite ramified primes."""
        out = 1
        for p in self.ramified_primes():
            out *= p
        return out

    def is_division(self):
        return self.discriminant() > 1 or self.ramified_at_infinity()

    def one(self):
        return QuatElt(self, 1, 0, 0, 0)

    def element(self, w, x, y, z):
        return QuatElt(self, Fraction(w), Fraction(x), Fraction(y), Fraction(z))


@dataclass(frozen=True)
class QuatElt:
    """w + x i + y j + z ij in a fixed (a,b)_Q."""

    alg: QuatAlg
    w: Fraction
    x: Fraction
    y: Fraction
    z: Fraction

    def coords(self):
        return (self.w, self.x, self.y, self.z)

    def _coerce(self, other):
        if isinstance(other, QuatElt):
            if other.alg != self.alg:
                raise ValueError("mixed quaternion algebras")
            return other
        if isinstance(other, (int, Fraction)):
            return self.alg.element(other, 0, 0, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuatElt(self.alg, self.w + o.w, self.x + o.x,
                       self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __neg__(self):
        return QuatElt(self.alg, -self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.alg.a, self.alg.b
        w1, x1, y1, z1 = self.coords()
        w2, x2, y2, z2 = o.coords()
        return QuatElt(
            self.alg,
            w1 * w2 + a * x1 * x2 + b * y1 * y2 - a * b * z1 * z2,
            w1 * x2 + x1 * w2 - b * y1 * z2 + b * z1 * y2,
            w1 * y2 + y1 * w2 + a * x1 * z2 - a * z1 * x2,
            w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2,
        )

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self

    def conjugate(self):
        return QuatElt(self.alg, self.w, -self.x, -self.y, -self.z)

    def reduced_trace(self):
        return 2 * self.w

    def reduced_norm(self):
        a, b = self.alg.a, self.alg.b
        return (self.w ** 2 - a * self.x ** 2 - b * self.y ** 2
                + a * b * self.z ** 2)

    def __bool__(self):
        return any(self.coords())


class QuatOrder:
    """A rank-4 Z-order given by a basis inside (a,b)_Q."""

    def __init__(self, alg, basis):
        if len(basis) != 4:
            raise ValueError("an order needs a rank-4 basis")
        self.alg = alg
        self.basis = list(basis)
        self._validate()

    def _coordinates(self, elt):
        m = Mat([list(b.coords()) for b in self.basis]).transpose()
        return m.map(Fraction).solve(list(elt.coords()))

    def _validate(self):
        m = Mat([list(b.coords()) for b in self.basis]).map(Fraction)
        if m.rank() != 4:
            raise ValueError("basis is not Z-independent")
        one = self._coordinates(self.alg.one())
        if one is None or any(c.denominator != 1 for c in one):
            raise ValueError("order does not contain 1")
        for bi in self.basis:
            for bj in self.basis:
                c = self._coordinates(bi * bj)
                if c is None or any(x.denominator != 1 for x in c):
                    raise ValueError(
                        "basis is not multiplicatively closed over Z")

    def gram(self):
        return Mat([[ (bi * bj).reduced_trace() for bj in self.basis]
                    for bi in self.basis])

    def reduced_discriminant(self):
        """sqrt(|det trd(b_i b_j)|); an integer for any genuine order."""
        d = self.gram().map(Fraction).det()
        d = abs(d)
        if d.denominator != 1:
            raise ValueError("trace Gram determinant is not integral")
        n = d.numerator
        r = isqrt(n)
        if r * r != n:
            raise ValueError(f"|det| = {n} is not a perfect square")
        return r

    def is_maximal(self):
        return self.reduced_discriminant() == self.alg.discriminant()


def order_from_matrix_model(j, d):
    """The order Z[phi_j, psi_j] of Theorem-style surfaces inside (-j, d)_Q.

    For j = 4 the algebra generator is i := phi_4 itself (i^2 = -1, so the
    algebra tag is (-1, d)); for j = 3 it is i := 1 + 2 phi_3 with
    i^2 = -3.  In both cases j := psi_j with j^2 = d, and i, j
    anticommute, matching the matrix model exactly.
    """
    if j == 3:
        alg = QuatAlg(-3, d)
        phi = alg.element(Fraction(-1, 2), Fraction(1, 2), 0, 0)
    elif j == 4:
        alg = QuatAlg(-1, d)
        phi = alg.element(0, 1, 0, 0)
    else:
        raise ValueError(f"automorphism order must be 3 or 4, got {j}")
    psi = alg.element(0, 0, 1, 0)
    basis = [alg.one(), phi, psi, phi * psi]
    order = QuatOrder(alg, basis)
    _check_against_matrices(order, j, d, phi, psi)
    return order


def _check_against_matrices(order, j, d, phi, psi):
    """The abstract basis must multiply exactly like the 4x4 matrix model."""
    mj = automorphism_matrix(j)
    mpsi = psi_matrix(j, d)
    ident = Mat.identity(4).map(Fraction)
    if j == 3:
        mi = ident + mj.map(Fraction).scale(2)
    else:
        mi = mj.map(Fraction)
    mjmat = mpsi.map(Fraction)

    def rho(e):
        out = ident.scale(e.w) + mi.scale(e.x) + mjmat.scale(e.y) \
            + (mi @ mjmat).scale(e.z)
        return out

    for b1 in order.basis:
        for b2 in order.basis:
            if rho(b1 * b2) != rho(b1) @ rho(b2):
                raise AssertionError(
                    "order structure constants disagree with matrix model")


def paper_table(d_max):
    """Rows (j, d, disc, division, maximal) for 2 <= d <= d_max, both
    automorphism orders."""
    if d_max < 2:
        raise ValueError("d_max must be at least 2")
    rows = []
    for j in (4, 3):
        tag = -1 if j == 4 else -3
        for d in range(2, d_max + 1):
            alg = QuatAlg(tag, d)
            order = order_from_matrix_model(j, d)
            rows.append({
                "j": j,
                "a": tag,
                "d": d,
                "disc": alg.discriminant(),
                "division": alg.is_division(),
                "maximal": order.is_maximal(),
            })
    return rows
