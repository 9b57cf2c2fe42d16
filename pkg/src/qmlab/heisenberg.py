"""The finite Heisenberg machinery on P^7 over Q(zeta_8).

Schroedinger lifts of the generators of T(2,4), the order-3 operator that
fixes the quaternionic line, the two extra normalizer elements generating
an S_4 on that line, eigenspace extraction, the invariant binary forms of
degrees 6, 8, 12 and the S_4-quotient function G.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .fields import SQRT2, SqrtExt, Zeta8, ZETA, I
from .homog import HomogPoly
from .matrices import Mat
from .symplectic import T24_ELEMENTS, T24_MODULI, t24_pairing_exponent

ZERO = Zeta8(0)
ONE = Zeta8(1)


class Infinity:
    """Value of a quotient map at a pole."""

    def __repr__(self):
        return "inf"

    def __eq__(self, other):
        return isinstance(other, Infinity)

    def __hash__(self):
        return hash("Infinity")


INFINITY = Infinity()


def _op(rows):
    return Mat([[Zeta8.coerce(c) for c in r] for r in rows])


def _perm_with_scalars(images):
    """Matrix sending x to (c_1 x_{p(1)}, ...): images is a list of
    (source index, scalar)."""
    n = len(images)
    rows = []
    for j, c in images:
        row = [ZERO] * n
        row[j] = Zeta8.coerce(c)
        rows.append(row)
    return Mat(rows)


@lru_cache(maxsize=None)
def sigma1():
    return _perm_with_scalars([(1, 1), (0, 1), (3, 1), (2, 1),
                               (5, 1), (4, 1), (7, 1), (6, 1)])


@lru_cache(maxsize=None)
def sigma2():
    return _perm_with_scalars([(2, 1), (3, 1), (0, 1), (1, 1),
                               (6, 1), (7, 1), (4, -1), (5, -1)])


@lru_cache(maxsize=None)
def tau1():
    return _perm_with_scalars([(0, 1), (1, -1), (2, 1), (3, -1),
                               (4, 1), (5, -1), (6, 1), (7, -1)])


@lru_cache(maxsize=None)
def tau2():
    return _perm_with_scalars([(4, 1), (5, 1), (6, I), (7, I),
                               (0, 1), (1, 1), (2, I), (3, I)])


@lru_cache(maxsize=None)
def iota():
    return _perm_with_scalars([(0, 1), (1, 1), (2, 1), (3, 1),
                               (4, 1), (5, 1), (6, -1), (7, -1)])


@lru_cache(maxsize=None)
def mu3():
    z, z3 = ZETA, ZETA ** 3
    return _op([
        [0, 0, 1, -I, 0, 0, 0, 0],
        [0, 0, 1, I, 0, 0, 0, 0],
        [0, 0, 0, 0, z, -z3, 0, 0],
        [0, 0, 0, 0, z, z3, 0, 0],
        [1, -I, 0, 0, 0, 0, 0, 0],
        [1, I, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, z3, z],
        [0, 0, 0, 0, 0, 0, z3, -z],
    ])


@lru_cache(maxsize=None)
def nu1():
    z = ZETA
    return _op([
        [0, 0, 0, 0, 1, 1, 0, 0],
        [0, 0, 0, 0, -1, 1, 0, 0],
        [0, 0, z, -z, 0, 0, 0, 0],
        [0, 0, z, z, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0, 0, 0],
        [1, -1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, -z, z],
        [0, 0, 0, 0, 0, 0, z, z],
    ])


@lru_cache(maxsize=None)
def nu2():
    z3 = ZETA ** 3
    return _op([
        [0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, -1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, z3, 0, 0],
        [0, 0, 0, 0, z3, 0, 0, 0],
        [I, 0, 0, 0, 0, 0, 0, 0],
        [0, -I, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, z3, 0],
        [0, 0, 0, 0, 0, 0, 0, z3],
    ])


GENERATOR_NAMES = ("sigma1", "sigma2", "tau1", "tau2")


def generator(k):
    return (sigma1, sigma2, tau1, tau2)[k]()


@lru_cache(maxsize=None)
def lift(g):
    """The Schroedinger lift sigma1^a sigma2^b tau1^c tau2^d of
    g = (a, b, c, d) in T(2,4)."""
    a, b, c, d = (x % m for x, m in zip(g, T24_MODULI))
    return sigma1() ** a @ sigma2() ** b @ tau1() ** c @ tau2() ** d


def proj_scalar(m1, m2):
    """Scalar s with m1 == s * m2, or None."""
    s = None
    for r1, r2 in zip(m1.rows, m2.rows):
        for a, b in zip(r1, r2):
            if bool(a) != bool(b):
                return None
            if b:
                cand = a / b
                if s is None:
                    s = cand
                elif cand != s:
                    return None
    return s


def proj_eq(m1, m2):
    return proj_scalar(m1, m2) is not None


def word_matrix(word):
    """Product of generator powers: word is a list of (index, exponent)."""
    out = Mat.identity(8).map(Zeta8.coerce)
    for k, e in word:
        g = generator(k)
        if e < 0:
            g = g.inverse()
            e = -e
        out = out @ g ** e
    return out


def commutator_scalar(g, h):
    """lift(g) lift(h) lift(g)^-1 lift(h)^-1 as a scalar; raises when the
    commutator is not scalar (it always is for genuine lifts)."""
    a, b = lift(tuple(g)), lift(tuple(h))
    comm = a @ b @ a.inverse() @ b.inverse()
    s = comm.is_scalar_multiple_of_identity()
    if s is None:
        raise ValueError("commutator is not a scalar: transcription bug")
    return s


def pairing_value(g, h):
    """The symplectic pairing of T(2,4) as a Zeta8 scalar (a power of i)."""
    return I ** t24_pairing_exponent(tuple(g), tuple(h))


def verify_normalizer(op, relations):
    """Check conjugation identities op g op^-1 == scalar * word exactly.

    relations: list of (gen index, scalar, word); returns (ok, failures).
    """
    inv = op.inverse()
    failures = []
    for k, scalar, word in relations:
        lhs = op @ generator(k) @ inv
        rhs = word_matrix(word).scale(Zeta8.coerce(scalar))
        if lhs != rhs:
            failures.append(GENERATOR_NAMES[k])
    return not failures, failures


# Conjugation identities satisfied by the three normalizer operators, each
# an exact matrix equation op g op^-1 == scalar * word.  The identities pin
# each operator up to a global scalar and certify membership in the
# Heisenberg normalizer.
MU3_RELATIONS = [
    (0, I, [(0, 1), (2, 1)]),
    (1, 1, [(3, 3)]),
    (2, 1, [(0, 1)]),
    (3, ZETA, [(1, 1), (3, 3)]),
]

NU1_RELATIONS = [
    (0, 1, [(2, 1), (3, 2)]),
    (1, ZETA, [(0, 1), (1, 1), (3, 3)]),
    (2, -1, [(0, 1), (1, 2), (3, 2)]),
    (3, 1, [(2, 1), (3, 3)]),
]

NU2_RELATIONS = [
    (0, -1, [(0, 1), (3, 2)]),
    (1, I, [(0, 1), (1, 2), (3, 3)]),
    (2, -1, [(1, 2), (2, 1)]),
    (3, ZETA, [(0, 1), (1, 1), (2, 1), (3, 1)]),
]


def induced_t24_map(op):
    """The symplectic automorphism of T(2,4) induced by conjugation, as a
    dict generator -> image; raises if op does not normalize the lifts."""
    inv = op.inverse()
    gens = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    images = {}
    for g in gens:
        conj = op @ lift(g) @ inv
        for h in T24_ELEMENTS:
            if proj_eq(conj, lift(h)):
                images[g] = h
                break
        else:
            raise ValueError("operator is not in the normalizer")
    # well-definedness and symplecticity of the induced map
    def image(g):
        acc = [0, 0, 0, 0]
        for coef, gen in zip(g, gens):
            img = images[gen]
            acc = [a + coef * i for a, i in zip(acc, img)]
        return tuple(a % m for a, m in zip(acc, T24_MODULI))

    for g in gens:
        order = 2 if g in (gens[0], gens[2]) else 4
        if image(tuple(order * x for x in g)) != (0, 0, 0, 0):
            raise ValueError("induced map is not well-defined on T(2,4)")
    for g in gens:
        for h in gens:
            if t24_pairing_exponent(image(g), image(h)) != \
                    t24_pairing_exponent(g, h):
                raise ValueError("induced map does not preserve the pairing")
    return images


# ---------------------------------------------------------------------------
# even subspace and the quaternionic line


def even_block(m):
    """Restrict an operator preserving {x7 = x8 = 0} to the even P^5."""
    for i in range(6):
        for j in range(6, 8):
            if m[i, j] or m[j, i]:
                raise ValueError("operator does not preserve the even space")
    return m.block(0, 6, 0, 6)


def mu3_even():
    return even_block(mu3())


def sqrt2_eigenline():
    """Basis of the sqrt(2)-eigenspace of mu3 on the even coordinates."""
    m = mu3_even()
    shifted = m - Mat.identity(6).map(Zeta8.coerce).scale(SQRT2)
    basis = shifted.kernel()
    if len(basis) != 2:
        raise AssertionError(f"eigenspace has dimension {len(basis)}")
    return basis


def qm_point(x, y):
    """The parametrization P^1 -> P^1_QM inside the even P^5."""
    x, y = Zeta8.coerce(x), Zeta8.coerce(y)
    if not x and not y:
        raise ValueError("(0, 0) is not a projective point")
    return [SQRT2 * x, SQRT2 * y, x + y, I * (x - y), x - I * y, x + I * y]


def qm_parametrization():
    """The same map as six linear forms in (x, y) for substitutions."""
    rows = [
        [SQRT2, ZERO],
        [ZERO, SQRT2],
        [ONE, ONE],
        [I, -I],
        [ONE, -I],
        [ONE, I],
    ]
    return [HomogPoly.linear_form(r) for r in rows]


def barth_f1(nvars=6):
    f = {(2, 2, 0, 0, 0, 0): -1, (0, 0, 2, 2, 0, 0): 1, (0, 0, 0, 0, 2, 2): 1}
    return HomogPoly(nvars, {e + (0,) * (nvars - 6): c for e, c in f.items()})


def barth_f2(nvars=6):
    f = {(4, 0, 0, 0, 0, 0): -1, (0, 4, 0, 0, 0, 0): -1,
         (0, 0, 4, 0, 0, 0): 1, (0, 0, 0, 4, 0, 0): 1,
         (0, 0, 0, 0, 4, 0): 1, (0, 0, 0, 0, 0, 4): 1}
    return HomogPoly(nvars, {e + (0,) * (nvars - 6): c for e, c in f.items()})


def special_polys():
    """The binary forms of degrees 6, 8, 12 whose zeros carry nontrivial
    S_4-stabilizers."""
    g6 = HomogPoly(2, {(5, 1): 1, (1, 5): -1})
    g8 = HomogPoly(2, {(8, 0): 1, (4, 4): 14, (0, 8): 1})
    g12 = HomogPoly(2, {(12, 0): 1, (8, 4): -33, (4, 8): -33, (0, 12): 1})
    return g6, g8, g12


def quotient_G(x, y):
    """G = g6^4 / g8^3, the S_4-quotient map on the line; INFINITY at the
    zeros of g8."""
    g6, g8, _ = special_polys()
    num = g6.eval([x, y]) ** 4
    den = g8.eval([x, y]) ** 3
    num, den = Zeta8.coerce(num), Zeta8.coerce(den)
    if not den:
        if not num:
            raise ZeroDivisionError("0/0 in the quotient map: g6 and g8 "
                                    "share a zero, which cannot happen")
        return INFINITY
    val = num / den
    return val.rational_value() if val.is_rational() else val


# ---------------------------------------------------------------------------
# the S_4 action on the line


def line_nu1():
    return Mat([[ONE, ZERO], [ZERO, I]])


def line_nu2():
    return Mat([[I, -I], [-ONE, -ONE]])


def _canon_proj(m):
    for r in m.rows:
        for a in r:
            if a:
                inv = 1 / a
                return tuple(x * inv for row in m.rows for x in row)
    raise ValueError("zero matrix")


def close_projective_group(generators, bound=1000):
    seen = {}
    frontier = [Mat.identity(len(generators[0].rows)).map(Zeta8.coerce)]
    seen[_canon_proj(frontier[0])] = frontier[0]
    while frontier:
        nxt = []
        for p in frontier:
            for g in generators:
                q = p @ g
                key = _canon_proj(q)
                if key not in seen:
                    if len(seen) >= bound:
                        raise RuntimeError("projective closure exceeded bound")
                    seen[key] = q
                    nxt.append(q)
        frontier = nxt
    return list(seen.values())


def projective_order(m, bound=30):
    p = m
    for k in range(1, bound + 1):
        if p.is_scalar_multiple_of_identity() is not None:
            return k
        p = p @ m
    raise RuntimeError("order exceeded bound")


def s4_on_line():
    """Close <nu1, nu2> modulo scalars; returns (elements, class sizes)."""
    elems = close_projective_group([line_nu1(), line_nu2()])
    classes = []
    remaining = {i: m for i, m in enumerate(elems)}
    inverses = {i: m.inverse() for i, m in enumerate(elems)}
    keys = {i: _canon_proj(m) for i, m in enumerate(elems)}
    key_to_idx = {k: i for i, k in keys.items()}
    seen = set()
    for i in range(len(elems)):
        if i in seen:
            continue
        orbit = set()
        for j, g in remaining.items():
            conj = g @ elems[i] @ inverses[j]
            orbit.add(key_to_idx[_canon_proj(conj)])
        seen |= orbit
        classes.append(len(orbit))
    return elems, sorted(classes)


def substitute_line(poly, m):
    """poly(m(x, y)) for a binary form and a 2x2 matrix."""
    imgs = [HomogPoly.linear_form([m[0, 0], m[0, 1]]),
            HomogPoly.linear_form([m[1, 0], m[1, 1]])]
    return poly.substitute(imgs)


def semi_invariant_character(poly, m):
    """Scalar chi with poly o m = chi * poly, or None."""
    sub = substitute_line(poly.map_coefficients(Zeta8.coerce), m)
    target = poly.map_coefficients(Zeta8.coerce)
    chi = None
    for e, c in target.terms.items():
        if e not in sub.terms:
            return None
        cand = sub.terms[e] / c
        if chi is None:
            chi = cand
        elif cand != chi:
            return None
    if set(sub.terms) != set(target.terms):
        return None
    return chi


def fixed_point_form(m):
    """Binary quadric whose zeros are the fixed points of the induced map
    on P^1: for [[a,b],[c,d]] this is -c x^2 + (a-d) xy + b y^2."""
    a, b = m[0, 0], m[0, 1]
    c, d = m[1, 0], m[1, 1]
    return HomogPoly(2, {(2, 0): -c, (1, 1): a - d, (0, 2): b}, 2)


def apply_line(m, pt):
    x, y = pt
    return (m[0, 0] * x + m[0, 1] * y, m[1, 0] * x + m[1, 1] * y)


def point_proj_eq(p, q):
    return not (p[0] * q[1] - p[1] * q[0])


def orbit_of_point(pt, elems):
    orbit = [pt]
    for m in elems:
        img = apply_line(m, pt)
        if not any(point_proj_eq(img, q) for q in orbit):
            orbit.append(img)
    return orbit


def stabilizer_order(pt, elems):
    return sum(1 for m in elems if point_proj_eq(apply_line(m, pt), pt))


def g8_root():
    """An exact root of the printed quadratic factor of g8, living in the
    quadratic extension of Q(zeta_8) by its discriminant."""
    disc = (I - 1) ** 2 - 4 * I
    s = SqrtExt.gen(disc)
    x = ((1 - I) + s) / 2
    return (x, s._coerce(1))


def g12_root_and_witness(elems):
    """A root of the fixed-point form of some involution acting freely on
    the zeros of g6 and g8 (i.e. a transposition-type element)."""
    g6, g8, g12 = special_polys()
    g6z = g6.map_coefficients(Zeta8.coerce)
    g8z = g8.map_coefficients(Zeta8.coerce)
    g12z = g12.map_coefficients(Zeta8.coerce)
    for m in elems:
        if projective_order(m) != 2:
            continue
        q = fixed_point_form(m)
        if q.divides(g12z) is None:
            continue
        if q.gcd(g6z).degree == 0 and q.gcd(g8z).degree == 0:
            a = q.terms.get((2, 0), ZERO)
            b = q.terms.get((1, 1), ZERO)
            c = q.terms.get((0, 2), ZERO)
            disc = b * b - 4 * a * c
            s = SqrtExt.gen(disc)
            x = (-b + s) / (2 * a)
            return (x, s._coerce(1)), m
    raise AssertionError("no transposition-type involution found")
