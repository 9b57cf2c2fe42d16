"""Kummer-surface geometry over Barth's moduli space.

For a moduli point x in P^5: the three quadrics cutting out the Kummer
surface, its 16 nodes as the two-torsion orbit of x, the six-node
hyperplane test, the degree-6 determinant F and the real-multiplication
surface cut out by three quadrics, the Segre threefold, and the
degeneration polynomial r = 16 r12^3.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from .fields import Zeta8
from .heisenberg import barth_f1, barth_f2, even_block, lift, qm_parametrization
from .homog import HomogPoly
from .matrices import Mat


def _sq(c):
    return c * c


def barth_quadrics(x):
    """The three quadrics in X_1..X_6 cutting out the Kummer surface of the
    abelian surface attached to x."""
    x1, x2, x3, x4, x5, x6 = x
    q1 = HomogPoly(6, {
        (2, 0, 0, 0, 0, 0): _sq(x1) + _sq(x2),
        (0, 2, 0, 0, 0, 0): _sq(x1) + _sq(x2),
        (0, 0, 2, 0, 0, 0): -(_sq(x3) + _sq(x4)),
        (0, 0, 0, 2, 0, 0): -(_sq(x3) + _sq(x4)),
        (0, 0, 0, 0, 2, 0): -(_sq(x5) + _sq(x6)),
        (0, 0, 0, 0, 0, 2): -(_sq(x5) + _sq(x6)),
    }, 2)
    q2 = HomogPoly(6, {
        (2, 0, 0, 0, 0, 0): _sq(x1) - _sq(x2),
        (0, 2, 0, 0, 0, 0): -(_sq(x1) - _sq(x2)),
        (0, 0, 2, 0, 0, 0): -(_sq(x3) - _sq(x4)),
        (0, 0, 0, 2, 0, 0): _sq(x3) - _sq(x4),
        (0, 0, 0, 0, 2, 0): -(_sq(x5) - _sq(x6)),
        (0, 0, 0, 0, 0, 2): _sq(x5) - _sq(x6),
    }, 2)
    q3 = HomogPoly(6, {
        (1, 1, 0, 0, 0, 0): x1 * x2,
        (0, 0, 1, 1, 0, 0): -(x3 * x4),
        (0, 0, 0, 0, 1, 1): -(x5 * x6),
    }, 2)
    return q1, q2, q3


NODE_INDEX = [(a, b, c, d) for a in (0, 1) for b in (0, 1)
              for c in (0, 1) for d in (0, 1)]

SIX_NODE_INDEX = [(0, 0, 0, 0), (0, 0, 1, 1), (0, 1, 0, 0),
                  (0, 1, 1, 0), (1, 1, 1, 0), (1, 1, 1, 1)]


def two_torsion_lift(idx):
    """Even 6x6 action of the two-torsion lift indexed by (a,b,c,d) in
    {0,1}^4."""
    a, b, c, d = idx
    return even_block(lift((a, 2 * b, c, 2 * d)))


def nodes(x):
    """The 16 nodes of the Kummer surface of x, as the two-torsion orbit."""
    return {idx: two_torsion_lift(idx).apply(list(x)) for idx in NODE_INDEX}


def six_nodes(x):
    return [two_torsion_lift(idx).apply(list(x)) for idx in SIX_NODE_INDEX]


def span_rank(points, tol=1e-8):
    """Rank of the coordinate matrix of a list of points: exact Gaussian
    elimination for exact scalars, SVD with a relative threshold for
    complex input."""
    first = points[0][0]
    if isinstance(first, (float, complex, np.floating, np.complexfloating)):
        a = np.array([[complex(c) for c in p] for p in points])
        s = np.linalg.svd(a, compute_uv=False)
        if s[0] == 0:
            return 0
        return int(np.sum(s > tol * s[0]))
    return Mat(points).rank()


def poly_matrix_det(rows):
    """Determinant of a matrix of homogeneous polynomials (Leibniz)."""
    n = len(rows)
    nv = rows[0][0].nvars
    deg = sum(r[0].degree or 0 for r in rows)
    acc = HomogPoly.zero(nv, deg)
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        term = rows[0][perm[0]]
        for i in range(1, n):
            term = term * rows[i][perm[i]]
        acc = acc + (term if sign > 0 else -term)
    return acc


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def symbolic_six_nodes():
    """The six nodes of the generic point p_(x:y) of the quaternionic line,
    as rows of linear binary forms."""
    param = qm_parametrization()
    out = []
    for idx in SIX_NODE_INDEX:
        m = two_torsion_lift(idx)
        row = []
        for i in range(6):
            acc = HomogPoly.zero(2, 1)
            for j in range(6):
                if m[i, j]:
                    acc = acc + param[j] * m[i, j]
            row.append(acc)
        out.append(row)
    return out


def symbolic_six_node_rank():
    """Generic rank of the six-node matrix along the line: the full
    determinant must vanish identically and some 5x5 minor must not."""
    rows = symbolic_six_nodes()
    if not poly_matrix_det(rows).is_zero():
        return 6
    for drop_r in range(6):
        for drop_c in range(6):
            minor = [[rows[i][j] for j in range(6) if j != drop_c]
                     for i in range(6) if i != drop_r]
            if not poly_matrix_det(minor).is_zero():
                return 5
    raise AssertionError("six-node matrix rank below 5 generically")


HUMBERT_SIGNS = [
    [(0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1)],
    [(1, -1), (0, 1), (3, 1), (2, -1), (5, 1), (4, -1)],
    [(1, -1), (0, 1), (3, -1), (2, 1), (5, 1), (4, -1)],
    [(0, 1), (1, -1), (2, 1), (3, -1), (4, -1), (5, 1)],
    [(0, 1), (1, 1), (2, 1), (3, 1), (4, -1), (5, -1)],
    [(0, 1), (1, -1), (2, -1), (3, 1), (4, 1), (5, -1)],
]


def humbert_node_rows():
    """The six-node coordinate matrix in its monomial normal form: each row
    a signed permutation of (x1..x6)."""
    rows = []
    for pattern in HUMBERT_SIGNS:
        row = []
        for src, sign in pattern:
            e = [0] * 6
            e[src] = 1
            row.append(HomogPoly(6, {tuple(e): sign}, 1))
        rows.append(row)
    return rows


def humbert_F_poly():
    """The degree-6 determinant whose vanishing detects six coplanar
    nodes."""
    return poly_matrix_det(humbert_node_rows())


def humbert_F(x):
    return humbert_F_poly().eval(list(x))


def s2_quadrics():
    """Three quadrics cutting out the surface of moduli points whose
    abelian surface has real multiplication by Z[sqrt(2)]."""
    s1 = HomogPoly(6, {(2, 0, 0, 0, 0, 0): 1, (0, 2, 0, 0, 0, 0): -1,
                       (0, 0, 0, 0, 2, 0): -1, (0, 0, 0, 0, 0, 2): -1}, 2)
    s2 = HomogPoly(6, {(1, 1, 0, 0, 0, 0): 1, (0, 0, 0, 2, 0, 0): -1,
                       (0, 0, 0, 0, 1, 1): -1}, 2)
    s3 = HomogPoly(6, {(0, 0, 2, 0, 0, 0): 1, (0, 0, 0, 2, 0, 0): -1,
                       (0, 0, 0, 0, 1, 1): -2}, 2)
    return s1, s2, s3


def s2_residuals(x):
    return tuple(q.eval(list(x)) for q in s2_quadrics())


def sample_s2_points(rng, count):
    """Numeric points on the real-multiplication surface via the closed-form
    solve of its three quadrics: pick (x4, x5, x6), then
    x3^2 = x4^2 + 2 x5 x6, x1 x2 = x4^2 + x5 x6, x1^2 - x2^2 = x5^2 + x6^2.
    """
    pts = []
    while len(pts) < count:
        x4, x5, x6 = (complex(rng.gauss(0, 1), rng.gauss(0, 1))
                      for _ in range(3))
        x3 = np.sqrt(complex(x4 * x4 + 2 * x5 * x6))
        p = x4 * x4 + x5 * x6
        q = x5 * x5 + x6 * x6
        disc = np.sqrt(q * q + 4 * p * p)
        x1sq = (q + disc) / 2
        if abs(x1sq) < 1e-8:
            continue
        x1 = np.sqrt(x1sq)
        x2 = p / x1
        pts.append([x1, x2, x3, x4, x5, x6])
    return pts


def segre_map(u, w):
    """The Segre embedding P^1 x P^2 -> P^5 hitting the split-period locus."""
    u0, u1 = u
    w0, w1, w2 = w
    if not (u0 or u1) or not (w0 or w1 or w2):
        raise ValueError("zero input to the Segre map")
    return [u0 * w0, u1 * w0, u0 * w1, u1 * w1, u0 * w2, u1 * w2]


def segre_minor_polys():
    return (
        HomogPoly(6, {(1, 0, 0, 1, 0, 0): 1, (0, 1, 1, 0, 0, 0): -1}, 2),
        HomogPoly(6, {(1, 0, 0, 0, 0, 1): 1, (0, 1, 0, 0, 1, 0): -1}, 2),
        HomogPoly(6, {(0, 0, 1, 0, 0, 1): 1, (0, 0, 0, 1, 1, 0): -1}, 2),
    )


def segre_minors(x):
    return tuple(q.eval(list(x)) for q in segre_minor_polys())


def r12_poly():
    """The degree-8 degeneration polynomial: a product of four quadrics in
    the first, second, fifth and sixth coordinates, scaled by 16."""
    a = HomogPoly(6, {(1, 0, 0, 0, 0, 1): 1, (0, 1, 0, 0, 1, 0): -1}, 2)
    b = HomogPoly(6, {(1, 0, 0, 0, 0, 1): 1, (0, 1, 0, 0, 1, 0): 1}, 2)
    c = HomogPoly(6, {(1, 0, 0, 0, 1, 0): 1, (0, 1, 0, 0, 0, 1): -1}, 2)
    d = HomogPoly(6, {(1, 0, 0, 0, 1, 0): 1, (0, 1, 0, 0, 0, 1): 1}, 2)
    return (a * b * c * d) * 16


def degeneration_r(x):
    """r = 16 r12^3 at the point; vanishing flags degenerate (non-abelian)
    moduli points."""
    v = r12_poly().eval(list(x))
    return 16 * v ** 3


def f_pair_recombination():
    """For each two-torsion lift m, the exact 2x2 matrix expressing
    (f1 o m, f2 o m) in terms of (f1, f2)."""
    f1, f2 = barth_f1(), barth_f2()
    out = {}
    for idx in NODE_INDEX:
        m = two_torsion_lift(idx)
        imgs = [HomogPoly.linear_form([m[i, j] for j in range(6)])
                for i in range(6)]
        rows = []
        for f in (f1.map_coefficients(Zeta8.coerce),
                  f2.map_coefficients(Zeta8.coerce)):
            sub = f.substitute(imgs)
            coeffs = _in_f_span(sub)
            if coeffs is None:
                raise AssertionError("f-pair is not stable under the lift")
            rows.append(coeffs)
        out[idx] = rows
    return out


def _in_f_span(p):
    """Express a quartic as a*f1 + b*f2, if possible."""
    f1 = barth_f1().map_coefficients(Zeta8.coerce)
    f2 = barth_f2().map_coefficients(Zeta8.coerce)
    monomials = sorted(set(f1.terms) | set(f2.terms) | set(p.terms))
    a_rows = [[f1.terms.get(e, Zeta8(0)), f2.terms.get(e, Zeta8(0))]
              for e in monomials]
    rhs = [p.terms.get(e, Zeta8(0)) for e in monomials]
    sol = Mat(a_rows).solve(rhs)
    return None if sol is None else tuple(sol)
