"""Integer symplectic machinery for (1,d)-polarized abelian surfaces.

Polarization forms E_d, the order-3/4 automorphism matrices M_3, M_4, the
*_d action on the Siegel space H_2, the real conjugating matrices S_j that
bring M_j to its normal form, fixed-locus parametrizations, Neron-Severi
perp lattices, level-subgroup membership for D = diag(2,4), and the finite
symplectic group on T(2,4) = (Z/2 x Z/4)^2.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .fields import QuadExt
from .matrices import Mat, integer_kernel

SYM_TOL = 1e-12
FIX_TOL = 1e-9


# ---------------------------------------------------------------------------
# standard matrices

M3 = Mat([[-1, 0, -1, 0],
          [0, 0, 0, 1],
          [1, 0, 0, 0],
          [0, -1, 0, -1]])

M4 = Mat([[0, 0, -1, 0],
          [0, 0, 0, 1],
          [1, 0, 0, 0],
          [0, -1, 0, 0]])


def automorphism_matrix(j):
    if j == 3:
        return M3
    if j == 4:
        return M4
    raise ValueError(f"automorphism order must be 3 or 4, got {j}")


def polarization_form(d):
    """The alternating form E_d with elementary divisors (1, d)."""
    return Mat([[0, 0, 1, 0],
                [0, 0, 0, d],
                [-1, 0, 0, 0],
                [0, -d, 0, 0]])


def delta(d):
    return Mat([[1, 0], [0, d]])


def r_matrix(d):
    """Block diagonal (I, Delta_d); conjugates the *_d action to *_1."""
    return Mat.diag([1, 1, 1, d])


def psi_matrix(j, d):
    """The extra endomorphism psi_j with psi_j^2 = d, in the lattice
    representation."""
    if j == 3:
        return Mat([[0, d, 0, 0],
                    [1, 0, 0, 0],
                    [0, 0, 0, d],
                    [0, 0, 1, 0]])
    if j == 4:
        return Mat([[0, 0, 0, -d],
                    [0, 0, 1, 0],
                    [0, d, 0, 0],
                    [-1, 0, 0, 0]])
    raise ValueError(f"automorphism order must be 3 or 4, got {j}")


def build_standard(j, d):
    """(M_j, E_d, Delta_d, R_d, psi_j) for the given automorphism order and
    polarization type."""
    if d < 1:
        raise ValueError("polarization type must be positive")
    return (automorphism_matrix(j), polarization_form(d), delta(d),
            r_matrix(d), psi_matrix(j, d))


def is_form_preserving(m, e):
    """True iff M E M^t == E exactly."""
    return m @ e @ m.transpose() == e


# ---------------------------------------------------------------------------
# the *_d action on H_2 (numeric)


def _check_siegel(tau, tol=SYM_TOL):
    tau = np.asarray(tau, dtype=complex)
    if tau.shape != (2, 2):
        raise ValueError("Siegel point must be 2x2")
    scale = max(1.0, float(np.max(np.abs(tau))))
    if abs(tau[0, 1] - tau[1, 0]) > tol * scale:
        raise ValueError("Siegel point is not symmetric")
    im = tau.imag
    if im[0, 0] <= 0 or np.linalg.det(im) <= 0:
        raise ValueError("imaginary part is not positive definite")
    return tau


def star_action(m, tau, d):
    """M *_d tau = (A tau + B Delta_d)(C tau + D Delta_d)^-1 Delta_d."""
    tau = _check_siegel(tau)
    mm = m.to_numpy().real if isinstance(m, Mat) else np.asarray(m, dtype=float)
    a, b = mm[:2, :2], mm[:2, 2:]
    c, dd = mm[2:, :2], mm[2:, 2:]
    delta_d = np.diag([1.0, float(d)])
    denom = c @ tau + dd @ delta_d
    if abs(np.linalg.det(denom)) < 1e-14:
        raise ZeroDivisionError("C tau + D Delta_d is singular")
    out = (a @ tau + b @ delta_d) @ np.linalg.inv(denom) @ delta_d
    out = 0.5 * (out + out.T)
    return _check_siegel(out, tol=1e-9)


def s_matrix(j, d):
    """The real symplectic matrix S_j over Q(sqrt(d)) conjugating
    R_d^-1 M_j R_d into its normal form."""
    if j == 3:
        rows = [
            [("h", Fraction(1, 2), Fraction(1, 2)), ("h", 0, 1), ("h", 0, 0), ("h", 1, 0)],
            [("h", Fraction(-d, 2), Fraction(1, 2)), ("h", -d, 0), ("h", 0, 0), ("h", 0, -1)],
            [("h", Fraction(-1, 2), Fraction(1, 2)), ("h", Fraction(-1, 2), Fraction(-1, 2)),
             ("h", 1, 0), ("h", -1, 0)],
            [("h", 1, 0), ("h", Fraction(1, 2), Fraction(1, 2 * d)), ("h", 0, Fraction(1, d)),
             ("h", 0, 0)],
        ]
    elif j == 4:
        rows = [
            [("h", Fraction(1, 2), 0), ("h", 0, 0), ("h", 0, 0), ("h", 1, 0)],
            [("h", 0, Fraction(1, 2)), ("h", 0, 0), ("h", 0, 0), ("h", 0, -1)],
            [("h", 0, 0), ("h", Fraction(-1, 2), 0), ("h", 1, 0), ("h", 0, 0)],
            [("h", 0, 0), ("h", 0, Fraction(1, 2 * d)), ("h", 0, Fraction(1, d)), ("h", 0, 0)],
        ]
    else:
        raise ValueError(f"automorphism order must be 3 or 4, got {j}")
    return Mat([[_quad(d, a, b) for (_, a, b) in r] for r in rows])


def _quad(d, a, b):
    """a + b*sqrt(d), specialized to a Fraction when d is a perfect square."""
    root = _integer_sqrt(d)
    if root is not None:
        return Fraction(a) + Fraction(b) * root
    return QuadExt(d, a, b)


def _integer_sqrt(d):
    r = int(d ** 0.5)
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand * cand == d:
            return cand
    return None


def normal_form_target(j):
    if j == 3:
        return Mat([[0, 1, 0, 0],
                    [-1, -1, 0, 0],
                    [0, 0, -1, 1],
                    [0, 0, -1, 0]])
    return Mat([[0, 1, 0, 0],
                [-1, 0, 0, 0],
                [0, 0, 0, 1],
                [0, 0, -1, 0]])


def conjugated_normal_form(j, d):
    """S_j^-1 R_d^-1 M_j R_d S_j, computed exactly over Q(sqrt(d))."""
    m = automorphism_matrix(j)
    r = r_matrix(d).map(Fraction)
    t = r.inverse() @ m.map(Fraction) @ r
    s = s_matrix(j, d)
    return s.inverse() @ t @ s


def fixed_locus_point(j, d, z):
    """A point of H_{j,d} = {tau : M_j *_d tau = tau} built from z in H_1.

    Pushes the normal-form fixed point through S_j with the standard *_1
    action; the result numerically satisfies M_j *_d tau = tau.
    """
    z = complex(z)
    if z.imag <= 0:
        raise ValueError("z must lie in the upper half plane")
    if j == 3:
        base = np.array([[2 * z, -z], [-z, 2 * z]])
    elif j == 4:
        base = np.array([[z, 0], [0, z]])
    else:
        raise ValueError(f"automorphism order must be 3 or 4, got {j}")
    s = s_matrix(j, d).to_numpy().real
    a, b = s[:2, :2], s[:2, 2:]
    c, dd = s[2:, :2], s[2:, 2:]
    denom = c @ base + dd
    out = (a @ base + b) @ np.linalg.inv(denom)
    out = 0.5 * (out + out.T)
    return _check_siegel(out)


# ---------------------------------------------------------------------------
# Neron-Severi perp lattice and derived endomorphisms

_ALT_BASIS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def _alt_from_coords(v):
    m = [[0] * 4 for _ in range(4)]
    for (i, j), c in zip(_ALT_BASIS, v):
        m[i][j] = c
        m[j][i] = -c
    return Mat(m)


def _alt_to_coords(m):
    return [m[i, j] for (i, j) in _ALT_BASIS]


def ns_perp_basis(j):
    """Z-basis of the rank-2 lattice of alternating integer forms
    perpendicular to the invariants of the automorphism action
    F -> M F M^t.

    This is the part of the 6-dimensional form space where the action has
    its nontrivial eigenvalues: primitive cube roots of unity for order 3
    (killed by x^2 + x + 1), and -1 for order 4 (killed by x + 1; the
    square of the order-4 action is trivial on 2-forms).
    """
    m = automorphism_matrix(j)

    def act(f):
        return m @ f @ m.transpose()

    cols = []
    for v in ((1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0),
              (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1)):
        f = _alt_from_coords(v)
        f1 = act(f)
        if j == 3:
            img = act(f1) + f1 + f
        else:
            img = f1 + f
        cols.append(_alt_to_coords(img))
    op = Mat(cols).transpose()
    basis = integer_kernel(op)
    return [_alt_from_coords(v) for v in basis]


def derive_endomorphism(e, f):
    """E^-1 F as a rational matrix; an endomorphism when E, F are in NS."""
    return e.map(Fraction).inverse() @ f.map(Fraction)


# ---------------------------------------------------------------------------
# level subgroups for D = diag(2, 4)

D_LEVEL = (2, 4)


def level_membership(m):
    """Classify an integer matrix against Gamma_D > Gamma_D(D) > Gamma_D(D)_0.

    Returns (label, bits) with label one of 'not_in_Gamma_D', 'Gamma_D_only',
    'Gamma_D(D)', 'Gamma_D(D)_0' and bits the (beta11, beta22, gamma11,
    gamma22) vector mod 2 for members of Gamma_D(D), else None.
    """
    e2 = polarization_form(2)
    if any(not isinstance(x, int) for r in m.rows for x in r):
        return "not_in_Gamma_D", None
    if not is_form_preserving(m, e2):
        return "not_in_Gamma_D", None

    def d_quotient(block, shifted):
        # block = D * beta exactly?  rows scaled by (2, 4)
        out = []
        for i, scale in enumerate(D_LEVEL):
            row = []
            for jj in range(2):
                v = block[i, jj] - (1 if (shifted and i == jj) else 0)
                if v % scale:
                    return None
                row.append(v // scale)
            out.append(row)
        return out

    alpha = d_quotient(m.block(0, 2, 0, 2), True)
    beta = d_quotient(m.block(0, 2, 2, 4), False)
    gamma = d_quotient(m.block(2, 4, 0, 2), False)
    deltab = d_quotient(m.block(2, 4, 2, 4), True)
    if None in (alpha, beta, gamma, deltab):
        return "Gamma_D_only", None
    bits = (beta[0][0] % 2, beta[1][1] % 2, gamma[0][0] % 2, gamma[1][1] % 2)
    if bits == (0, 0, 0, 0):
        return "Gamma_D(D)_0", bits
    return "Gamma_D(D)", bits


def sp_t24_generators():
    """The five generator matrices of Sp(T(2,4)) lifted to Gamma_D."""
    return [
        Mat([[1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0]]),
        Mat([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 1, 0, 1]]),
        Mat([[0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]]),
        Mat([[1, 0, 0, 0], [0, 1, 0, 0], [1, 0, 1, 0], [0, 0, 0, 1]]),
        Mat([[1, 0, 0, 0], [-2, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]]),
    ]


T24_MODULI = (2, 4, 2, 4)

T24_ELEMENTS = [(a, b, c, d)
                for a in range(2) for b in range(4)
                for c in range(2) for d in range(4)]

_T24_INDEX = {g: i for i, g in enumerate(T24_ELEMENTS)}


def t24_pairing_exponent(g, h):
    """The symplectic pairing on T(2,4) as an exponent of i (mod 4)."""
    a, b, c, d = g
    a2, b2, c2, d2 = h
    return (2 * a * c2 - 2 * a2 * c + b * d2 - b2 * d) % 4


def t24_permutation(m):
    """The permutation of T(2,4) induced by v -> v M on Z^4 D~^-1 / Z^4."""
    perm = []
    for g in T24_ELEMENTS:
        frac = [Fraction(g[k], T24_MODULI[k]) for k in range(4)]
        img = [sum(frac[i] * m[i, k] for i in range(4)) for k in range(4)]
        scaled = []
        for k in range(4):
            v = img[k] * T24_MODULI[k]
            if v.denominator != 1:
                raise ValueError("matrix does not act on T(2,4)")
            scaled.append(int(v) % T24_MODULI[k])
        perm.append(_T24_INDEX[tuple(scaled)])
    return tuple(perm)


def permutation_preserves_pairing(perm):
    for i, g in enumerate(T24_ELEMENTS):
        for k, h in enumerate(T24_ELEMENTS):
            if t24_pairing_exponent(g, h) != t24_pairing_exponent(
                    T24_ELEMENTS[perm[i]], T24_ELEMENTS[perm[k]]):
                return False
    return True


def close_permutation_group(generators, bound=10_000):
    """Breadth-first closure of a permutation group given by tuples."""
    if not generators:
        return {tuple(range(64))}
    n = len(generators[0])
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in generators:
                q = tuple(p[g[i]] for i in range(n))
                if q not in seen:
                    seen.add(q)
                    if len(seen) > bound:
                        raise RuntimeError(f"group closure exceeded {bound}")
                    nxt.append(q)
        frontier = nxt
    return seen


def sp_t24_order():
    """Order of the group generated by the five standard generators acting
    on the 64 points of T(2,4)."""
    perms = [t24_permutation(m) for m in sp_t24_generators()]
    return len(close_permutation_group(perms))
