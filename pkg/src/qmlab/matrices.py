"""Dense exact matrices over any of the scalar types, plus integer lattice
kernels.

The Mat class is deliberately small: multiply, add, transpose, determinant
(fraction-free Bareiss, valid over any integral domain with exact division),
inverse / rank / kernel by Gaussian elimination over a field.  Numeric work
is done with numpy elsewhere; this class is for exact arithmetic only.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import ZeroDivisorError


def _exact_div(a, b):
    """Exact division dispatch: int//int with a divisibility check,
    scalar division otherwise (scalar types implement exact semantics)."""
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ValueError(f"inexact integer division {a} / {b}")
        return q
    return a / b


class Mat:
    """Immutable matrix; entries are whatever exact scalars you put in."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, *a):
        raise AttributeError("Mat is immutable")

    @staticmethod
    def identity(n):
        return Mat([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(nr, nc=None):
        nc = nr if nc is None else nc
        return Mat([[0] * nc for _ in range(nr)])

    @staticmethod
    def diag(entries):
        n = len(entries)
        return Mat([[entries[i] if i == j else 0 for j in range(n)]
                    for i in range(n)])

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self.nrows != other.nrows or self.ncols != other.ncols:
            return False
        return all(a == b for ra, rb in zip(self.rows, other.rows)
                   for a, b in zip(ra, rb))

    def __hash__(self):
        return hash(("Mat", self.rows))

    def __add__(self, other):
        return Mat([[a + b for a, b in zip(ra, rb)]
                    for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Mat([[a - b for a, b in zip(ra, rb)]
                    for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        return Mat([[-a for a in r] for r in self.rows])

    def scale(self, c):
        return Mat([[a * c for a in r] for r in self.rows])

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        bt = other.rows
        out = []
        for ra in self.rows:
            row = [0] * other.ncols
            for k, a in enumerate(ra):
                if not a:
                    continue
                rb = bt[k]
                for j, b in enumerate(rb):
                    if not b:
                        continue
                    row[j] = row[j] + a * b
            out.append(row)
        return Mat(out)

    def __pow__(self, n):
        if self.nrows != self.ncols or not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Mat.identity(self.nrows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def transpose(self):
        return Mat(list(zip(*self.rows)))

    def map(self, fn):
        return Mat([[fn(a) for a in r] for r in self.rows])

    def apply(self, vec):
        """Matrix times column vector (a plain sequence)."""
        return [sum_product(r, vec) for r in self.rows]

    def block(self, r0, r1, c0, c1):
        return Mat([r[c0:c1] for r in self.rows[r0:r1]])

    def is_scalar_multiple_of_identity(self):
        """Return the scalar c with self == c*I, or None."""
        if self.nrows != self.ncols or self.nrows == 0:
            return None
        c = self.rows[0][0]
        for i in range(self.nrows):
            for j in range(self.ncols):
                want = c if i == j else 0
                if self.rows[i][j] != want:
                    return None
        return c

    # -- elimination-based operations (field scalars)

    def det(self):
        """Bareiss fraction-free determinant; exact over integral domains."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return 1
        a = [list(r) for r in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if not a[k][k]:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return self.rows[0][0] * 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                    a[i][j] = _exact_div(num, prev)
                a[i][k] = 0
            prev = a[k][k]
        d = a[n - 1][n - 1]
        return -d if sign < 0 else d

    def _eliminate(self):
        """Row-reduce a copy over a field; returns (echelon rows, pivots,
        sign) -- pivot columns in order."""
        a = [list(r) for r in self.rows]
        nr, nc = self.nrows, self.ncols
        pivots = []
        row = 0
        for col in range(nc):
            piv = None
            for i in range(row, nr):
                if a[i][col]:
                    piv = i
                    break
            if piv is None:
                continue
            a[row], a[piv] = a[piv], a[row]
            inv = 1 / a[row][col] if not isinstance(a[row][col], int) \
                else Fraction(1, a[row][col])
            a[row] = [x * inv for x in a[row]]
            for i in range(nr):
                if i != row and a[i][col]:
                    f = a[i][col]
                    a[i] = [x - f * y for x, y in zip(a[i], a[row])]
            pivots.append(col)
            row += 1
            if row == nr:
                break
        return a, pivots

    def rank(self):
        return len(self._eliminate()[1])

    def inverse(self):
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        aug = Mat([list(r) + [1 if i == j else 0 for j in range(n)]
                   for i, r in enumerate(self.rows)])
        red, pivots = aug._eliminate()
        if pivots != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Mat([r[n:] for r in red])

    def kernel(self):
        """Basis of the right kernel over a field (list of column vectors)."""
        red, pivots = self._eliminate()
        nc = self.ncols
        free = [j for j in range(nc) if j not in pivots]
        basis = []
        for f in free:
            v = [0] * nc
            v[f] = 1
            for r, p in enumerate(pivots):
                v[p] = -red[r][f]
            basis.append(v)
        return basis

    def solve(self, rhs):
        """Solve self @ x = rhs over a field; rhs a sequence.  Returns None
        if inconsistent; a particular solution otherwise."""
        aug = Mat([list(r) + [b] for r, b in zip(self.rows, rhs)])
        red, pivots = aug._eliminate()
        nc = self.ncols
        for row_idx in range(len(pivots), self.nrows):
            if red[row_idx][nc]:
                return None
        if pivots and pivots[-1] == nc:
            return None
        x = [0] * nc
        for r, p in enumerate(pivots):
            x[p] = red[r][nc]
        return x

    def to_numpy(self):
        import numpy as np

        def conv(a):
            if hasattr(a, "to_complex"):
                return a.to_complex()
            if hasattr(a, "to_float"):
                return a.to_float()
            return complex(a)

        return np.array([[conv(a) for a in r] for r in self.rows], dtype=complex)

    def serialize(self):
        from .fields import serialize_scalar
        return [[serialize_scalar(a) for a in r] for r in self.rows]

    def __repr__(self):
        return "Mat([" + ",\n     ".join(str(list(r)) for r in self.rows) + "])"


def sum_product(row, vec):
    acc = 0
    for a, b in zip(row, vec):
        if a and b:
            acc = acc + a * b
    return acc


def integer_kernel(mat):
    """Basis of {v in Z^n : A v = 0} for an integer matrix A, as a list of
    primitive integer vectors spanning the full (saturated) kernel lattice.

    Works by column reduction: find unimodular U with A U in column echelon
    form; the columns of U hitting zero columns of A U span ker_Z(A).
    """
    a = [list(r) for r in mat.rows]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    u = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def col_op_swap(j, k):
        for i in range(nr):
            a[i][j], a[i][k] = a[i][k], a[i][j]
        for i in range(nc):
            u[i][j], u[i][k] = u[i][k], u[i][j]

    def col_op_add(j, k, q):
        # column j += q * column k
        for i in range(nr):
            a[i][j] += q * a[i][k]
        for i in range(nc):
            u[i][j] += q * u[i][k]

    col = 0
    for row in range(nr):
        if col >= nc:
            break
        # gcd sweep on this row among columns >= col
        while True:
            nonzero = [j for j in range(col, nc) if a[row][j]]
            if not nonzero:
                break
            jmin = min(nonzero, key=lambda j: abs(a[row][j]))
            col_op_swap(col, jmin)
            done = True
            for j in range(col + 1, nc):
                if a[row][j]:
                    q = a[row][j] // a[row][col]
                    col_op_add(j, col, -q)
                    if a[row][j]:
                        done = False
            if done:
                break
        if a[row][col]:
            col += 1
    kernel_cols = []
    for j in range(nc):
        if all(a[i][j] == 0 for i in range(nr)):
            kernel_cols.append([u[i][j] for i in range(nc)])
    # only columns from the reduced part are genuinely in the kernel
    from math import gcd
    out = []
    for v in kernel_cols:
        g = 0
        for x in v:
            g = gcd(g, x)
        out.append([x // g for x in v] if g else v)
    return out
