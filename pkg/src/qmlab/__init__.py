"""Exact-arithmetic toolkit for quaternionic abelian surfaces.

Scalar towers (rationals, the 8th cyclotomic field, real quadratic fields,
rational function fields and quadratic extensions of all of these), sparse
homogeneous polynomials, integer symplectic machinery, quaternion orders,
the finite Heisenberg action on P^7, Kummer quadrics and nodes, invariants
of genus-two curves, and a numeric theta-null engine.  Everything that can
be checked exactly is checked exactly; analytic points carry explicit
tolerances.
"""

__version__ = "0.1.0"
