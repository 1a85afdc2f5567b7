"""Rank-3 characters.

Coordinates are ``(t1, t2, t3, t12, t23, t13, t123, t132)``.  The last two
are roots of ``lam^2 - P lam + Q`` with ``P``, ``Q`` the sum and product
polynomials in the first six, and every six-tuple is the trace data of some
triple of SL(2,C) matrices.
"""

from __future__ import annotations

import cmath
from typing import NamedTuple

from .charvar import IRR_TOL, kappa_value, slice_pair
from .polyring import RANK3_VARS, poly_eval
from .sl2 import Mat2, commutator_bracket, companion, det_pencil, solve_quadratic
from .tracecalc import fricke_product_rhs, fricke_sum_rhs

SIX = RANK3_VARS[:6]
_P = fricke_sum_rhs()
_Q = fricke_product_rhs()


class Lift3(NamedTuple):
    A1: Mat2
    A2: Mat2
    A3: Mat2
    branch: str  # "irreducible", "bothplus" or "plusminus"

    @property
    def triple(self) -> tuple:
        return (self.A1, self.A2, self.A3)


def _six(s) -> dict:
    if len(s) < 6:
        raise ValueError("need at least six trace coordinates")
    return {v: complex(t) for v, t in zip(SIX, s)}


def sum_rhs(s) -> complex:
    return poly_eval(_P, _six(s))


def product_rhs(s) -> complex:
    return poly_eval(_Q, _six(s))


def fricke_scale(c) -> float:
    return 1 + max(abs(complex(t)) for t in c) ** 4


def verify_fricke(c) -> tuple:
    """Residuals ``(t123 + t132 - P, t123 * t132 - Q)`` of an eight-tuple."""
    if len(c) != 8:
        raise ValueError("need eight trace coordinates")
    t123, t132 = complex(c[6]), complex(c[7])
    return t123 + t132 - sum_rhs(c), t123 * t132 - product_rhs(c)


def _desc(v: complex):
    return (-v.real, -v.imag)


def t123_roots(s) -> tuple:
    """The two values of ``t123`` over a six-tuple, larger (real, imag) first."""
    r1, r2 = solve_quadratic(1, -sum_rhs(s), product_rhs(s))
    return tuple(sorted((r1, r2), key=_desc))


def solve_underdetermined(rows: list, rhs: list, eps: float = 1e-13) -> list:
    """One solution of a consistent system with more unknowns than equations.

    Gaussian elimination with partial pivoting; columns without a usable
    pivot become free variables set to zero.
    """
    m, n = len(rows), len(rows[0])
    aug = [[complex(v) for v in r] + [complex(b)] for r, b in zip(rows, rhs)]
    scale = max((abs(v) for r in aug for v in r[:n]), default=0.0) or 1.0
    pivots = []
    r = 0
    for col in range(n):
        if r == m:
            break
        piv = max(range(r, m), key=lambda i: abs(aug[i][col]))
        if abs(aug[piv][col]) <= eps * scale:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        for i in range(r + 1, m):
            f = aug[i][col] / aug[r][col]
            if f:
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    for i in range(r, m):
        if abs(aug[i][n]) > 1e-9 * (1 + max(abs(b) for b in rhs)):
            raise ValueError("inconsistent linear system")
    sol = [0j] * n
    for i in reversed(range(r)):
        col = pivots[i]
        acc = aug[i][n] - sum(aug[i][j] * sol[j] for j in range(col + 1, n))
        sol[col] = acc / aug[i][col]
    return sol


def trace_condition_rows(A1: Mat2, A2: Mat2) -> list:
    """Coefficient rows of ``tr W``, ``tr A2 W``, ``tr A1 W`` in the
    unknowns ``(w11, w12, w21, w22)``."""

    def row(A: Mat2):
        return [A.a, A.c, A.b, A.d]

    return [[1, 0, 0, 1], row(A2), row(A1)]


def particular_solution(A1: Mat2, A2: Mat2, t3, t23, t13) -> Mat2:
    w = solve_underdetermined(trace_condition_rows(A1, A2), [t3, t23, t13])
    return Mat2(*w)


def _root_pref(s: complex):
    return (abs(s), -s.real, -s.imag)


def _reducible_lift(t) -> Lift3:
    t1, t2, t3, t12, t23, t13 = t
    a1, a2 = _eig(t1), _eig(t2)
    both = a1 * a2 + 1 / (a1 * a2)
    mixed = a1 / a2 + a2 / a1
    A2 = Mat2(a2, t23 - a2 * t3, 0, 1 / a2)
    A3 = companion(t3)
    if abs(t12 - both) <= abs(t12 - mixed):
        return Lift3(Mat2(a1, t13 - a1 * t3, 0, 1 / a1), A2, A3, "bothplus")
    return Lift3(Mat2(1 / a1, t13 - t3 / a1, 0, a1), A2, A3, "plusminus")


def _eig(t: complex) -> complex:
    return (t + cmath.sqrt(t * t - 4 + 0j)) / 2


def lift_char3_diagnostic(s, irr_tol: float = IRR_TOL) -> Lift3:
    t = tuple(complex(v) for v in s[:6])
    if len(t) != 6:
        raise ValueError("need six trace coordinates")
    t1, t2, t3, t12, t23, t13 = t
    if abs(kappa_value(t1, t2, t12) - 2) <= irr_tol:
        return _reducible_lift(t)
    A1, A2 = slice_pair(t1, t2, t12)
    W0 = particular_solution(A1, A2, t3, t23, t13)
    K = commutator_bracket(A1, A2)
    c0, c1, c2 = det_pencil(W0, K)
    roots = solve_quadratic(c2, c1, c0 - 1)
    s_ = min(roots, key=_root_pref)
    return Lift3(A1, A2, W0 + K * s_, "irreducible")


def lift_char3(s, irr_tol: float = IRR_TOL) -> tuple:
    """Matrices ``(A1, A2, A3)`` in SL(2,C) realizing the six traces
    ``(t1, t2, t3, t12, t23, t13)``."""
    return lift_char3_diagnostic(s, irr_tol).triple
