"""Rank-2 characters: kappa, lifting (x, y, z) to a matrix pair,
irreducibility, the simultaneous inverting involution and conjugators."""

from __future__ import annotations

import cmath

import numpy as np

from .sl2 import Mat2, commutator_bracket, companion, dist, tau

IRR_TOL = 1e-8


class ReduciblePair(ValueError):
    pass


class NotConjugate(ValueError):
    pass


def kappa_value(x, y, z) -> complex:
    x, y, z = complex(x), complex(y), complex(z)
    return x * x + y * y + z * z - x * y * z - 2


def zeta_root(t) -> complex:
    """A root of ``zeta + 1/zeta = t``, taken with ``|zeta| >= 1``."""
    t = complex(t)
    zeta = (t + cmath.sqrt(t * t - 4 + 0j)) / 2
    if abs(zeta) < 1:
        zeta = 1 / zeta
    return zeta


def slice_pair(x, y, z) -> tuple:
    """``([[x, -1], [1, 0]], [[0, zeta], [-1/zeta, y]])`` with ``zeta + 1/zeta = z``."""
    zeta = zeta_root(z)
    return companion(x), Mat2(0, zeta, -1 / zeta, y)


def lift_char(x, y, z) -> tuple:
    """A pair ``(xi, eta)`` in SL(2,C) with ``tau(xi, eta) == (x, y, z)``."""
    return slice_pair(x, y, z)


def is_irreducible_char(x, y, z, tol: float = IRR_TOL) -> bool:
    return abs(kappa_value(x, y, z) - 2) > tol


def is_irreducible(xi: Mat2, eta: Mat2, tol: float = IRR_TOL) -> bool:
    return is_irreducible_char(*tau(xi, eta), tol=tol)


def inverting_element(xi: Mat2, eta: Mat2) -> Mat2:
    """``g`` with ``g xi g^-1 = xi^-1`` and ``g eta g^-1 = eta^-1``.

    ``g`` is the bracket ``xi eta - eta xi`` rescaled to determinant one; the
    bracket has determinant ``2 - kappa`` and so vanishes exactly on
    reducible pairs.
    """
    L = commutator_bracket(xi, eta)
    dL = L.det()
    if abs(dL) <= 1e-12:
        raise ReduciblePair("pair is reducible (kappa = 2); no inverting element")
    # + 0j clears a negative-zero imaginary part, keeping sqrt on the principal branch
    return L * cmath.sqrt(1 / dL + 0j)


def _normalize_sign(g: Mat2, thresh: float = 1e-10) -> Mat2:
    for e in (g.a, g.b, g.c, g.d):
        if abs(e) > thresh:
            if e.real < 0 or (e.real == 0 and e.imag < 0):
                return -g
            return g
    return g


def _commutation_system(A: Mat2, B: Mat2) -> np.ndarray:
    """Rows of ``g A - B g = 0`` in the unknowns ``(g11, g12, g21, g22)``."""
    (a11, a12), (a21, a22) = A.rows()
    (b11, b12), (b21, b22) = B.rows()
    return np.array([
        [a11 - b11, a21, -b12, 0],
        [a12, a22 - b11, 0, -b12],
        [-b21, 0, a11 - b22, a21],
        [0, -b21, a12, a22 - b22],
    ], dtype=complex)


def conjugator(p: tuple, q: tuple, tol: float = 1e-7, char_tol: float = 1e-8,
               irr_tol: float = IRR_TOL) -> Mat2:
    """``g`` in SL(2,C) with ``q == (g xi g^-1, g eta g^-1)`` for ``p = (xi, eta)``.

    Solves the eight linear equations ``g xi = xi' g``, ``g eta = eta' g`` for
    the smallest right singular vector of the stacked system.  The answer is
    unique up to sign for irreducible pairs; the sign is fixed so the first
    entry of non-negligible size has non-negative real part.
    """
    xi, eta = p
    xi2, eta2 = q
    tp, tq = tau(xi, eta), tau(xi2, eta2)
    if not is_irreducible(xi, eta, irr_tol):
        raise ReduciblePair("reducible pair: conjugacy is not decided by the character")
    if max(abs(a - b) for a, b in zip(tp, tq)) > char_tol * (1 + max(abs(v) for v in tp)):
        raise NotConjugate("trace triples differ")
    M = np.vstack([_commutation_system(xi, xi2), _commutation_system(eta, eta2)])
    _, _, vh = np.linalg.svd(M)
    v = vh[-1].conj()
    g = Mat2(*(complex(e) for e in v))
    dg = g.det()
    if abs(dg) <= 1e-300:
        raise NotConjugate("null direction is singular")
    g = _normalize_sign(g * (1 / cmath.sqrt(dg)))
    ginv = g.inverse()
    if dist(g @ xi @ ginv, xi2) > tol or dist(g @ eta @ ginv, eta2) > tol:
        raise NotConjugate("no conjugator within tolerance")
    return g
