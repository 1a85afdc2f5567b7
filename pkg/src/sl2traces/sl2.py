"""2x2 complex matrices: the numeric side every symbolic result is checked
against, plus the companion normal form and the determinant pencil."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .freegroup import Word

DET_TOL = 1e-9
ORACLE_TOL = 1e-8


class SingularMatrix(ArithmeticError):
    pass


class CentralElement(ValueError):
    pass


def _finite(v) -> complex:
    v = complex(v)
    if not (math.isfinite(v.real) and math.isfinite(v.imag)):
        raise ValueError(f"non-finite entry {v!r}")
    return v


@dataclass(frozen=True)
class Mat2:
    """Row-major ``[[a, b], [c, d]]``."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for f in ("a", "b", "c", "d"):
            object.__setattr__(self, f, _finite(getattr(self, f)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def rows(self) -> list:
        return [[self.a, self.b], [self.c, self.d]]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows(), dtype=complex)

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                    self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def __add__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, k) -> "Mat2":
        k = complex(k)
        return Mat2(k * self.a, k * self.b, k * self.c, k * self.d)

    __rmul__ = __mul__

    def trace(self) -> complex:
        return self.a + self.d

    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> "Mat2":
        dt = self.det()
        if abs(dt) <= 1e-300:
            raise SingularMatrix("matrix is singular")
        return Mat2(self.d / dt, -self.b / dt, -self.c / dt, self.a / dt)

    def norm(self) -> float:
        """Largest entry modulus."""
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    def is_sl2(self, tol: float = DET_TOL) -> bool:
        return abs(self.det() - 1) <= tol


I = Mat2(1, 0, 0, 1)
ZERO = Mat2(0, 0, 0, 0)


def identity() -> Mat2:
    return I


def trace(m: Mat2) -> complex:
    return m.trace()


def det(m: Mat2) -> complex:
    return m.det()


def commutator_bracket(A: Mat2, B: Mat2) -> Mat2:
    """Lie bracket ``AB - BA``."""
    return A @ B - B @ A


def dist(A: Mat2, B: Mat2) -> float:
    return (A - B).norm()


def evaluate_word(w: Word, assignment: Mapping[int, Mat2] | Sequence[Mat2]) -> Mat2:
    """Multiply out ``w`` left to right.  ``assignment`` maps generator index
    (1-based) to a matrix, or is a sequence ``(A1, A2[, A3])``."""
    if not isinstance(assignment, Mapping):
        assignment = {i + 1: m for i, m in enumerate(assignment)}
    inverses: dict = {}
    out = I
    for s in w.symbols:
        m = assignment[s.gen]
        if s.sign < 0:
            if s.gen not in inverses:
                inverses[s.gen] = m.inverse()
            m = inverses[s.gen]
        out = out @ m
    return out


def tau(xi: Mat2, eta: Mat2) -> tuple:
    return (xi.trace(), eta.trace(), (xi @ eta).trace())


def char8(A1: Mat2, A2: Mat2, A3: Mat2) -> tuple:
    """``(t1, t2, t3, t12, t23, t13, t123, t132)``."""
    A12 = A1 @ A2
    A13 = A1 @ A3
    return (A1.trace(), A2.trace(), A3.trace(), A12.trace(), (A2 @ A3).trace(),
            A13.trace(), (A12 @ A3).trace(), (A13 @ A2).trace())


def _uniform_complex(rng: np.random.Generator) -> complex:
    re, im = rng.uniform(-1.0, 1.0, size=2)
    return complex(float(re), float(im))


def random_sl2(rng: np.random.Generator) -> Mat2:
    while True:
        a = _uniform_complex(rng)
        b = _uniform_complex(rng)
        c = _uniform_complex(rng)
        if abs(a) >= 1e-3:
            return Mat2(a, b, c, (1 + b * c) / a)


def companion(t) -> Mat2:
    """``[[t, -1], [1, 0]]``: trace ``t``, determinant 1."""
    return Mat2(t, -1, 1, 0)


def conjugate_to_companion(g: Mat2, tol: float = 1e-9) -> Mat2:
    """Find ``h`` in SL(2,C) with ``h g h^-1 = companion(tr g)``.

    In the basis ``(g v, -v)`` for a non-eigenvector ``v`` the matrix of ``g``
    is the companion matrix (Cayley-Hamilton gives ``g^2 v = t g v - v``);
    ``h`` is the inverse of that basis change, rescaled to determinant one.
    Of ``e1``, ``e2`` and ``e1 + e2`` the one farther from being an
    eigenvector is used; all three are eigenvectors only for scalar ``g``.
    """
    if dist(g, I) <= tol or dist(g, -I) <= tol:
        raise CentralElement("g is +-I; only +-I is conjugate to it")
    best = None
    for v in ((1, 0), (0, 1), (1, 1)):
        gv = (g.a * v[0] + g.b * v[1], g.c * v[0] + g.d * v[1])
        P = Mat2(gv[0], -v[0], gv[1], -v[1])
        dP = P.det()
        if best is None or abs(dP) > abs(best[1]):
            best = (P, dP)
    P, dP = best
    P = P * (1 / cmath.sqrt(dP))
    return P.inverse()


def det_pencil(W0: Mat2, K: Mat2) -> tuple:
    """Coefficients ``(c0, c1, c2)`` with ``det(W0 + sK) = c0 + c1 s + c2 s^2``."""
    return (W0.det(), W0.trace() * K.trace() - (W0 @ K).trace(), K.det())


def solve_quadratic(a: complex, b: complex, c: complex) -> tuple:
    """Roots of ``a s^2 + b s + c`` with ``a != 0``, larger-magnitude root
    first, the other recovered from the product to avoid cancellation."""
    a, b, c = complex(a), complex(b), complex(c)
    disc = cmath.sqrt(b * b - 4 * a * c)
    # pick the sign that adds magnitudes
    if (b.conjugate() * disc).real < 0:
        disc = -disc
    q = -(b + disc) / 2
    if q == 0:
        return 0j, 0j
    r1 = q / a
    r2 = c / q
    return r1, r2


# JSON helpers: complex as [re, im], Mat2 as [[a, b], [c, d]].

def complex_to_json(v: complex) -> list:
    v = _finite(v)
    return [v.real, v.imag]


def complex_from_json(obj) -> complex:
    if isinstance(obj, (int, float)) and not isinstance(obj, bool):
        return _finite(obj)
    if not (isinstance(obj, list) and len(obj) == 2
            and all(isinstance(t, (int, float)) and not isinstance(t, bool) for t in obj)):
        raise ValueError(f"expected [re, im], got {obj!r}")
    return _finite(complex(obj[0], obj[1]))


def mat_to_json(m: Mat2) -> list:
    return [[complex_to_json(e) for e in row] for row in m.rows()]


def mat_from_json(obj) -> Mat2:
    if not (isinstance(obj, list) and len(obj) == 2
            and all(isinstance(r, list) and len(r) == 2 for r in obj)):
        raise ValueError(f"expected [[a, b], [c, d]], got {obj!r}")
    return Mat2.from_rows([[complex_from_json(e) for e in row] for row in obj])
