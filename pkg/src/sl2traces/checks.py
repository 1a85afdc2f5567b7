"""Randomized identity checks behind ``sl2traces verify``.

Every check returns the worst residual it saw; trial ``i`` of a check draws
from its own generator seeded by ``(seed, check index, i)`` so results do not
depend on which other checks run.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import charvar, charvar3
from .freegroup import Sym, Word, concat, invert
from .polyring import LaurentPoly, Poly, poly_eval, symmetrize_laurent
from .sl2 import (I, Mat2, char8, commutator_bracket, det_pencil, dist, evaluate_word,
                  random_sl2, tau)
from .tracecalc import TraceTable, trace_poly


@dataclass
class Tolerances:
    det_tol: float = 1e-9
    oracle_tol: float = 1e-8
    irr_tol: float = 1e-8


@dataclass
class CheckResult:
    name: str
    residual: float
    tol: float

    @property
    def ok(self) -> bool:
        return self.residual <= self.tol


def random_word(rng: np.random.Generator, n: int, rank: int = 2) -> Word:
    out: list[Sym] = []
    while len(out) < n:
        s = Sym(int(rng.integers(1, rank + 1)), int(rng.choice((1, -1))))
        if out and out[-1] == s.inverse():
            continue
        out.append(s)
    return Word(rank, tuple(out))


def random_complex(rng: np.random.Generator, r: float = 3.0) -> complex:
    re, im = rng.uniform(-r, r, size=2)
    return complex(float(re), float(im))


def random_irreducible_pair(rng: np.random.Generator, margin: float = 1e-3) -> tuple:
    while True:
        xi, eta = random_sl2(rng), random_sl2(rng)
        if abs(charvar.kappa_value(*tau(xi, eta)) - 2) > margin:
            return xi, eta


def random_upper_pair(rng: np.random.Generator) -> tuple:
    def tri():
        a = random_complex(rng, 2.0)
        while abs(a) < 0.1:
            a = random_complex(rng, 2.0)
        return Mat2(a, random_complex(rng, 2.0), 0, 1 / a)
    return tri(), tri()


def random_symmetric_laurent(rng: np.random.Generator, max_deg: int = 6) -> LaurentPoly:
    coeffs = {0: Poly.const(int(rng.integers(-20, 21)))}
    for n in range(1, int(rng.integers(1, max_deg + 1)) + 1):
        c = Poly.const(int(rng.integers(-20, 21)))
        coeffs[n] = c
        coeffs[-n] = c
    return LaurentPoly(coeffs)


def _rel(a: complex, b: complex) -> float:
    return abs(a - b) / (1 + abs(a))


# each check: (rng, tolerances, table) -> residual for one trial

def _ch(rng, tol, table):
    xi = random_sl2(rng)
    return (xi @ xi - xi * xi.trace() + I * xi.det()).norm()


def _sum_invo(rng, tol, table):
    xi = random_sl2(rng)
    return (xi + xi.inverse() - I * xi.trace()).norm()


def _basic_numeric(rng, tol, table):
    xi, eta = random_sl2(rng), random_sl2(rng)
    return abs((xi @ eta).trace() + (xi @ eta.inverse()).trace() - xi.trace() * eta.trace())


def _det_bracket(rng, tol, table):
    xi, eta = random_sl2(rng), random_sl2(rng)
    return abs(commutator_bracket(xi, eta).det() - (2 - charvar.kappa_value(*tau(xi, eta))))


def _trace_oracle(rng, tol, table):
    w = random_word(rng, int(rng.integers(0, 13)))
    p = trace_poly(w, table)
    worst = 0.0
    for _ in range(4):
        xi, eta = random_sl2(rng), random_sl2(rng)
        tr = evaluate_word(w, (xi, eta)).trace()
        worst = max(worst, _rel(tr, poly_eval(p, dict(zip("xyz", tau(xi, eta))))))
    return worst


def _basic_symbolic(rng, tol, table):
    u = random_word(rng, int(rng.integers(0, 9)))
    v = random_word(rng, int(rng.integers(0, 9)))
    lhs = trace_poly(concat(u, v), table) + trace_poly(concat(u, invert(v)), table)
    return 0.0 if lhs == trace_poly(u, table) * trace_poly(v, table) else float("inf")


def _lift(rng, tol, table):
    c = tuple(random_complex(rng) for _ in range(3))
    xi, eta = charvar.lift_char(*c)
    return max(max(abs(a - b) for a, b in zip(tau(xi, eta), c)),
               abs(xi.det() - 1), abs(eta.det() - 1))


def _invol(rng, tol, table):
    xi, eta = random_irreducible_pair(rng)
    g = charvar.inverting_element(xi, eta)
    gi = g.inverse()
    return max(abs(g.trace()), abs(g.det() - 1), dist(g @ g, -I),
               dist(g @ xi @ gi, xi.inverse()), dist(g @ eta @ gi, eta.inverse()))


def _conj(rng, tol, table):
    xi, eta = random_irreducible_pair(rng)
    h = random_sl2(rng)
    hi = h.inverse()
    q = (h @ xi @ hi, h @ eta @ hi)
    g = charvar.conjugator((xi, eta), q, irr_tol=tol.irr_tol)
    return min(dist(g, h), dist(g, -h))


def _irreducible(rng, tol, table):
    xi, eta = random_upper_pair(rng)
    return abs(charvar.kappa_value(*tau(xi, eta)) - 2)


def _laurent(rng, tol, table):
    F = random_symmetric_laurent(rng)
    h = symmetrize_laurent(F)
    zeta = random_complex(rng, 1.5)
    while abs(zeta) < 0.5:
        zeta = random_complex(rng, 1.5)
    lhs = F.evaluate(zeta)
    return abs(lhs - poly_eval(h, {"u": zeta + 1 / zeta})) / (1 + abs(lhs))


def _pencil(rng, tol, table):
    W0 = Mat2(*(random_complex(rng, 1.0) for _ in range(4)))
    K = Mat2(*(random_complex(rng, 1.0) for _ in range(4)))
    c0, c1, c2 = det_pencil(W0, K)
    return max(abs((W0 + K * s).det() - (c0 + c1 * s + c2 * s * s)) for s in (-1, 0.5, 2))


def _random_triple(rng):
    return random_sl2(rng), random_sl2(rng), random_sl2(rng)


def _fricke_sum(rng, tol, table):
    c = char8(*_random_triple(rng))
    return abs(charvar3.verify_fricke(c)[0]) / charvar3.fricke_scale(c)


def _fricke_product(rng, tol, table):
    c = char8(*_random_triple(rng))
    return abs(charvar3.verify_fricke(c)[1]) / charvar3.fricke_scale(c)


def _intermediate(rng, tol, table):
    A1, A2, A3 = _random_triple(rng)
    tr = lambda *ms: _prod(ms).trace()  # noqa: E731
    X, Y, Z = A1, A2, A3
    Xi, Zi = X.inverse(), Z.inverse()
    zxzy = tr(Z, X, Z, Y) - (tr(Z, X) * tr(Z, Y) - tr(X, Y.inverse()))
    xzixizi = tr(X, Zi, Xi, Zi) - (tr(X) * tr(Z) * tr(Z, X) - tr(Z, X) ** 2 - tr(X) ** 2 + 2)
    xyzxzy = tr(X, Y, Z, X, Z, Y) - (tr(X, Y) * tr(Z, X, Z, Y) - tr(X, Zi, Xi, Zi))
    scale = 1 + max(m.norm() for m in (X, Y, Z)) ** 6
    return max(abs(zxzy), abs(xzixizi), abs(xyzxzy)) / scale


def _prod(ms):
    out = I
    for m in ms:
        out = out @ m
    return out


def _roots(rng, tol, table):
    s = [random_complex(rng) for _ in range(6)]
    r1, r2 = charvar3.t123_roots(s)
    scale = charvar3.fricke_scale(s)
    return max(abs(r1 + r2 - charvar3.sum_rhs(s)), abs(r1 * r2 - charvar3.product_rhs(s))) / scale


def random_six_tuple(rng: np.random.Generator, kind: str = "generic") -> list:
    s = [random_complex(rng) for _ in range(6)]
    if kind == "t12_pm2":
        s[3] = complex(rng.choice((2.0, -2.0)))
    elif kind == "reducible":
        a1, a2 = random_complex(rng, 2.0), random_complex(rng, 2.0)
        while abs(a1) < 0.2 or abs(a2) < 0.2:
            a1, a2 = random_complex(rng, 2.0), random_complex(rng, 2.0)
        s[0], s[1] = a1 + 1 / a1, a2 + 1 / a2
        s[3] = a1 * a2 + 1 / (a1 * a2) if rng.random() < 0.5 else a1 / a2 + a2 / a1
    return s


def _lift3(rng, tol, table):
    kind = ("generic", "t12_pm2", "reducible")[int(rng.integers(0, 3))]
    s = random_six_tuple(rng, kind)
    out = charvar3.lift_char3(s, irr_tol=tol.irr_tol)
    c = char8(*out)
    return max(max(abs(a - b) for a, b in zip(c[:6], s)), *(abs(m.det() - 1) for m in out))


SUITES: dict[str, list] = {
    "basic": [
        ("cayley_hamilton", _ch, 1e-10),
        ("sum_with_inverse", _sum_invo, 1e-10),
        ("basic_identity_numeric", _basic_numeric, 1e-10),
        ("det_bracket_2_minus_kappa", _det_bracket, 1e-8),
        ("trace_poly_vs_matrices", _trace_oracle, 1e-6),
        ("basic_identity_symbolic", _basic_symbolic, 0.0),
        ("lift_round_trip", _lift, 1e-9),
        ("inverting_element", _invol, 1e-8),
        ("conjugator_recovers_h", _conj, 1e-6),
        ("reducible_kappa_is_2", _irreducible, 1e-10),
        ("laurent_symmetrization", _laurent, 1e-9),
        ("det_pencil", _pencil, 1e-10),
    ],
    "fricke": [
        ("fricke_sum", _fricke_sum, 1e-8),
        ("fricke_product", _fricke_product, 1e-8),
        ("intermediate_identities", _intermediate, 1e-8),
        ("t123_roots_vieta", _roots, 1e-9),
        ("lift3_round_trip", _lift3, 1e-7),
    ],
}
SUITES["all"] = SUITES["basic"] + SUITES["fricke"]

_INDEX = {name: i for i, (name, _, _) in enumerate(SUITES["all"])}


def run_suite(suite: str, trials: int, seed: int, tol: Tolerances | None = None,
              table: TraceTable | None = None) -> list[CheckResult]:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}")
    tol = tol or Tolerances()
    table = table if table is not None else TraceTable()
    results = []
    for name, fn, limit in SUITES[suite]:
        worst = 0.0
        for i in range(trials):
            rng = np.random.default_rng([seed, _INDEX[name], i])
            worst = max(worst, float(fn(rng, tol, table)))
        results.append(CheckResult(name, worst, limit))
    return results

