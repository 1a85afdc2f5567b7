"""Sparse multivariate polynomials with integer coefficients.

A :class:`Poly` is a map from monomials to Python ints.  Monomials are stored
as sorted tuples of ``(variable, exponent)`` pairs, so polynomials in
different variable sets combine without any ring bookkeeping.  Python ints
are arbitrary precision, which keeps the trace recursion exact.
"""

from __future__ import annotations

import re
from functools import lru_cache
from numbers import Integral
from typing import Iterable, Mapping

RANK2_VARS = ("x", "y", "z")
RANK3_VARS = ("t1", "t2", "t3", "t12", "t23", "t13", "t123", "t132")
_VAR_RANK = {v: i for i, v in enumerate(RANK2_VARS + RANK3_VARS + ("u",))}


def var_key(name: str):
    return (_VAR_RANK.get(name, len(_VAR_RANK)), name)


class PolySyntaxError(ValueError):
    pass


class NotSymmetric(ValueError):
    pass


def _mono(pairs: Iterable) -> tuple:
    acc: dict[str, int] = {}
    for v, e in pairs:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted(((v, e) for v, e in acc.items() if e), key=lambda p: var_key(p[0])))


def _mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    return _mono(a + b)


class Poly:
    __slots__ = ("terms", "_hash", "_ordered")

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        for m, c in (terms or {}).items():
            if not isinstance(c, Integral):
                raise TypeError(f"coefficients must be integers, got {type(c).__name__}")
            if c:
                clean[_mono(m)] = clean.get(_mono(m), 0) + int(c)
        self.terms = {m: c for m, c in clean.items() if c}
        self._hash = None
        self._ordered = None

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls({(): c})

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({((name, 1),): 1})

    @property
    def variables(self) -> tuple:
        names = {v for m in self.terms for v, _ in m}
        return tuple(sorted(names, key=var_key))

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Integral):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, Integral):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = _mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = Poly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, k: int) -> "Poly":
        return self * Poly.const(k)

    def ordered_terms(self) -> list:
        if self._ordered is None:
            self._ordered = sorted(self.terms.items(), key=lambda mc: display_key(mc[0]))
        return self._ordered

    def __call__(self, *args, **kwargs):
        return poly_eval(self, dict(*args, **kwargs))

    def __str__(self):
        return poly_format(self)

    def __repr__(self):
        return f"Poly({poly_format(self)!r})"


def _raw(terms: dict) -> Poly:
    p = Poly.__new__(Poly)
    p.terms = {m: c for m, c in terms.items() if c}
    p._hash = None
    p._ordered = None
    return p


@lru_cache(maxsize=None)
def display_key(mono: tuple):
    """Sort key for printing and summation order.

    Monomials with a larger single-variable exponent come first; ties are
    broken lexicographically on the exponent vector in the fixed variable
    order (x > y > z, t1 > t2 > ... > t132), then by total degree.  This puts
    ``x^2 + y^2 + z^2 - x*y*z - 2`` in its familiar order.
    """
    exps = dict(mono)
    names = sorted(exps, key=var_key)
    vec = tuple(-exps.get(v, 0) for v in sorted(set(names) | set(_VAR_RANK), key=var_key))
    top = max(exps.values(), default=0)
    return (-top, vec, -sum(exps.values()))


def poly_eval(p: Poly, assignment: Mapping[str, complex]) -> complex:
    missing = [v for v in p.variables if v not in assignment]
    if missing:
        raise KeyError(f"no value bound for {', '.join(missing)}")
    total = 0j
    for m, c in p.ordered_terms():
        t = complex(c)
        for v, e in m:
            t *= complex(assignment[v]) ** e
        total += t
    return total


def _format_mono(m: tuple) -> str:
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)


def poly_format(p: Poly) -> str:
    if not p.terms:
        return "0"
    out = []
    for i, (m, c) in enumerate(p.ordered_terms()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not m:
            body = str(a)
        elif a == 1:
            body = _format_mono(m)
        else:
            body = f"{a}*{_format_mono(m)}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_PTOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\^)|(\*)|([+-])|(\()|(\)))")


def poly_parse(text: str) -> Poly:
    """Parse expressions like ``x^2*y - 2*z + 2`` (``*`` may be omitted
    between factors; parentheses are allowed)."""
    toks = []
    pos = 0
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _PTOKEN.match(text, pos)
        if not m:
            raise PolySyntaxError(f"unexpected {text[pos:].lstrip()[:1]!r} at position {pos}")
        kind = m.lastindex
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append((0, "", len(text)))
    i = 0

    def peek():
        return toks[i]

    def take():
        nonlocal i
        t = toks[i]
        i += 1
        return t

    def expr():
        neg = False
        if peek()[0] == 5:
            neg = take()[1] == "-"
        acc = term()
        if neg:
            acc = -acc
        while peek()[0] == 5:
            op = take()[1]
            rhs = term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term():
        acc = power()
        while True:
            k = peek()[0]
            if k == 4:
                take()
                acc = acc * power()
            elif k in (1, 2, 6):
                acc = acc * power()
            else:
                return acc

    def power():
        base = atom()
        if peek()[0] == 3:
            take()
            k, val, at = take()
            if k != 1:
                raise PolySyntaxError(f"expected exponent at position {at}")
            base = base ** int(val)
        return base

    def atom():
        k, val, at = take()
        if k == 1:
            return Poly.const(int(val))
        if k == 2:
            return Poly.var(val)
        if k == 6:
            inner = expr()
            if take()[0] != 7:
                raise PolySyntaxError(f"missing ')' for '(' at position {at}")
            return inner
        raise PolySyntaxError(f"unexpected {val or 'end of input'!r} at position {at}")

    result = expr()
    if peek()[0] != 0:
        _, val, at = peek()
        raise PolySyntaxError(f"unexpected {val!r} at position {at}")
    return result


class LaurentPoly:
    """Laurent polynomial in one variable with :class:`Poly` coefficients,
    stored as ``{exponent: coefficient}``."""

    def __init__(self, coeffs: Mapping[int, Poly | int] | None = None):
        clean = {}
        for n, c in (coeffs or {}).items():
            c = Poly._coerce(c)
            if not c.is_zero():
                clean[int(n)] = c
        self.coeffs = dict(sorted(clean.items()))

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            out[n] = out.get(n, Poly()) + c
        return LaurentPoly(out)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict = {}
        for n, a in self.coeffs.items():
            for k, b in other.coeffs.items():
                out[n + k] = out.get(n + k, Poly()) + a * b
        return LaurentPoly(out)

    def flip(self) -> "LaurentPoly":
        """Image under zeta <-> 1/zeta."""
        return LaurentPoly({-n: c for n, c in self.coeffs.items()})

    def is_symmetric(self) -> bool:
        return self == self.flip()

    def evaluate(self, zeta: complex, assignment: Mapping[str, complex] | None = None) -> complex:
        assignment = assignment or {}
        return sum((poly_eval(c, assignment) * zeta ** n for n, c in self.coeffs.items()), 0j)


def chebyshev_sum(n: int, var: str = "u") -> Poly:
    """The polynomial p_n with zeta^n + zeta^-n = p_n(zeta + 1/zeta)."""
    u = Poly.var(var)
    prev, cur = Poly.const(2), u
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, u * cur - prev
    return cur


def symmetrize_laurent(F: LaurentPoly, var: str = "u") -> Poly:
    """Rewrite a zeta <-> 1/zeta invariant Laurent polynomial as a polynomial
    in ``u = zeta + 1/zeta``."""
    if not F.is_symmetric():
        raise NotSymmetric("Laurent polynomial is not invariant under zeta -> 1/zeta")
    h = F.coeffs.get(0, Poly())
    for n, c in F.coeffs.items():
        if n > 0:
            h = h + c * chebyshev_sum(n, var)
    return h
