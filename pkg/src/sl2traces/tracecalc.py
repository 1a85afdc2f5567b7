"""Trace polynomials of rank-2 words and the rank-3 sum/product relations.

For a reduced word ``w`` in X, Y the trace of ``w(A, B)`` for A, B in
SL(2,C) is an integer polynomial in ``x = tr A``, ``y = tr B`` and
``z = tr AB``.  It is computed by recursion on the cyclic core of ``w``
using ``tr(PQ) + tr(PQ^-1) = tr(P) tr(Q)``:

* length <= 2: closed forms (``2``, ``x``, ``x^2 - 2``, ``z``, ``xy - z``).
* the word (or its inverse, whichever has fewer inverse symbols) still
  contains an inverse symbol: rotate so the first inverse symbol ``S^-1``
  comes last, ``w ~ v S^-1``, and use ``t(v S^-1) = t(v) t(S) - t(v S)``.
  ``v`` is shorter; ``v S`` has the same length and one inverse symbol fewer,
  or is shorter after cancellation.
* positive words of length >= 3 repeat a generator G.  Take the first such
  generator (X before Y) and its first two occurrences, rotate so that
  ``w = u1 u2`` with both pieces ending in G, and use
  ``t(u1 u2) = t(u1) t(u2) - t(u1 u2^-1)``; ``u1 u2^-1`` cancels at the
  junction, so every branch is shorter.

The measure (length, fewer-inverse count) drops lexicographically at each
step, so the recursion terminates.  Results are memoised by
:func:`canonical_trace_key`, under which conjugate and inverse words coincide.
"""

from __future__ import annotations

import threading

from .freegroup import RankError, Sym, Word, canonical_trace_key, invert
from .polyring import Poly, poly_parse

x, y, z = Poly.var("x"), Poly.var("y"), Poly.var("z")
_GEN_VAR = {1: x, 2: y}


class TraceTable:
    """Memo table from canonical word keys to trace polynomials.

    ``cap`` bounds the number of stored entries (extra results are computed
    but not stored).  ``enabled=False`` turns caching off entirely.
    """

    def __init__(self, cap: int | None = None, enabled: bool = True):
        if cap is not None and cap <= 0:
            raise ValueError("cap must be positive")
        self.cap = cap
        self.enabled = enabled
        self._memo: dict = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._memo)

    def __contains__(self, key):
        return key in self._memo

    def items(self):
        with self._lock:
            return list(self._memo.items())

    def get(self, key):
        if not self.enabled:
            return None
        return self._memo.get(key)

    def put(self, key, value: Poly):
        if not self.enabled:
            return
        with self._lock:
            if key in self._memo:
                return
            if self.cap is not None and len(self._memo) >= self.cap:
                return
            self._memo[key] = value

    def clear(self):
        with self._lock:
            self._memo.clear()


_default_table = TraceTable()


def default_table() -> TraceTable:
    return _default_table


def trace_poly(w: Word, table: TraceTable | None = None) -> Poly:
    """Integer polynomial ``f_w(x, y, z)`` with ``tr w(A, B) = f_w(tr A, tr B, tr AB)``."""
    if w.rank != 2:
        raise RankError("trace polynomials are only computed for rank-2 words")
    if table is None:
        table = _default_table
    return _trace(canonical_trace_key(w).symbols, table)


def _trace(key: tuple, table: TraceTable) -> Poly:
    hit = table.get(key)
    if hit is not None:
        return hit
    result = _expand(key, table)
    table.put(key, result)
    return result


def _t(symbols, table: TraceTable) -> Poly:
    return _trace(canonical_trace_key(Word(2, tuple(symbols))).symbols, table)


def _base(w: tuple) -> Poly:
    n = len(w)
    if n == 0:
        return Poly.const(2)
    if n == 1:
        return _GEN_VAR[w[0].gen]
    a, b = w
    if a.gen == b.gen:
        return _GEN_VAR[a.gen] ** 2 - 2
    if a.sign == b.sign:
        return z
    return x * y - z


def _expand(w: tuple, table: TraceTable) -> Poly:
    n = len(w)
    if n <= 2:
        return _base(w)
    neg = sum(1 for s in w if s.sign < 0)
    if 2 * neg > n:
        w = invert(Word(2, w)).symbols
        neg = n - neg
    if neg:
        i = next(k for k, s in enumerate(w) if s.sign < 0)
        rot = w[i + 1:] + w[:i + 1]
        v, S = rot[:-1], rot[-1].inverse()
        return _t(v, table) * _GEN_VAR[S.gen] - _t(v + (S,), table)
    gen = 1 if sum(1 for s in w if s.gen == 1) >= 2 else 2
    i1, i2 = [k for k, s in enumerate(w) if s.gen == gen][:2]
    rot = w[i2 + 1:] + w[:i2 + 1]
    cut = n - (i2 - i1)
    u1, u2 = rot[:cut], rot[cut:]
    u2inv = tuple(Sym(s.gen, -s.sign) for s in reversed(u2))
    return _t(u1, table) * _t(u2, table) - _t(u1 + u2inv, table)


def kappa_poly() -> Poly:
    """``x^2 + y^2 + z^2 - xyz - 2``, the trace of the commutator."""
    return x ** 2 + y ** 2 + z ** 2 - x * y * z - 2


def fricke_sum_rhs() -> Poly:
    """``t123 + t132`` in terms of the six shorter traces."""
    return poly_parse("t12*t3 + t23*t1 + t13*t2 - t1*t2*t3")


def fricke_product_rhs() -> Poly:
    """``t123 * t132`` in terms of the six shorter traces."""
    return poly_parse(
        "t1^2 + t2^2 + t3^2 + t12^2 + t23^2 + t13^2"
        " - t1*t2*t12 - t2*t3*t23 - t3*t1*t13 + t12*t23*t13 - 4"
    )
