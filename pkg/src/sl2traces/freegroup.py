"""Words in a free group of rank 2 or 3.

Generators are numbered 1, 2, 3 and displayed as X, Y, Z.  A word is an
immutable tuple of :class:`Sym` values kept freely reduced at all times.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

LETTERS = "XYZ"


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class RankError(ValueError):
    pass


class Sym(NamedTuple):
    gen: int
    sign: int

    def inverse(self) -> "Sym":
        return Sym(self.gen, -self.sign)

    @property
    def order(self) -> int:
        # X+ < X- < Y+ < Y- < Z+ < Z-
        return 2 * (self.gen - 1) + (self.sign < 0)

    def __str__(self):
        return LETTERS[self.gen - 1] + ("" if self.sign > 0 else "^-1")


X, Xi = Sym(1, 1), Sym(1, -1)
Y, Yi = Sym(2, 1), Sym(2, -1)
Z, Zi = Sym(3, 1), Sym(3, -1)


def _reduce(symbols: Iterable[Sym]) -> tuple:
    out: list[Sym] = []
    for s in symbols:
        if out and out[-1].gen == s.gen and out[-1].sign == -s.sign:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word.  Construct through :func:`free_reduce` or
    :func:`parse_word`; the constructor reduces its input as well."""

    rank: int
    symbols: tuple = ()

    def __post_init__(self):
        if self.rank not in (2, 3):
            raise RankError(f"rank must be 2 or 3, got {self.rank}")
        syms = tuple(Sym(*s) for s in self.symbols)
        for s in syms:
            if not 1 <= s.gen <= self.rank:
                raise RankError(f"generator {s.gen} out of range for rank {self.rank}")
            if s.sign not in (1, -1):
                raise ValueError(f"bad sign {s.sign}")
        object.__setattr__(self, "symbols", _reduce(syms))

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def is_identity(self) -> bool:
        return not self.symbols

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"Word({format_word(self)!r}, rank={self.rank})"


def identity(rank: int = 2) -> Word:
    return Word(rank, ())


def free_reduce(symbols: Iterable, rank: int = 2) -> Word:
    return Word(rank, tuple(Sym(*s) for s in symbols))


def length(w: Word) -> int:
    return len(w.symbols)


def invert(w: Word) -> Word:
    return Word(w.rank, tuple(s.inverse() for s in reversed(w.symbols)))


def concat(u: Word, v: Word) -> Word:
    if u.rank != v.rank:
        raise RankError(f"cannot concatenate words of rank {u.rank} and {v.rank}")
    return Word(u.rank, u.symbols + v.symbols)


def rotate(w: Word, k: int) -> Word:
    """Cyclic rotation moving the first ``k`` symbols to the end.  The result
    is reduced again, so rotating a non cyclically reduced word may shorten it."""
    n = len(w.symbols)
    if n == 0:
        return w
    k %= n
    return Word(w.rank, w.symbols[k:] + w.symbols[:k])


def is_cyclically_reduced(w: Word) -> bool:
    s = w.symbols
    return len(s) < 2 or s[0] != s[-1].inverse()


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Return ``(core, conjugator)`` with ``w == conjugator * core * conjugator^-1``."""
    s = w.symbols
    i, j = 0, len(s)
    while j - i >= 2 and s[i] == s[j - 1].inverse():
        i += 1
        j -= 1
    return Word(w.rank, s[i:j]), Word(w.rank, s[:i])


def _least_rotation(seq: tuple) -> tuple:
    if not seq:
        return seq
    return min(seq[k:] + seq[:k] for k in range(len(seq)))


def canonical_trace_key(w: Word) -> Word:
    """Least word, under the fixed symbol order, among the rotations of the
    cyclic core of ``w`` and of its inverse.  Words with equal traces under
    every representation because of conjugation or inversion share a key."""
    core, _ = cyclic_reduce(w)
    fwd = tuple(s.order for s in core.symbols)
    bwd = tuple(s.inverse().order for s in reversed(core.symbols))
    best = min(_least_rotation(fwd), _least_rotation(bwd))
    return Word(w.rank, tuple(Sym(o // 2 + 1, -1 if o % 2 else 1) for o in best))


_TOKEN = re.compile(r"\s*(?:([XYZxyz])(?:\^\s*([+-]?\d+)|(')|)|(1))")


def parse_word(text: str, rank: int = 2) -> Word:
    """Parse words such as ``"XY^-1"``, ``"X^2 Y' X"`` or ``"x y X^-3"``.

    ``'`` after a letter means inverse; a lone ``1`` stands for the identity.
    """
    if rank not in (2, 3):
        raise RankError(f"rank must be 2 or 3, got {rank}")
    syms: list[Sym] = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise WordSyntaxError(f"unexpected character {text[bad]!r}", bad)
        letter, exp, prime, one = m.groups()
        start = m.start(1) if letter else m.start(4)
        if letter:
            gen = LETTERS.index(letter.upper()) + 1
            if gen > rank:
                raise RankError(f"generator {letter.upper()} not allowed in rank {rank} "
                                f"(at position {start})")
            e = -1 if prime else (int(exp) if exp is not None else 1)
            if e == 0:
                raise WordSyntaxError("zero exponent", start)
            syms.extend([Sym(gen, 1 if e > 0 else -1)] * abs(e))
        pos = m.end()
    return Word(rank, tuple(syms))


def format_word(w: Word) -> str:
    if not w.symbols:
        return "1"
    parts = []
    run_sym, run = w.symbols[0], 0
    for s in w.symbols + (None,):
        if s == run_sym:
            run += 1
            continue
        letter = LETTERS[run_sym.gen - 1]
        e = run * run_sym.sign
        parts.append(letter if e == 1 else f"{letter}^{e}")
        run_sym, run = s, 1
    return "".join(parts)
