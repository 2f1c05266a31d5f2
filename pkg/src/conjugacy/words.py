"""Combinatorics on words: rotations, delays, primitive roots, cuts and witnesses.

Words are plain ``str`` values over the lowercase Latin alphabet; the empty
string is the empty word.  Every function here is pure.
"""

from __future__ import annotations

from math import gcd
from typing import NamedTuple, Optional

ALPHABET = frozenset("abcdefghijklmnopqrstuvwxyz")

INNER = "inner"
OUTER = "outer"
SIDES = (INNER, OUTER)


class WordPair(NamedTuple):
    """An element (u, v) of the product monoid A* x A*."""

    u: str
    v: str

    def cat(self, other: "WordPair") -> "WordPair":
        return WordPair(self.u + other.u, self.v + other.v)

    def power(self, n: int) -> "WordPair":
        return WordPair(self.u * n, self.v * n)

    def is_empty(self) -> bool:
        return not self.u and not self.v

    def __str__(self) -> str:
        return f"({self.u},{self.v})"


EMPTY_PAIR = WordPair("", "")


class Cut(NamedTuple):
    """A pair (x, y) with x·y = u and y·x = v for the pair (u, v) it cuts."""

    x: str
    y: str

    def is_empty(self) -> bool:
        return not self.x or not self.y


def check_word(w: str) -> str:
    bad = [c for c in w if c not in ALPHABET]
    if bad:
        raise ValueError(f"symbol {bad[0]!r} is outside the alphabet a-z")
    return w


def cyclic_shift(w: str, i: int) -> str:
    """Rotate ``w`` left ``i`` times; ``i`` is reduced modulo ``len(w)``."""
    if i < 0:
        raise ValueError("shift count must be non-negative")
    if not w:
        return w
    i %= len(w)
    return w[i:] + w[:i]


def reverse(w: str) -> str:
    return w[::-1]


def prefix_delay(u: str, v: str) -> Optional[str]:
    """Return what remains of the longer word after removing the shorter prefix.

    ``None`` when neither word is a prefix of the other.
    """
    if v.startswith(u):
        return v[len(u):]
    if u.startswith(v):
        return u[len(v):]
    return None


def suffix_delay(u: str, v: str) -> Optional[str]:
    """Mirror of :func:`prefix_delay` on suffixes."""
    if v.endswith(u):
        return v[: len(v) - len(u)]
    if u.endswith(v):
        return u[: len(u) - len(v)]
    return None


def _smallest_period_shift(w: str) -> int:
    # smallest i in 1..|w| with cyclic_shift(w, i) == w
    return (w + w).find(w, 1)


def primitive_root(w: str) -> tuple[str, int]:
    """Return ``(root, exponent)`` with ``root ** exponent == w`` and root primitive."""
    if not w:
        raise ValueError("the empty word has no primitive root")
    i = _smallest_period_shift(w)
    # the smallest self-rotation always divides |w|
    return w[:i], len(w) // i


def is_primitive(w: str) -> bool:
    if not w:
        raise ValueError("primitivity is undefined on the empty word")
    return _smallest_period_shift(w) == len(w)


def is_conjugate(u: str, v: str) -> bool:
    return len(u) == len(v) and v in u + u


def cuts(u: str, v: str) -> list[Cut]:
    """All cuts of (u, v) ordered by increasing ``len(x)``.

    Empty when the pair is not conjugate.  The pair (ε, ε) has the single
    cut (ε, ε).
    """
    if len(u) != len(v):
        return []
    if not u:
        return [Cut("", "")]
    found = []
    for i in range(len(u)):
        if u[i:] + u[:i] == v:
            found.append(Cut(u[:i], u[i:]))
    if found and found[0].x == "":
        # rotation by 0 gives (ε, u); its twin (u, ε) closes the list
        found.append(Cut(u, ""))
    return found


def is_witness(z: str, p: WordPair, side: str) -> bool:
    """Inner: ``u·z == z·v``; outer: ``z·u == v·z``."""
    u, v = p
    if side == INNER:
        return u + z == z + v
    if side == OUTER:
        return z + u == v + z
    raise ValueError(f"unknown side {side!r}")


def fine_wilf_same_root(u: str, v: str) -> bool:
    """Compare u^ω and v^ω on their first ``|u| + |v| - gcd(|u|, |v|)`` symbols."""
    if not u or not v:
        raise ValueError("Fine-Wilf comparison needs nonempty words")
    n = len(u) + len(v) - gcd(len(u), len(v))
    reps_u = n // len(u) + 1
    reps_v = n // len(v) + 1
    return (u * reps_u)[:n] == (v * reps_v)[:n]


def root_pair(p: WordPair) -> WordPair:
    """Primitive root of a conjugate pair of nonempty words."""
    return WordPair(primitive_root(p.u)[0], primitive_root(p.v)[0])


def in_family(z: str, period: str, tail: str) -> bool:
    """Whether ``z`` belongs to ``period* · tail``."""
    if not period:
        return z == tail
    k, rem = divmod(len(z) - len(tail), len(period))
    if len(z) < len(tail) or rem:
        return False
    return z == period * k + tail
