"""Exact common-witness sets and the conjugacy decision for rational expressions.

A common witness of a set of pairs is a word ``z`` that is an inner witness
of every pair, or an outer witness of every pair.  The set of common
witnesses is always one of four shapes, modelled by :class:`WitnessSet`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .expr import (
    DEFAULT_SIZE_LIMIT,
    RationalExpr,
    SumfreeMonomial,
    simplify_monomial,
    to_snf,
)
from .words import (
    EMPTY_PAIR,
    INNER,
    OUTER,
    SIDES,
    WordPair,
    cuts,
    in_family,
    is_conjugate,
    is_primitive,
    is_witness,
    root_pair,
    suffix_delay,
)


class InternalInvariantError(AssertionError):
    """Raised when the engine reaches a state its theory rules out."""


class UniversalWitnessError(ValueError):
    """The universal witness set cannot be listed word by word."""


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Unique:
    word: str
    inner: bool
    outer: bool

    def __post_init__(self):
        if not (self.inner or self.outer):
            raise ValueError("a unique witness needs at least one side")

    def has(self, side: str) -> bool:
        return self.inner if side == INNER else self.outer


@dataclass(frozen=True)
class AllOf:
    """All witnesses of a primitive conjugate pair of nonempty words."""

    root: WordPair


@dataclass(frozen=True)
class Universal:
    pass


WitnessSet = Union[Empty, Unique, AllOf, Universal]

EMPTY = Empty()
UNIVERSAL = Universal()


def _unique_or_empty(word: str, inner: bool, outer: bool) -> WitnessSet:
    return Unique(word, inner, outer) if inner or outer else EMPTY


# --------------------------------------------------------------------------
# pairs


def pair_witnesses(p: WordPair) -> WitnessSet:
    if p.is_empty():
        return UNIVERSAL
    if not is_conjugate(p.u, p.v):
        return EMPTY
    return AllOf(root_pair(p))


def _family(root: WordPair, side: str, max_len: int) -> list[str]:
    words = set()
    for x, y in cuts(*root):
        period, tail = (x + y, x) if side == INNER else (y + x, y)
        w = tail
        while len(w) <= max_len:
            words.add(w)
            w = period + w
    return sorted(words, key=lambda w: (len(w), w))


def _check_primitive_pair(p: WordPair):
    if not p.u or not is_conjugate(p.u, p.v) or not is_primitive(p.u):
        raise ValueError(f"{p} is not a conjugate pair of primitive words")


def two_root_witnesses(p1: WordPair, p2: WordPair) -> WitnessSet:
    """Common witnesses of two primitive conjugate pairs.

    Distinct pairs share at most one witness, of length at most
    ``2 * max(|u1|, |u2|)``; candidates are drawn from both cut families.
    """
    _check_primitive_pair(p1)
    _check_primitive_pair(p2)
    if p1 == p2:
        return AllOf(p1)
    bound = 2 * max(len(p1.u), len(p2.u))
    found = {}
    for side in SIDES:
        cands = set(_family(p1, side, bound)) | set(_family(p2, side, bound))
        hits = [z for z in cands if is_witness(z, p1, side) and is_witness(z, p2, side)]
        if len(hits) > 1:
            raise InternalInvariantError(f"distinct roots {p1}, {p2} share {hits}")
        if hits:
            found[side] = hits[0]
    if not found:
        return EMPTY
    words = set(found.values())
    if len(words) > 1:
        raise InternalInvariantError(f"distinct roots {p1}, {p2} share {sorted(words)}")
    return Unique(words.pop(), INNER in found, OUTER in found)


def two_pair_witnesses(p1: WordPair, p2: WordPair) -> WitnessSet:
    return intersect(pair_witnesses(p1), pair_witnesses(p2))


def set_witnesses(pairs) -> WitnessSet:
    """Fold the witness sets of a finite collection of pairs."""
    acc: WitnessSet = UNIVERSAL
    for p in pairs:
        acc = intersect(acc, pair_witnesses(WordPair(*p)))
        if acc == EMPTY:
            break
    return acc


# --------------------------------------------------------------------------
# set algebra


def membership(z: str, w: WitnessSet, side: str) -> bool:
    if isinstance(w, Universal):
        return True
    if isinstance(w, Empty):
        return False
    if isinstance(w, Unique):
        return z == w.word and w.has(side)
    for x, y in cuts(*w.root):
        if side == INNER and in_family(z, x + y, x):
            return True
        if side == OUTER and in_family(z, y + x, y):
            return True
    return False


def intersect(w1: WitnessSet, w2: WitnessSet) -> WitnessSet:
    """Words that are same-side witnesses for both sets."""
    if isinstance(w1, Universal):
        return w2
    if isinstance(w2, Universal):
        return w1
    if isinstance(w1, Empty) or isinstance(w2, Empty):
        return EMPTY
    if isinstance(w1, AllOf) and isinstance(w2, AllOf):
        return two_root_witnesses(w1.root, w2.root)
    if isinstance(w1, AllOf):
        w1, w2 = w2, w1
    if isinstance(w2, AllOf):
        return _unique_or_empty(
            w1.word,
            w1.inner and membership(w1.word, w2, INNER),
            w1.outer and membership(w1.word, w2, OUTER),
        )
    if w1.word != w2.word:
        return EMPTY
    return _unique_or_empty(w1.word, w1.inner and w2.inner, w1.outer and w2.outer)


# --------------------------------------------------------------------------
# starred pair-sets wrapped by literals


def _wrap_side_holds(z: str, we: WitnessSet, prefix: WordPair, suffix: WordPair,
                     side: str) -> bool:
    """Whether ``z`` is a ``side`` witness of every pair of prefix·E*·suffix.

    ``we`` is the witness set of E.  Besides the redux pair itself, the
    leftover ``t`` between the prefix and ``z`` must witness E on the side
    forced by which of the two is longer.
    """
    (a0, b0), (a1, b1) = prefix, suffix
    if not is_witness(z, WordPair(a0 + a1, b0 + b1), side):
        return False
    left, right = (a0, z + b0) if side == INNER else (z + a0, b0)
    if left.startswith(right):
        return membership(left[len(right):], we, OUTER)
    if right.startswith(left):
        return membership(right[len(left):], we, INNER)
    return False


def _length_rule_side(route: str, z0: str, prefix: WordPair, suffix: WordPair) -> str:
    if route == INNER:
        return INNER if len(prefix.u + z0) >= len(prefix.v) else OUTER
    return OUTER if len(z0 + suffix.u) >= len(suffix.v) else INNER


def star_wrap_witnesses(we: WitnessSet, prefix: WordPair, suffix: WordPair) -> WitnessSet:
    """Witness set of ``prefix · E* · suffix`` given the witness set ``we`` of E."""
    if isinstance(we, Empty):
        return EMPTY
    r = prefix.cat(suffix)
    if isinstance(we, Universal):
        return pair_witnesses(r)
    c = suffix.cat(prefix)
    wc = intersect(we, pair_witnesses(c))
    if isinstance(wc, Empty):
        return EMPTY
    if isinstance(wc, AllOf):
        # either M is exactly E* or every pair of M is a power of the redux root
        return wc if c.is_empty() else AllOf(root_pair(r))
    if isinstance(wc, Universal):
        raise InternalInvariantError("E is not universal but its intersection is")

    z0 = wc.word
    routes = {
        INNER: suffix_delay(prefix.u + z0, prefix.v),
        OUTER: suffix_delay(prefix.u, prefix.v + z0),
    }
    result = {}
    for route, z in routes.items():
        if z is None:
            continue
        flags = {s for s in SIDES if _wrap_side_holds(z, we, prefix, suffix, s)}
        if wc.has(route) and _length_rule_side(route, z0, prefix, suffix) not in flags:
            raise InternalInvariantError(
                f"{route} route gives {z!r} for {prefix}E*{suffix} but the side check fails")
        if flags:
            result.setdefault(z, set()).update(flags)
    if not result:
        return EMPTY
    if len(result) > 1:
        raise InternalInvariantError(f"star wrap produced several witnesses {sorted(result)}")
    (z, flags), = result.items()
    return Unique(z, INNER in flags, OUTER in flags)


# --------------------------------------------------------------------------
# sumfree monomials


def redux_of(m: SumfreeMonomial) -> WordPair:
    acc = m.head
    for _, tail in m.segments:
        acc = acc.cat(tail)
    return acc


def singleton_reduxes(m: SumfreeMonomial) -> list[tuple[WordPair, SumfreeMonomial, WordPair]]:
    literals = [m.head] + [t for _, t in m.segments]
    out = []
    for i, (body, _) in enumerate(m.segments):
        prefix, suffix = EMPTY_PAIR, EMPTY_PAIR
        for p in literals[: i + 1]:
            prefix = prefix.cat(p)
        for p in literals[i + 1:]:
            suffix = suffix.cat(p)
        out.append((prefix, body, suffix))
    return out


@lru_cache(maxsize=4096)
def _monomial_witnesses(m: SumfreeMonomial) -> WitnessSet:
    if not m.segments:
        return pair_witnesses(m.head)
    r = redux_of(m)
    if not is_conjugate(r.u, r.v):
        return EMPTY
    acc: WitnessSet = UNIVERSAL
    for prefix, body, suffix in singleton_reduxes(m):
        # a star and its body have the same common witnesses
        wrapped = star_wrap_witnesses(_monomial_witnesses(body), prefix, suffix)
        acc = intersect(acc, wrapped)
        if isinstance(acc, Empty):
            break
    return acc


def monomial_witnesses(m: SumfreeMonomial) -> WitnessSet:
    return _monomial_witnesses(simplify_monomial(m))


def enumerate_witnesses(w: WitnessSet, side: str, max_len: int) -> list[str]:
    """All ``side`` witnesses in ``w`` up to ``max_len``, shortest first."""
    if isinstance(w, Universal):
        raise UniversalWitnessError("every word is a witness of this set")
    if isinstance(w, Empty):
        return []
    if isinstance(w, Unique):
        return [w.word] if w.has(side) and len(w.word) <= max_len else []
    return _family(w.root, side, max_len)


# --------------------------------------------------------------------------
# the decision


@dataclass(frozen=True)
class SummandReport:
    monomial: SumfreeMonomial
    conjugate: bool
    witnesses: WitnessSet
    counterexample: Optional[WordPair] = None


@dataclass(frozen=True)
class ConjugacyReport:
    conjugate: bool
    summands: tuple


def decide(e: RationalExpr, counterexample: bool = False,
           size_limit: int = DEFAULT_SIZE_LIMIT) -> ConjugacyReport:
    """Decide whether every pair denoted by ``e`` is conjugate.

    With ``counterexample`` set, non-conjugate summands get a concrete
    non-conjugate pair from a bounded search (None if the budget runs out).
    """
    reports = []
    for m in to_snf(e, size_limit).summands:
        m = simplify_monomial(m)
        w = _monomial_witnesses(m)
        ok = not isinstance(w, Empty)
        cx = None
        if not ok and counterexample:
            from .oracle import find_counterexample

            cx = find_counterexample(m.to_expr())
        reports.append(SummandReport(m, ok, w, cx))
    return ConjugacyReport(all(s.conjugate for s in reports), tuple(reports))
