"""Bounded brute-force ground truth for the witness engine.

Everything here works directly on expression trees and raw words, and
never calls into the sumfree normal form or the witness algebra, except
:func:`cross_validate`, which exists to compare the two.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional

from .expr import Concat, EmptySet, Literal, RationalExpr, Sum
from .words import EMPTY_PAIR, INNER, SIDES, WordPair, is_witness

DEFAULT_SEARCH_UNROLL = 8
DEFAULT_SEARCH_LEN = 64
DEFAULT_SEARCH_PAIRS = 200_000


@dataclass(frozen=True)
class EnumBounds:
    max_unroll: int = 4
    max_len: int = 64
    max_pairs: int = 100_000

    def __post_init__(self):
        if min(self.max_unroll, self.max_len, self.max_pairs) < 0:
            raise ValueError("enumeration bounds must be non-negative")


def pair_key(p: WordPair):
    """Shortlex order on pairs: total length, then u, then v."""
    return (len(p.u) + len(p.v), p.u, p.v)


class _Enum:
    def __init__(self, b: EnumBounds):
        self.b = b
        self.truncated = False

    def fits(self, p: WordPair) -> bool:
        if len(p.u) > self.b.max_len or len(p.v) > self.b.max_len:
            self.truncated = True
            return False
        return True

    def add(self, acc: dict, p: WordPair, cost: int) -> bool:
        old = acc.get(p)
        if old is not None and old <= cost:
            return False
        if old is None and len(acc) >= self.b.max_pairs:
            self.truncated = True
            return False
        acc[p] = cost
        return True

    def full(self, acc: dict) -> bool:
        if len(acc) >= self.b.max_pairs:
            self.truncated = True
            return True
        return False

    def extensions(self, left: dict, right: dict):
        """Yield every fitting ``(p·q, c1 + c2)``."""
        cap = self.b.max_len
        buckets: dict = {}
        for q, c in right.items():
            buckets.setdefault((len(q.u), len(q.v)), []).append((q, c))
        for p, c1 in left.items():
            room_u, room_v = cap - len(p.u), cap - len(p.v)
            for (lu, lv), items in buckets.items():
                if lu > room_u or lv > room_v:
                    self.truncated = True
                    continue
                for q, c2 in items:
                    yield p.cat(q), c1 + c2

    def product(self, left: dict, right: dict) -> dict:
        out: dict = {}
        for pq, cost in self.extensions(left, right):
            self.add(out, pq, cost)
            if self.full(out):
                break
        return out

    def run(self, e: RationalExpr) -> dict:
        if isinstance(e, EmptySet):
            return {}
        if isinstance(e, Literal):
            return {e.pair: 0} if self.fits(e.pair) else {}
        if isinstance(e, Sum):
            out: dict = {}
            for c in e.items:
                for p, cost in self.run(c).items():
                    self.add(out, p, cost)
            return out
        if isinstance(e, Concat):
            acc = {EMPTY_PAIR: 0}
            for c in e.items:
                acc = self.product(acc, self.run(c))
            return acc
        body = self.run(e.body)
        acc = {EMPTY_PAIR: 0}
        frontier = dict(acc)
        for level in range(self.b.max_unroll + 1):
            grown: dict = {}
            for pq, cost in self.extensions(frontier, body):
                if level == self.b.max_unroll:
                    # one more iteration would still produce something new
                    if pq not in acc:
                        self.truncated = True
                        return acc
                    continue
                if self.add(acc, pq, cost + 1):
                    grown[pq] = acc[pq]
                    if self.full(acc):
                        return acc
            frontier = grown
            if not frontier:
                break
        return acc


def enumerate_with_cost(e: RationalExpr, b: EnumBounds) -> tuple[dict, bool]:
    """Map each derivable pair to its fewest total star iterations."""
    en = _Enum(b)
    found = en.run(e)
    return found, en.truncated


def enumerate_pairs(e: RationalExpr, b: EnumBounds) -> tuple[list, bool]:
    found, truncated = enumerate_with_cost(e, b)
    return sorted(found, key=pair_key), truncated


def rotation_conjugate(u: str, v: str) -> bool:
    """Conjugacy by trying every rotation explicitly."""
    if len(u) != len(v):
        return False
    return any(u[i:] + u[:i] == v for i in range(max(1, len(u))))


def check_all_conjugate(pairs: Iterable[WordPair]) -> Optional[WordPair]:
    for p in sorted(pairs, key=pair_key):
        if not rotation_conjugate(*p):
            return WordPair(*p)
    return None


def _cut_family(p: WordPair, side: str, max_len: int) -> set:
    u, v = p
    words = set()
    for i in range(len(u) + 1):
        x, y = u[:i], u[i:]
        if y + x != v:
            continue
        period, tail = (x + y, x) if side == INNER else (y + x, y)
        w = tail
        while len(w) <= max_len:
            words.add(w)
            w = period + w
    return words


def brute_witnesses(pairs: Iterable[WordPair], side: str,
                    max_len: int) -> Optional[list]:
    """Common ``side`` witnesses up to ``max_len``, shortest first.

    Returns None when the set constrains nothing (no pairs, or only (ε,ε)).
    """
    pairs = [WordPair(*p) for p in pairs]
    for p in pairs:
        if not rotation_conjugate(*p):
            raise ValueError(f"{p} is not conjugate")
    anchors = [p for p in pairs if not p.is_empty()]
    if not anchors:
        return None
    anchor = min(anchors, key=pair_key)
    cands = _cut_family(anchor, side, max_len)
    hits = [z for z in cands if all(is_witness(z, p, side) for p in pairs)]
    return sorted(hits, key=lambda w: (len(w), w))


def naive_witnesses(pairs: Iterable[WordPair], side: str, max_len: int,
                    alphabet: str = "ab") -> list:
    """Filter every word over ``alphabet`` up to ``max_len``; tiny inputs only."""
    pairs = [WordPair(*p) for p in pairs]
    out = []
    for n in range(max_len + 1):
        for letters in product(alphabet, repeat=n):
            z = "".join(letters)
            if all(is_witness(z, p, side) for p in pairs):
                out.append(z)
    return out


# --------------------------------------------------------------------------
# counterexamples and certificates


def find_counterexample(e: RationalExpr, max_unroll: int = DEFAULT_SEARCH_UNROLL,
                        max_len: int = DEFAULT_SEARCH_LEN,
                        max_pairs: int = DEFAULT_SEARCH_PAIRS) -> Optional[WordPair]:
    """Non-conjugate pair of ``e`` with fewest star iterations, ties by shortlex.

    Escalates the per-star unroll bound.  Once a pair of total cost c turns
    up, the search is repeated at unroll c so every cheaper pair is seen.
    """
    def best_at(k: int):
        found, _ = enumerate_with_cost(e, EnumBounds(k, max_len, max_pairs))
        bad = [(c, pair_key(p), p) for p, c in found.items() if not rotation_conjugate(*p)]
        return min(bad) if bad else None

    for k in range(max_unroll + 1):
        hit = best_at(k)
        if hit is None:
            continue
        cost = hit[0]
        if cost > k:
            hit = best_at(min(cost, max(max_unroll, k))) or hit
        return hit[2]
    return None


@dataclass(frozen=True)
class Certificate:
    """Evidence that a language is not conjugate.

    ``kind`` is "counterexample" (with ``pair``) or "no-common-witness",
    meaning a finite sample of conjugate pairs whose common witnesses up to
    twice the longest word are empty on both sides.  Since a sample with
    any common witness also has one within that length, such a sample
    cannot extend to a set with a common witness.
    """

    kind: str
    pair: Optional[WordPair] = None
    sample_size: int = 0
    bound: int = 0


def certify_non_conjugate(e: RationalExpr, max_unroll: int = DEFAULT_SEARCH_UNROLL,
                          max_len: int = DEFAULT_SEARCH_LEN) -> Optional[Certificate]:
    for k in range(max_unroll + 1):
        found, _ = enumerate_with_cost(e, EnumBounds(k, max_len, DEFAULT_SEARCH_PAIRS))
        pairs = sorted(found, key=pair_key)
        bad = check_all_conjugate(pairs)
        if bad is not None:
            return Certificate("counterexample", pair=bad, sample_size=len(pairs))
        if not any(not p.is_empty() for p in pairs):
            continue
        bound = 2 * max(len(p.u) for p in pairs)
        if not any(brute_witnesses(pairs, s, bound) for s in SIDES):
            return Certificate("no-common-witness", sample_size=len(pairs), bound=bound)
    return None


# --------------------------------------------------------------------------
# differential harness


@dataclass
class OracleReport:
    pairs_checked: int
    truncated: bool
    counterexample: Optional[WordPair]
    witnesses_found: dict = field(default_factory=dict)
    engine_conjugate: Optional[bool] = None
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "all-conjugate" if self.counterexample is None else "counterexample"

    @property
    def ok(self) -> bool:
        return not self.failures


def cross_validate(e: RationalExpr, b: EnumBounds = EnumBounds(),
                   witness_len: int = 16) -> OracleReport:
    """Run the oracle on ``e`` and compare it against the engine.

    Hard failures: the engine calls ``e`` conjugate while a non-conjugate
    pair was enumerated; an engine witness misses an enumerated pair; or,
    for a complete enumeration of a single summand, the witness lists
    differ.  A non-conjugate verdict the oracle cannot confirm is only a
    note, since the enumeration is bounded.
    """
    from .witness import Universal, decide, enumerate_witnesses

    pairs, truncated = enumerate_pairs(e, b)
    bad = check_all_conjugate(pairs)
    rep = OracleReport(len(pairs), truncated, bad)
    engine = decide(e)
    rep.engine_conjugate = engine.conjugate

    if engine.conjugate and bad is not None:
        rep.failures.append(f"engine says conjugate but {bad} is not")
    if not engine.conjugate and bad is None:
        rep.notes.append("non-conjugacy not confirmed within the enumeration bounds")
    if bad is not None:
        return rep

    for side in SIDES:
        rep.witnesses_found[side] = brute_witnesses(pairs, side, witness_len)
    if not engine.conjugate or len(engine.summands) != 1:
        return rep

    w = engine.summands[0].witnesses
    for side in SIDES:
        oracle_words = rep.witnesses_found[side]
        if isinstance(w, Universal):
            if oracle_words is not None:
                rep.failures.append("engine says every word is a witness, oracle disagrees")
            continue
        engine_words = enumerate_witnesses(w, side, witness_len)
        if oracle_words is None:
            continue
        missing = set(engine_words) - set(oracle_words)
        if missing:
            rep.failures.append(f"{side} engine witnesses {sorted(missing)} fail some pair")
        if not truncated and set(oracle_words) - set(engine_words):
            extra = sorted(set(oracle_words) - set(engine_words))
            rep.failures.append(f"{side} oracle witnesses {extra} missed by the engine")
    return rep
