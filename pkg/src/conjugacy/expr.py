"""Rational expressions over word pairs and their sumfree normal form.

Concrete syntax (whitespace is ignored)::

    expr    := term ('+' term)*
    term    := factor factor*
    factor  := atom '*'*
    atom    := pair | '(' expr ')' | '0'
    pair    := '(' word ',' word ')'
    word    := [a-z]*

``0`` denotes the empty set.  After an opening parenthesis the letters are
consumed first; a following comma makes it a pair literal, anything else
makes it a group (a group can never start with a bare letter).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Union

from .words import ALPHABET, EMPTY_PAIR, WordPair

DEFAULT_SIZE_LIMIT = 2**20


# --------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class EmptySet:
    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Literal:
    pair: WordPair

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Concat:
    items: tuple

    def __post_init__(self):
        if len(self.items) < 2:
            raise ValueError("Concat needs at least two factors")

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Sum:
    items: tuple

    def __post_init__(self):
        if len(self.items) < 2:
            raise ValueError("Sum needs at least two summands")

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Star:
    body: "RationalExpr"

    def __str__(self) -> str:
        return render(self)


RationalExpr = Union[EmptySet, Literal, Concat, Sum, Star]


def lit(u: str, v: str) -> Literal:
    return Literal(WordPair(u, v))


def concat(*parts: RationalExpr) -> RationalExpr:
    """Concatenation with nested products flattened."""
    flat: list = []
    for p in parts:
        flat.extend(p.items if isinstance(p, Concat) else (p,))
    return flat[0] if len(flat) == 1 else Concat(tuple(flat))


def union(*parts: RationalExpr) -> RationalExpr:
    flat: list = []
    for p in parts:
        flat.extend(p.items if isinstance(p, Sum) else (p,))
    return flat[0] if len(flat) == 1 else Sum(tuple(flat))


def expr_size(e: RationalExpr) -> int:
    """Node count of the binary expression tree (an n-ary node counts n-1 times)."""
    if isinstance(e, (EmptySet, Literal)):
        return 1
    if isinstance(e, Star):
        return 1 + expr_size(e.body)
    return len(e.items) - 1 + sum(expr_size(c) for c in e.items)


def star_height(e: RationalExpr) -> int:
    if isinstance(e, (EmptySet, Literal)):
        return 0
    if isinstance(e, Star):
        return 1 + star_height(e.body)
    return max(star_height(c) for c in e.items)


# --------------------------------------------------------------------------
# parsing


class ExprSyntaxError(ValueError):
    """Malformed expression text; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class UnknownSymbolError(ExprSyntaxError):
    pass


_PUNCT = frozenset("(),+*0")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _where(self, pos: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, message: str, pos: int | None = None):
        line, col = self._where(self.pos if pos is None else pos)
        return ExprSyntaxError(message, line, col)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        if self.pos >= len(self.text):
            return ""
        c = self.text[self.pos]
        if c not in ALPHABET and c not in _PUNCT:
            line, col = self._where(self.pos)
            raise UnknownSymbolError(f"unknown symbol {c!r}", line, col)
        return c

    def expect(self, c: str):
        got = self.peek()
        if got != c:
            found = repr(got) if got else "end of input"
            raise self.error(f"expected {c!r}, found {found}")
        self.pos += 1

    def parse(self) -> RationalExpr:
        e = self.expr()
        if self.peek():
            raise self.error(f"expected '+', '*', '(' or end of input, found {self.peek()!r}")
        return e

    def expr(self) -> RationalExpr:
        terms = [self.term()]
        while self.peek() == "+":
            self.pos += 1
            terms.append(self.term())
        return union(*terms)

    def term(self) -> RationalExpr:
        factors = [self.factor()]
        while self.peek() in ("(", "0"):
            factors.append(self.factor())
        return concat(*factors)

    def factor(self) -> RationalExpr:
        e = self.atom()
        while self.peek() == "*":
            self.pos += 1
            e = Star(e)
        return e

    def word(self) -> str:
        letters = []
        while self.peek() and self.peek() in ALPHABET:
            letters.append(self.text[self.pos])
            self.pos += 1
        return "".join(letters)

    def atom(self) -> RationalExpr:
        c = self.peek()
        if c == "0":
            self.pos += 1
            return EmptySet()
        if c != "(":
            found = repr(c) if c else "end of input"
            raise self.error(f"expected '(' or '0', found {found}")
        self.pos += 1
        start = self.pos
        u = self.word()
        if self.peek() == ",":
            self.pos += 1
            v = self.word()
            self.expect(")")
            return Literal(WordPair(u, v))
        if u:
            raise self.error("expected ',' after word in pair literal")
        self.pos = start
        inner = self.expr()
        self.expect(")")
        return inner


def parse(text: str) -> RationalExpr:
    """Parse expression text into a flattened AST."""
    return _Parser(text).parse()


# --------------------------------------------------------------------------
# printing

_PREC = {Sum: 0, Concat: 1, Star: 2, Literal: 3, EmptySet: 3}


def render(e: RationalExpr) -> str:
    if isinstance(e, EmptySet):
        return "0"
    if isinstance(e, Literal):
        return f"({e.pair.u},{e.pair.v})"
    if isinstance(e, Star):
        inner = render(e.body)
        if _PREC[type(e.body)] < 2:
            inner = f"({inner})"
        return inner + "*"
    if isinstance(e, Concat):
        return "".join(f"({render(c)})" if isinstance(c, Sum) else render(c) for c in e.items)
    return "+".join(render(c) for c in e.items)


# --------------------------------------------------------------------------
# sumfree normal form


@dataclass(frozen=True)
class SumfreeMonomial:
    """``head · B1* · t1 · B2* · t2 ... Bk* · tk``; each segment is ``(B_i, t_i)``."""

    head: WordPair = EMPTY_PAIR
    segments: tuple = ()

    @property
    def stars(self) -> int:
        return len(self.segments)

    def cat(self, other: "SumfreeMonomial") -> "SumfreeMonomial":
        if not self.segments:
            return SumfreeMonomial(self.head.cat(other.head), other.segments)
        body, tail = self.segments[-1]
        joined = self.segments[:-1] + ((body, tail.cat(other.head)),)
        return SumfreeMonomial(self.head, joined + other.segments)

    def to_expr(self) -> RationalExpr:
        parts: list = []
        if not self.head.is_empty() or not self.segments:
            parts.append(Literal(self.head))
        for body, tail in self.segments:
            parts.append(Star(body.to_expr()))
            if not tail.is_empty():
                parts.append(Literal(tail))
        return concat(*parts)

    def size(self) -> int:
        """Node count of the binary tree ``head (B1*) t1 ... (Bk*) tk``."""
        items = 1 + 2 * len(self.segments)
        return items - 1 + 1 + sum(1 + b.size() + 1 for b, _ in self.segments)

    def star_height(self) -> int:
        return max((1 + b.star_height() for b, _ in self.segments), default=0)

    def __str__(self) -> str:
        return render(self.to_expr())


def pair_monomial(p: WordPair) -> SumfreeMonomial:
    return SumfreeMonomial(p, ())


def star_monomial(body: SumfreeMonomial) -> SumfreeMonomial:
    return SumfreeMonomial(EMPTY_PAIR, ((body, EMPTY_PAIR),))


class SnfSizeError(RuntimeError):
    """The sumfree normal form would exceed the configured size limit."""

    def __init__(self, estimate: int, limit: int):
        super().__init__(f"sumfree normal form needs about {estimate} nodes, limit is {limit}")
        self.estimate = estimate
        self.limit = limit


@dataclass(frozen=True)
class SnfResult:
    summands: tuple
    input_size: int
    output_size: int


def snf_tree_size(summands: Iterable[SumfreeMonomial]) -> int:
    """Size of the right comb: one '+' per summand, an ∅ leaf, and the summands."""
    summands = list(summands)
    return len(summands) + 1 + sum(m.size() for m in summands)


def _snf(e: RationalExpr, limit: int) -> list:
    if isinstance(e, EmptySet):
        return []
    if isinstance(e, Literal):
        return [pair_monomial(e.pair)]
    if isinstance(e, Sum):
        out: list = []
        size = 1
        for c in e.items:
            part = _snf(c, limit)
            out.extend(part)
            size += sum(1 + m.size() for m in part)
            if size > limit:
                raise SnfSizeError(size, limit)
        return out
    if isinstance(e, Concat):
        acc = [pair_monomial(EMPTY_PAIR)]
        for c in e.items:
            right = _snf(c, limit)
            estimate = (len(acc) * sum(m.size() for m in right)
                        + len(right) * sum(m.size() for m in acc))
            if estimate > limit:
                raise SnfSizeError(estimate, limit)
            acc = [a.cat(b) for a in acc for b in right]
        return acc
    # Star: (a1 + ... + ak)* = (a1* ... ak*)*, and the empty sum gives {(ε,ε)}
    inner = _snf(e.body, limit)
    if not inner:
        return [pair_monomial(EMPTY_PAIR)]
    if len(inner) == 1:
        return [star_monomial(inner[0])]
    body = reduce(SumfreeMonomial.cat, (star_monomial(m) for m in inner))
    return [star_monomial(body)]


def _guard(summands: list, limit: int):
    size = snf_tree_size(summands)
    if size > limit:
        raise SnfSizeError(size, limit)


def to_snf(e: RationalExpr, size_limit: int = DEFAULT_SIZE_LIMIT) -> SnfResult:
    """Rewrite ``e`` as a sum of sumfree monomials with the same language.

    Summands are deduplicated and ordered by their rendered text.
    """
    summands = _snf(e, size_limit)
    _guard(summands, size_limit)
    unique = {str(m): m for m in summands}
    ordered = tuple(unique[k] for k in sorted(unique))
    return SnfResult(ordered, expr_size(e), snf_tree_size(ordered))


def is_vacuous(m: SumfreeMonomial) -> bool:
    """True iff the language of ``m`` is exactly {(ε,ε)}."""
    return (m.head.is_empty()
            and all(t.is_empty() and is_vacuous(b) for b, t in m.segments))


def simplify_monomial(m: SumfreeMonomial) -> SumfreeMonomial:
    """Fuse adjacent literals and drop stars whose body only produces (ε,ε)."""
    head = m.head
    segments: list = []
    for body, tail in m.segments:
        body = simplify_monomial(body)
        if is_vacuous(body):
            if segments:
                b, t = segments[-1]
                segments[-1] = (b, t.cat(tail))
            else:
                head = head.cat(tail)
        else:
            segments.append((body, tail))
    return SumfreeMonomial(head, tuple(segments))


def monomials_to_expr(summands: Iterable[SumfreeMonomial]) -> RationalExpr:
    parts = [m.to_expr() for m in summands]
    return union(*parts) if parts else EmptySet()
