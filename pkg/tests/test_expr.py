import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conjugacy.expr import (
    Concat,
    EmptySet,
    ExprSyntaxError,
    SnfSizeError,
    Star,
    Sum,
    SumfreeMonomial,
    UnknownSymbolError,
    expr_size,
    lit,
    monomials_to_expr,
    parse,
    render,
    simplify_monomial,
    star_monomial,
    pair_monomial,
    to_snf,
)
from conjugacy.oracle import EnumBounds, enumerate_pairs
from conjugacy.words import EMPTY_PAIR, WordPair

from helpers import random_expr, seeded


def test_parse_star():
    assert parse("(ab,ba)*") == Star(lit("ab", "ba"))


def test_parse_five_factor_product():
    e = parse("(a,a)(baa,aba)*(b,a)(aab,baa)*(a,b)")
    assert isinstance(e, Concat) and len(e.items) == 5
    assert sum(isinstance(c, Star) for c in e.items) == 2


def test_parse_empty_pair_and_half_empty():
    assert parse("(,)") == lit("", "")
    assert parse("(ab,)") == lit("ab", "")
    assert parse(" ( a , b ) ") == lit("a", "b")


def test_parse_grouping_and_precedence():
    assert parse("(a,a)+(b,b)(c,c)") == Sum((lit("a", "a"), Concat((lit("b", "b"), lit("c", "c")))))
    assert parse("((a,a)+(b,b))*") == Star(Sum((lit("a", "a"), lit("b", "b"))))
    assert parse("(a,a)**") == Star(Star(lit("a", "a")))
    assert parse("0(a,b)") == Concat((EmptySet(), lit("a", "b")))


def test_parse_flattens():
    e = parse("((a,a)(b,b))(c,c)")
    assert e == Concat((lit("a", "a"), lit("b", "b"), lit("c", "c")))
    assert parse("(a,a)+((b,b)+(c,c))") == Sum((lit("a", "a"), lit("b", "b"), lit("c", "c")))


@pytest.mark.parametrize("text, line, col", [
    ("(ab", 1, 4),
    ("(a,b", 1, 5),
    ("", 1, 1),
    ("(a,b))", 1, 6),
    ("(a,b)+\n  *", 2, 3),
    ("(ab)", 1, 4),
])
def test_syntax_errors_carry_position(text, line, col):
    with pytest.raises(ExprSyntaxError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, col)
    assert "expected" in info.value.message


def test_unknown_symbol():
    with pytest.raises(UnknownSymbolError) as info:
        parse("(aB,b)")
    assert info.value.column == 3


@pytest.mark.parametrize("e, text", [
    (Star(lit("ab", "ba")), "(ab,ba)*"),
    (lit("", ""), "(,)"),
    (Sum((lit("a", "a"), lit("b", "b"))), "(a,a)+(b,b)"),
    (Star(Sum((lit("a", "a"), lit("b", "b")))), "((a,a)+(b,b))*"),
    (Star(Concat((lit("a", "a"), lit("b", "b")))), "((a,a)(b,b))*"),
    (Concat((Sum((lit("a", "a"), lit("b", "b"))), EmptySet())), "((a,a)+(b,b))0"),
    (Star(EmptySet()), "0*"),
])
def test_render(e, text):
    assert render(e) == text
    assert parse(text) == e


@given(st.integers(0, 10**6))
@settings(max_examples=200)
def test_parse_render_roundtrip(seed):
    e = random_expr(seeded(seed), 7)
    assert parse(render(e)) == e
    assert render(parse(render(e))) == render(e)


def test_snf_star_of_sum():
    (m,) = to_snf(parse("((a,a)+(b,b))*")).summands
    assert m.head == EMPTY_PAIR and len(m.segments) == 1
    body, tail = m.segments[0]
    assert tail == EMPTY_PAIR
    assert body == SumfreeMonomial(EMPTY_PAIR, (
        (pair_monomial(WordPair("a", "a")), EMPTY_PAIR),
        (pair_monomial(WordPair("b", "b")), EMPTY_PAIR),
    ))


def test_snf_distributes_and_fuses():
    res = to_snf(parse("(a,b)((c,d)+(e,f))"))
    assert [m.head for m in res.summands] == [WordPair("ac", "bd"), WordPair("ae", "bf")]
    assert all(not m.segments for m in res.summands)


def test_snf_square_has_four_summands():
    assert len(to_snf(parse("((a,a)+(b,b))((a,a)+(b,b))")).summands) == 4


def test_snf_empty_set_rules():
    assert to_snf(parse("0")).summands == ()
    assert to_snf(parse("0(a,b)")).summands == ()
    assert [str(m) for m in to_snf(parse("0+(a,b)")).summands] == ["(a,b)"]
    assert [str(m) for m in to_snf(parse("0*")).summands] == ["(,)"]
    assert [str(m) for m in to_snf(parse("(a,b)0*")).summands] == ["(a,b)"]


def test_snf_order_is_canonical():
    a = to_snf(parse("(b,b)+(a,a)+(b,b)")).summands
    assert [str(m) for m in a] == ["(a,a)", "(b,b)"]


def test_snf_size_limit():
    e = parse("((a,a)+(b,b))" * 12)
    with pytest.raises(SnfSizeError) as info:
        to_snf(e, size_limit=1000)
    assert info.value.estimate > 1000 and info.value.limit == 1000


def test_sizes():
    assert expr_size(parse("(a,a)")) == 1
    assert expr_size(parse("(a,a)(b,b)(c,c)")) == 5
    assert expr_size(parse("((a,a)+(b,b))*")) == 4
    res = to_snf(parse("(a,b)"))
    assert res.input_size == 1 and res.output_size == 3


@pytest.mark.parametrize("n", range(1, 9))
def test_power_of_sum_blows_up(n):
    res = to_snf(parse("((a,a)+(b,b))" * n))
    assert len(res.summands) == 2**n
    assert res.output_size <= 2 ** (2 * res.input_size)


def test_simplify_fuses_literals():
    m = pair_monomial(WordPair("a", "b")).cat(pair_monomial(WordPair("c", "d")))
    assert simplify_monomial(m) == pair_monomial(WordPair("ac", "bd"))


def test_simplify_drops_vacuous_star():
    m = (pair_monomial(WordPair("a", "a"))
         .cat(star_monomial(pair_monomial(EMPTY_PAIR)))
         .cat(pair_monomial(WordPair("b", "b"))))
    assert simplify_monomial(m) == pair_monomial(WordPair("ab", "ab"))


def test_simplify_drops_nested_vacuous_star():
    inner = star_monomial(star_monomial(pair_monomial(EMPTY_PAIR)))
    m = star_monomial(pair_monomial(WordPair("a", "b"))).cat(star_monomial(inner))
    assert simplify_monomial(m) == star_monomial(pair_monomial(WordPair("a", "b")))


@given(st.integers(0, 10**6))
@settings(max_examples=150)
def test_simplify_idempotent(seed):
    for m in to_snf(random_expr(seeded(seed), 8)).summands:
        once = simplify_monomial(m)
        assert simplify_monomial(once) == once


def _pairs_upto(e, n):
    pairs, _ = enumerate_pairs(e, EnumBounds(max_unroll=n + 1, max_len=n))
    return set(pairs)


@given(st.integers(0, 10**6))
@settings(max_examples=120, deadline=None)
def test_snf_preserves_language(seed):
    e = random_expr(seeded(seed), 6, max_len=2)
    summands = to_snf(e).summands
    expected = _pairs_upto(e, 5)
    assert _pairs_upto(monomials_to_expr(summands), 5) == expected
    simplified = [simplify_monomial(m) for m in summands]
    assert _pairs_upto(monomials_to_expr(simplified), 5) == expected


@given(st.integers(0, 10**6))
@settings(max_examples=200, deadline=None)
def test_snf_size_bound(seed):
    e = random_expr(seeded(seed), 7)
    res = to_snf(e)
    assert res.output_size <= 2 ** (2 * res.input_size)
