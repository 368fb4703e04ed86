import pytest
from hypothesis import given
from hypothesis import strategies as st

from cutlattice.schlafli import (
    EUCLIDEAN, HYPERBOLIC, INF, SPHERICAL, Fraction, SchlafliConstraintError, SchlafliSymbol,
    SchlafliSyntaxError, as_symbol, classify, compact, format_symbol, parse,
)


def test_parse_star_symbol():
    s = parse("{5/2,5,3}")
    assert s.rank == 3
    assert s[0] == Fraction(5, 2)
    assert not s.is_convex
    assert format_symbol(s) == "{5/2,5,3}"


def test_whitespace_and_infinity():
    assert parse(" { 3 , 5 / 2 } ") == SchlafliSymbol.of(3, (5, 2))
    assert parse("{inf,3}") == parse("{∞,3}")
    assert parse("{inf,3}").has_infinity


@pytest.mark.parametrize("text", ["{5/5,3}", "{1,3}", "{4/2,3}", "{5/0,3}", "{5/7,3}"])
def test_constraint_errors(text):
    with pytest.raises(SchlafliConstraintError):
        parse(text)


@pytest.mark.parametrize("text,pos", [("5,3}", 0), ("{5,3", 4), ("{5,,3}", 3), ("{5,3}x", 5), ("{}", 1)])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(SchlafliSyntaxError) as info:
        parse(text)
    assert info.value.pos == pos


def test_large_star_entries():
    assert parse("{5/3,5}").has_large
    assert not parse("{5/2,5}").has_large


@pytest.mark.parametrize("text,kind", [
    ("{3,5}", SPHERICAL), ("{2,7}", SPHERICAL), ("{4,4}", EUCLIDEAN), ("{3,6}", EUCLIDEAN),
    ("{6,3}", EUCLIDEAN), ("{7,3}", HYPERBOLIC), ("{5,4}", HYPERBOLIC), ("{inf,3}", HYPERBOLIC),
    ("{inf,2}", EUCLIDEAN),
])
def test_classify(text, kind):
    assert classify(text) == kind


def test_classify_needs_convex_rank2():
    with pytest.raises(SchlafliConstraintError):
        classify("{4,3,4}")
    with pytest.raises(SchlafliConstraintError):
        classify("{5/2,5}")


def test_compact_spelling():
    assert compact(parse("{4,3,5}")) == "435"
    assert compact(parse("{5/2,5,3}")) == "5/2 5 3"


def test_as_symbol_accepts_sequences():
    assert as_symbol((4, 4)) == parse("{4,4}")
    assert as_symbol([INF, 3]) == parse("{inf,3}")


def _entries():
    conv = st.integers(2, 40).map(lambda p: Fraction(p, 1))
    star = st.integers(3, 40).flatmap(
        lambda p: st.integers(1, p - 1).filter(lambda q: __import__("math").gcd(p, q) == 1).map(
            lambda q: Fraction(p, q)))
    return st.one_of(conv, star, st.just(INF))


@given(st.lists(_entries(), min_size=1, max_size=6))
def test_format_parse_round_trip(entries):
    s = SchlafliSymbol(tuple(entries))
    assert parse(format_symbol(s)) == s
