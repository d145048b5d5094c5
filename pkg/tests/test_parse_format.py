from fractions import Fraction

import pytest

from ncbinom import (AlgebraContext, ContextError, ParseError, format_element,
                     parse_element)
from conftest import random_element, seeded


def test_parse_basic(ctx):
    a, b, _ = ctx.gens()
    assert parse_element("a*b - b*a", ctx) == a * b - b * a
    assert parse_element("(a+b)^2", ctx) == (a + b) ** 2
    assert parse_element("1", ctx) == ctx.one()
    assert parse_element("0", ctx) == ctx.zero()
    assert parse_element("3/2*a", ctx) == a.scale(Fraction(3, 2))


def test_parse_parameters(ctx):
    a, b, _ = ctx.gens()
    q = ctx.param("q")
    h = ctx.param("h")
    assert parse_element("q*b*a + h*b^2", ctx) == (q * (b * a)
                                                   + h * (b * b))
    assert parse_element("(q - 1)*b*a", ctx) == (q - 1) * (b * a)
    assert parse_element("q^2", ctx) == ctx.scalar(q * q)


def test_parse_signs(ctx):
    a, b, _ = ctx.gens()
    assert parse_element("-a + b", ctx) == b - a
    assert parse_element("a + -b", ctx) == a - b
    assert parse_element("a - -b", ctx) == a + b
    with pytest.raises(ParseError):
        parse_element("--a", ctx)


def test_parse_whitespace_insensitive(ctx):
    assert parse_element("a*b-b*a", ctx) == parse_element(" a * b  -  b * a ", ctx)


def test_juxtaposition_is_an_error(ctx):
    # multiplication must be explicit
    with pytest.raises(ParseError):
        parse_element("2a", ctx)
    with pytest.raises(ParseError):
        parse_element("a b", ctx)
    with pytest.raises(ParseError):
        parse_element("q(a+b)", ctx)


def test_parse_error_positions(ctx):
    with pytest.raises(ParseError) as info:
        parse_element("a + $", ctx)
    assert info.value.position == 4
    with pytest.raises(ParseError) as info:
        parse_element("2a", ctx)
    assert info.value.position == 1


def test_parse_structural_errors(ctx):
    for bad in ("", "a +", "(a", "a^", "a^b", "a^1/2", "a*", "a)", "3/0"):
        with pytest.raises(ParseError):
            parse_element(bad, ctx)


def test_unknown_identifier(ctx):
    with pytest.raises(ContextError):
        parse_element("a + zeta", ctx)


def test_format_then_parse_examples(ctx):
    a, b, c = ctx.gens()
    q = ctx.param("q")
    cases = [
        ctx.zero(),
        ctx.one(),
        -ctx.one(),
        a - b,
        (a + b) ** 3,
        (q - 1) * (b * a) + c.scale(Fraction(2, 3)),
        ctx.scalar(q * q - 2),
        a.scale(q) - b.scale(q + 1),
    ]
    for e in cases:
        assert parse_element(format_element(e), ctx) == e


def test_round_trip_seeded_random():
    ctx = AlgebraContext(("a", "b", "c"), ("q", "h"))
    rng = seeded(424242)
    for _ in range(200):
        e = random_element(rng, ctx, max_terms=4, max_len=3, with_params=True)
        assert parse_element(format_element(e), ctx) == e
