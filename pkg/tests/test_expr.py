"""The expression grammar and the canonical formatter round-trip."""

import random
from fractions import Fraction

import pytest

from conftest import rand_poly
from jvu.expr import ParseError, format_linear_combination, format_poly, parse_expr
from jvu.fields import make_field
from jvu.freealg import FreePoly, GeneratorSet
from jvu.jordan import circ, u_apply, u_lin

QQ = make_field("rationals")
GF2 = make_field("prime-field", 2)
GF5 = make_field("prime-field", 5)

G3 = GeneratorSet(("x", "y", "z"))
G4 = GeneratorSet(("x", "y", "z", "t"))


def gen(gens, field, name):
    return FreePoly.generator(gens, field, name)


def test_parse_circle_product():
    x, y = gen(G3, QQ, "x"), gen(G3, QQ, "y")
    assert parse_expr("x*y + y*x", G3, QQ) == circ(x, y)
    assert parse_expr("circ(x, y)", G3, QQ) == circ(x, y)


def test_parse_symmetrized_witness():
    x, y, z = (gen(G3, QQ, n) for n in "xyz")
    expected = (circ(x, y) * z * x * y).symmetrize()
    assert parse_expr("sym((x*y + y*x)*z*x*y)", G3, QQ) == expected


def test_parse_u_operator():
    x, z = gen(G3, QQ, "x"), gen(G3, QQ, "z")
    assert parse_expr("U(x; z)", G3, QQ) == x * z * x
    assert parse_expr("Ulin(x, z; y)", G3, QQ) == u_lin(x, z, gen(G3, QQ, "y"))
    assert parse_expr("U(one; z)", G3, QQ) == z


def test_parse_scalars_and_precedence():
    x, y, z = (gen(G3, QQ, n) for n in "xyz")
    assert parse_expr("2*x", G3, QQ) == x.scale(Fraction(2))
    assert parse_expr("1/2*x*y", G3, QQ) == (x * y).scale(Fraction(1, 2))
    assert parse_expr("-x + x", G3, QQ).is_zero()
    assert parse_expr("x - (x - y)", G3, QQ) == y
    assert parse_expr("3/2", G3, QQ) == FreePoly.constant(G3, QQ, Fraction(3, 2))
    assert parse_expr("sq(x + y)", G3, QQ) == (x + y) * (x + y)
    assert parse_expr("rev(x*y*z)", G3, QQ) == (x * y * z).reverse()


def test_parse_scalar_inversion_mod_p():
    x = gen(G3, GF5, "x")
    assert parse_expr("1/2*x", G3, GF5) == x.scale(3)  # 1/2 = 3 mod 5
    with pytest.raises(ParseError):
        parse_expr("1/2*x", G3, GF2)


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as e:
        parse_expr("x + ", G3, QQ)
    assert e.value.pos == 4
    with pytest.raises(ParseError) as e:
        parse_expr("x @ y", G3, QQ)
    assert e.value.pos == 2
    with pytest.raises(ParseError):
        parse_expr("w + x", G3, QQ)  # unknown generator
    with pytest.raises(ParseError):
        parse_expr("circ(x y)", G3, QQ)
    with pytest.raises(ParseError):
        parse_expr("U(x, z)", G3, QQ)  # needs the semicolon
    with pytest.raises(ParseError):
        parse_expr("x y", G3, QQ)  # missing operator


def test_keyword_generator_names_rejected():
    with pytest.raises(ValueError):
        parse_expr("one", GeneratorSet(("one", "x")), QQ)


def test_format_examples():
    x, y = gen(G3, QQ, "x"), gen(G3, QQ, "y")
    assert format_poly(FreePoly.zero(G3, QQ)) == "0"
    assert format_poly(x * y - y * x) == "x*y - y*x"
    assert format_poly(x.scale(Fraction(-1, 2))) == "-1/2*x"
    assert format_poly(FreePoly.one(G3, QQ)) == "1"
    p = gen(G3, GF2, "x") * gen(G3, GF2, "y")
    assert format_poly(p) == "x*y"


def test_format_parse_round_trip_random():
    rng = random.Random(50)
    for field in (QQ, GF2, GF5):
        for _ in range(50):
            p = rand_poly(rng, G4, field)
            assert parse_expr(format_poly(p), G4, field) == p


def test_format_linear_combination_parses_back():
    x, y, z = (gen(G3, QQ, n) for n in "xyz")
    terms = [
        (Fraction(1), "circ(x, y)"),
        (Fraction(-2), "U(x; z)"),
        (Fraction(1, 3), "z"),
    ]
    text = format_linear_combination(terms, QQ)
    expected = circ(x, y) - u_apply(x, z).scale(Fraction(2)) + z.scale(Fraction(1, 3))
    assert parse_expr(text, G3, QQ) == expected
    assert format_linear_combination([], QQ) == "0"
    assert format_linear_combination([(QQ.zero, "x")], QQ) == "0"
