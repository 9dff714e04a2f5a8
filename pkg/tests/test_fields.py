"""Exact field arithmetic over Q and GF(p)."""

import random
from fractions import Fraction

import pytest

from conftest import rand_nonzero_scalar, rand_scalar
from jvu.fields import FieldError, arith, field_from_name, make_field

QQ = make_field("rationals")
GF2 = make_field("prime-field", 2)
GF5 = make_field("prime-field", 5)


def test_make_field_construction():
    assert make_field("prime-field", 2).characteristic == 2
    assert make_field("rationals").characteristic == 0


def test_make_field_rejects_nonprime():
    with pytest.raises(FieldError):
        make_field("prime-field", 4)
    with pytest.raises(FieldError):
        make_field("prime-field", 1)
    with pytest.raises(FieldError):
        make_field("bogus")


def test_field_from_name():
    assert field_from_name("q") == QQ
    assert field_from_name("gf2") == GF2
    assert field_from_name("gf97").characteristic == 97
    with pytest.raises(FieldError):
        field_from_name("gf6")
    with pytest.raises(FieldError):
        field_from_name("float")


def test_rational_add():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_gf2_add_wraps():
    assert GF2.add(1, 1) == 0


def test_inverse_of_zero_fails():
    with pytest.raises(ZeroDivisionError):
        GF2.inv(0)
    with pytest.raises(ZeroDivisionError):
        QQ.inv(Fraction(0))


def test_arith_dispatch_and_operand_validation():
    assert arith(QQ, "add", Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert arith(GF5, "neg", 3) == 2
    with pytest.raises(FieldError):
        arith(GF2, "add", Fraction(1, 2), 1)  # mixed-field operand
    with pytest.raises(FieldError):
        arith(QQ, "neg", Fraction(1), Fraction(1))
    with pytest.raises(FieldError):
        arith(QQ, "pow", Fraction(1), Fraction(1))


@pytest.mark.parametrize("field", [QQ, GF2, GF5])
def test_field_axioms_random(field):
    """Associativity, commutativity, distributivity, inverses: 50 random triples."""
    rng = random.Random(1)
    for _ in range(50):
        a, b, c = (rand_scalar(rng, field) for _ in range(3))
        assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
        assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
        assert field.add(a, b) == field.add(b, a)
        assert field.mul(a, b) == field.mul(b, a)
        assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
        assert field.is_zero(field.add(a, field.neg(a)))
        n = rand_nonzero_scalar(rng, field)
        assert field.mul(n, field.inv(n)) == field.one


@pytest.mark.parametrize("field", [QQ, GF2, GF5])
def test_canonical_form_unique(field):
    """Equal values compare equal after canonicalization."""
    rng = random.Random(2)
    for _ in range(50):
        a = rand_scalar(rng, field)
        b = field.sub(field.add(a, field.one), field.one)
        assert a == b
        field.check(a)


def test_gf2_negation_is_identity():
    """Over GF(2) the map x -> -x is the identity (char-2 degeneration)."""
    for x in (0, 1):
        assert GF2.neg(x) == x


def test_from_rational_over_prime_field():
    assert GF5.from_rational(1, 2) == 3  # 2 * 3 = 6 = 1 mod 5
    with pytest.raises(ZeroDivisionError):
        GF2.from_rational(1, 2)
