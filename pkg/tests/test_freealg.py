"""Words, sparse polynomials, the reversal involution, and the symmetrizer."""

import random
from collections import Counter

import pytest

from conftest import rand_poly
from jvu.fields import make_field
from jvu.freealg import FreePoly, GeneratorSet
from jvu.jordan import circ

QQ = make_field("rationals")
GF2 = make_field("prime-field", 2)

G3 = GeneratorSet(("x", "y", "z"))
G4 = GeneratorSet(("x", "y", "z", "t"))


def gen(gens, field, name):
    return FreePoly.generator(gens, field, name)


def test_generator_set_validates():
    with pytest.raises(ValueError):
        GeneratorSet(("x", "x"))
    with pytest.raises(ValueError):
        GeneratorSet(())
    assert G3.index("z") == 2
    with pytest.raises(KeyError):
        G3.index("w")


def test_monomial_concatenation():
    x, y = gen(G3, QQ, "x"), gen(G3, QQ, "y")
    assert (x * y).terms == {(0, 1): QQ.one}


def test_cancellation_gives_empty_polynomial():
    x, y = gen(G3, QQ, "x"), gen(G3, QQ, "y")
    assert (x * y - x * y).is_zero()
    assert (x * y + (-(x * y))).terms == {}


def test_mul_distributes():
    x, y, z = (gen(G3, QQ, n) for n in "xyz")
    assert (x * y + y * x) * z == x * y * z + y * x * z


def test_mismatched_gens_or_fields_rejected():
    x3 = gen(G3, QQ, "x")
    x4 = gen(G4, QQ, "x")
    x2 = gen(G3, GF2, "x")
    with pytest.raises(ValueError):
        x3 + x4
    with pytest.raises(ValueError):
        x3 * x2


def test_reverse_single_word():
    x, y, z = (gen(G3, QQ, n) for n in "xyz")
    assert (x * y * z).reverse() == z * y * x


def test_reverse_involution_random():
    rng = random.Random(3)
    for _ in range(50):
        p = rand_poly(rng, G3, QQ)
        assert p.reverse().reverse() == p


def test_reverse_antihomomorphism_random():
    rng = random.Random(4)
    for field in (QQ, GF2):
        for _ in range(50):
            p, q = rand_poly(rng, G3, field), rand_poly(rng, G3, field)
            assert (p * q).reverse() == q.reverse() * p.reverse()


def test_symmetrize_definition():
    x, y, z, t = (gen(G4, QQ, n) for n in "xyzt")
    assert (x * y * z * t).symmetrize() == x * y * z * t + t * z * y * x


def test_symmetrize_xy_equals_circ():
    x, y = gen(G3, QQ, "x"), gen(G3, QQ, "y")
    assert (x * y).symmetrize() == circ(x, y)


def test_symmetrize_palindrome_vanishes_in_char2():
    x, z = gen(G3, GF2, "x"), gen(G3, GF2, "z")
    assert (x * z * x).symmetrize().is_zero()


def test_symmetrize_fixed_by_reverse_random():
    rng = random.Random(5)
    for field in (QQ, GF2):
        for _ in range(50):
            s = rand_poly(rng, G3, field).symmetrize()
            assert s.reverse() == s


def test_component_filters():
    x, y, z = (gen(G3, QQ, n) for n in "xyz")
    p = x * y + x * z * y
    assert p.component((1, 1, 0)) == x * y
    assert p.component((5, 0, 0)).is_zero()
    assert FreePoly.zero(G3, QQ).component((1, 1, 0)).is_zero()


def test_symmetrized_product_is_homogeneous_221():
    """Expand {(x o y) z x y}: every word must use x twice, y twice, z once."""
    x, y, z = (gen(G3, QQ, n) for n in "xyz")
    p = (circ(x, y) * z * x * y).symmetrize()
    for w in p.terms:
        counts = Counter(w)
        assert (counts[0], counts[1], counts[2]) == (2, 2, 1)
    assert p.is_homogeneous((2, 2, 1))
    assert not p.is_homogeneous((1, 2, 2))


def test_multidegree_additive_random():
    rng = random.Random(6)
    for _ in range(50):
        w1 = tuple(rng.randrange(3) for _ in range(rng.randint(0, 4)))
        w2 = tuple(rng.randrange(3) for _ in range(rng.randint(0, 4)))
        p = FreePoly.from_word(G3, QQ, w1)
        q = FreePoly.from_word(G3, QQ, w2)
        dp, dq = p.multidegree(), q.multidegree()
        assert (p * q).multidegree() == tuple(a + b for a, b in zip(dp, dq))


def test_canonical_equality_random():
    rng = random.Random(7)
    for field in (QQ, GF2):
        for _ in range(50):
            p = rand_poly(rng, G4, field)
            assert (p - p).is_zero()
            assert p + FreePoly.zero(G4, field) == p


def test_scale_and_constant():
    x = gen(G3, QQ, "x")
    assert x.scale(QQ.zero).is_zero()
    two = FreePoly.constant(G3, QQ, QQ.from_int(2))
    assert two * x == x.scale(QQ.from_int(2))


def test_sorted_terms_deglex():
    x, y = gen(G3, QQ, "x"), gen(G3, QQ, "y")
    p = y * x + x * y + x
    words = [w for w, _ in p.sorted_terms()]
    assert words == [(0,), (0, 1), (1, 0)]
