"""Jordan operations, the bracketing identity, and spanning-set closures."""

import random
from fractions import Fraction

import pytest

from conftest import rand_poly
from jvu.fields import make_field
from jvu.freealg import FreePoly, GeneratorSet
from jvu.jordan import (
    JordanElement,
    circ,
    commutator_image,
    eval_recipe,
    je_circ,
    jordan_closure_table,
    jordan_spanning_set,
    recipe_str,
    spanning_is_fixed_point,
    square,
    symmetric_component_dim,
    u_apply,
    u_lin,
    commutator_identity_residual,
)
from jvu.linalg import ComponentBasis, Subspace, to_vector

QQ = make_field("rationals")
GF2 = make_field("prime-field", 2)
GF5 = make_field("prime-field", 5)

G1 = GeneratorSet(("x",))
G3 = GeneratorSet(("x", "y", "z"))
G4 = GeneratorSet(("x", "y", "z", "t"))


def gen(gens, field, name):
    return FreePoly.generator(gens, field, name)


def test_circ_examples():
    x, y = gen(G3, QQ, "x"), gen(G3, QQ, "y")
    assert circ(x, y) == x * y + y * x
    assert circ(x, x) == (x * x).scale(QQ.from_int(2))
    x2, dummy = gen(G3, GF2, "x"), None
    assert circ(x2, x2).is_zero()


def test_circ_symmetric_random():
    rng = random.Random(12)
    for _ in range(50):
        p, q = rand_poly(rng, G3, QQ), rand_poly(rng, G3, QQ)
        assert circ(p, q) == circ(q, p)


def test_u_apply_examples():
    x, z = gen(G3, QQ, "x"), gen(G3, QQ, "z")
    assert u_apply(x, z) == x * z * x
    y = gen(G3, QQ, "y")
    xy = circ(x, y)
    assert u_apply(xy, z) == xy * z * xy
    a = rand_poly(random.Random(13), G3, QQ)
    assert u_apply(FreePoly.one(G3, QQ), a) == a


def test_u_lin_examples():
    x, y, z = (gen(G3, QQ, n) for n in "xyz")
    assert u_lin(x, z, y) == (x * y * z).symmetrize()
    b, a = gen(G3, QQ, "y"), gen(G3, QQ, "z")
    assert u_lin(b, b, a) == u_apply(b, a).scale(QQ.from_int(2))
    one = FreePoly.one(G3, QQ)
    assert u_lin(x, one, a) == circ(x, a)


def test_u_apply_via_circle_in_char_not_2():
    """b a b = ((a o b) o b)/2 - (a o (b b))/2: the linear-mode reduction of U."""
    rng = random.Random(14)
    half = Fraction(1, 2)
    for _ in range(50):
        a, b = rand_poly(rng, G3, QQ), rand_poly(rng, G3, QQ)
        lhs = u_apply(b, a)
        rhs = circ(circ(a, b), b).scale(half) - circ(a, b * b).scale(half)
        assert lhs == rhs


def test_commutator_image_examples():
    x, y, z = (gen(G3, QQ, n) for n in "xyz")
    expected = y * x * z * x * y - x * y * z * y * x
    assert commutator_image(x, y, z) == expected
    assert commutator_image(x, x, z).is_zero()
    assert (commutator_image(x, y, z) + commutator_image(y, x, z)).is_zero()


@pytest.mark.parametrize("field", [QQ, GF2, GF5])
def test_commutator_identity_residual_zero(field):
    assert commutator_identity_residual(field).is_zero()


def test_commutator_identity_gf5_frozen_expansion():
    """Independent oracle: the eight associative words expanded by hand."""
    x, y, z = (gen(G3, GF5, n) for n in "xyz")
    lhs = commutator_image(x, y, z)
    assert lhs.terms == {(1, 0, 2, 0, 1): 1, (0, 1, 2, 1, 0): 4}
    sym_part = (circ(x, y) * z * x * y).symmetrize()
    assert sym_part.terms == {(0, 1, 2, 0, 1): 1, (1, 0, 2, 0, 1): 2, (1, 0, 2, 1, 0): 1}
    u_part = u_apply(circ(x, y), z)
    assert u_part.terms == {
        (0, 1, 2, 0, 1): 1,
        (0, 1, 2, 1, 0): 1,
        (1, 0, 2, 0, 1): 1,
        (1, 0, 2, 1, 0): 1,
    }
    assert lhs == sym_part - u_part


def _span_of(elements, gens, d, field):
    cb = ComponentBasis(gens, d)
    s = Subspace(field, len(cb))
    for e in elements:
        s.insert(to_vector(e.value, cb))
    return s, cb


def test_spanning_multilinear_three_gens_linear():
    """Hand enumeration: the 3 symmetrized classes {xyz}, {xzy}, {yxz} span,
    and the Jordan span reaches all of them."""
    ss = jordan_spanning_set(G3, (1, 1, 1), "linear", field=QQ)
    span, cb = _span_of(ss, G3, (1, 1, 1), QQ)
    assert span.dim == 3
    for w in ((0, 1, 2), (0, 2, 1), (1, 0, 2)):
        sym = FreePoly.from_word(G3, QQ, w).symmetrize()
        assert span.contains(to_vector(sym, cb))


def test_spanning_multilinear_four_gens_gf2_dim_11():
    ss = jordan_spanning_set(G4, (1, 1, 1, 1), "quadratic", field=GF2)
    span, _ = _span_of(ss, G4, (1, 1, 1, 1), GF2)
    assert span.dim == 11


def test_spanning_one_generator_cube():
    for mode in ("linear", "quadratic"):
        ss = jordan_spanning_set(G1, (3,), mode, field=QQ)
        span, cb = _span_of(ss, G1, (3,), QQ)
        assert span.dim == 1
        x = gen(G1, QQ, "x")
        assert span.contains(to_vector(x * x * x, cb))


def test_spanning_elements_are_symmetric():
    """Jordan span lies inside the reverse-fixed elements."""
    for field in (QQ, GF2):
        ss = jordan_spanning_set(G4, (1, 1, 1, 1), "quadratic", field=field)
        assert len(ss) >= 11
        for e in ss:
            assert e.value.reverse() == e.value
            assert e.value.is_homogeneous((1, 1, 1, 1))


def test_spanning_fixed_point_certified():
    for field, mode in ((GF2, "quadratic"), (QQ, "linear")):
        table = jordan_closure_table(G3, (2, 2, 1), mode, False, field)
        assert spanning_is_fixed_point(table, mode)


def test_linear_and_quadratic_spans_agree_over_q():
    """With 1/2 available the two operation alphabets span the same components."""
    for d in ((1, 1, 1, 1), (2, 1, 1, 0)):
        lin = jordan_spanning_set(G4, d, "linear", field=QQ)
        quad = jordan_spanning_set(G4, d, "quadratic", field=QQ)
        slin, cb = _span_of(lin, G4, d, QQ)
        squad, _ = _span_of(quad, G4, d, QQ)
        assert slin.dim == squad.dim
        for e in quad:
            assert slin.contains(to_vector(e.value, cb))


def test_linear_mode_is_smaller_in_char2():
    """Over GF(2) the circle alphabet alone cannot span the multilinear
    component; the quadratic alphabet is genuinely needed."""
    lin = jordan_spanning_set(G3, (1, 1, 1), "linear", field=GF2)
    quad = jordan_spanning_set(G3, (1, 1, 1), "quadratic", field=GF2)
    slin, _ = _span_of(lin, G3, (1, 1, 1), GF2)
    squad, _ = _span_of(quad, G3, (1, 1, 1), GF2)
    assert slin.dim < squad.dim == 3


def test_degree_bound_enforced():
    with pytest.raises(ValueError):
        jordan_spanning_set(G4, (3, 3, 2, 1), "quadratic", field=QQ)


def test_symmetric_component_dims():
    assert symmetric_component_dim(G4, (1, 1, 1, 1), GF2) == 12
    assert symmetric_component_dim(G4, (1, 1, 1, 1), QQ) == 12
    assert symmetric_component_dim(G3, (1, 1, 1), QQ) == 3
    assert symmetric_component_dim(G1, (2,), QQ) == 1


def test_symmetric_component_dim_formula_multilinear():
    """No multilinear word is a palindrome, so the dimension is words/2."""
    from math import factorial

    for gens, d in ((G3, (1, 1, 1)), (G4, (1, 1, 1, 1))):
        n = len(gens)
        expected = factorial(n) // 2
        assert symmetric_component_dim(gens, d, QQ) == expected
        assert symmetric_component_dim(gens, d, GF2) == expected


def test_symmetric_component_dim_char2_palindrome_collapse():
    """(2,1): words xxy, xyx, yxx; the palindrome's symmetrization dies mod 2
    but survives over Q."""
    g2 = GeneratorSet(("x", "y"))
    assert symmetric_component_dim(g2, (2, 1), QQ) == 2
    assert symmetric_component_dim(g2, (2, 1), GF2) == 1


def test_recipes_evaluate_and_render():
    x = JordanElement.generator(G3, QQ, "x")
    y = JordanElement.generator(G3, QQ, "y")
    e = je_circ(x, y)
    assert recipe_str(e.recipe) == "circ(x, y)"
    assert eval_recipe(e.recipe, G3, QQ) == e.value
    rng = random.Random(15)
    for elem in jordan_spanning_set(G4, (1, 1, 1, 1), "quadratic", field=GF2):
        assert eval_recipe(elem.recipe, G4, GF2) == elem.value


def test_square_polarizes_to_circ():
    rng = random.Random(16)
    for _ in range(50):
        p, q = rand_poly(rng, G3, QQ), rand_poly(rng, G3, QQ)
        assert square(p + q) == square(p) + square(q) + circ(p, q)
