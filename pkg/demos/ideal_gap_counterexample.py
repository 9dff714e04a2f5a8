"""A quotient of the free special Jordan algebra where x o y = 0 does not
force the U-operators of x and y to commute.

Work at multidegree (2,2,1) in x, y, z.  Let I be the Jordan ideal generated
by f = x o y (the outer hull of F f + U_f applied to the unital hull, in the
quadratic setting) and let I-hat be the associative ideal generated by f.
The element

    k = z[U_x, U_y] = yxzxy - xyzyx

lies in I-hat but not in I.  By the Cohn criterion, the quotient SJ/I is
therefore not special, and in it the images of x and y circle to zero while
their U-operators fail to commute.  The script runs the whole computation
over GF(2) (quadratic mode, the delicate case) and over the rationals
(linear mode), prints membership certificates, and solves the 7-term
coefficient system behind the multilinear part of the argument.
"""

from jvu import (
    ComponentBasis,
    FreePoly,
    GeneratorSet,
    circ,
    cohn_gap_witness,
    commutator_image,
    format_poly,
    make_field,
    solve_combination,
    u_apply,
)
from jvu.cli import coefficient_targets
from jvu.jordan import JordanElement, je_circ, recipe_str

D = (2, 2, 1)

for name, field, mode in (
    ("GF(2)", make_field("prime-field", 2), "quadratic"),
    ("rationals", make_field("rationals"), "linear"),
):
    gens = GeneratorSet(("x", "y", "z"))
    x = FreePoly.generator(gens, field, "x")
    y = FreePoly.generator(gens, field, "y")
    z = FreePoly.generator(gens, field, "z")
    f = je_circ(JordanElement.generator(gens, field, "x"), JordanElement.generator(gens, field, "y"))
    k = commutator_image(x, y, z)

    report = cohn_gap_witness(f, k, D, mode, field)
    print(f"over {name} ({mode} mode):")
    print("  witness k = z[U_x,U_y] =", format_poly(k))
    print(f"  k in associative ideal: {report.g_in_assoc}")
    print(f"  k in Jordan ideal:      {report.g_in_outer}")
    print(f"  gap established:        {report.gap}")

    outer = report.outer
    w = (circ(x, y) * z * x * y).symmetrize()
    s = u_apply(circ(x, y), z)
    wv, _ = outer.membership(w)
    sv, s_cert = outer.membership(s)
    print(f"  {{(x o y) z x y}} in Jordan ideal: {wv}")
    print(f"  z U_(x o y) in Jordan ideal:    {sv}, e.g. via:")
    for idx, c in sorted(s_cert.items()):
        print(f"      {c} * {recipe_str(outer.inserted[idx].recipe)}")
    print(f"  Jordan component dim {outer.dim}, associative dim {report.assoc.dim},"
          f" closure rounds {outer.rounds_to_fixpoint}")
    print()

print("The multilinear obstruction: writing {(x o y) z x y} as f(x,y,z, x o y)")
print("for a 7-term ansatz forces the one-parameter family below (over Q):")
field = make_field("rationals")
gens, targets, rhs = coefficient_targets(field)
sol = solve_combination(targets, rhs, ComponentBasis(gens, D))
h = sol.homogeneous[0]
scale = 1 / h[3]
h = [scale * c for c in h]
p = [a - sol.particular[3] * b for a, b in zip(sol.particular, h)]
labels = [f"alpha{i}" for i in range(1, 8)]
for lab, pi, hi in zip(labels, p, h):
    if hi == 0:
        desc = str(pi)
    else:
        lam = "L" if hi == 1 else f"{hi}*L"
        desc = lam if pi == 0 else f"{pi} + {lam}"
    print(f"  {lab} = {desc}")
print("so alpha3 - alpha4 = 1 always: the single tetrad term never cancels away.")
