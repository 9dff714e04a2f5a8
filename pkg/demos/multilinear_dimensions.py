"""Symmetric multilinear elements vs Jordan elements in four generators.

The 24 multilinear words in x, y, z, t pair up under reversal into 12
symmetrized classes, so the symmetric multilinear space has dimension 12
over any field.  Closing the generators under the quadratic Jordan
operations (squares, circle, U, linearized U) only ever reaches an
11-dimensional subspace: single tetrads like {t z x y} stay out.  That gap
is what makes the characteristic-2 ideal argument work, where Grassmann
tricks are unavailable.
"""

from jvu import (
    ComponentBasis,
    FreePoly,
    GeneratorSet,
    Subspace,
    format_poly,
    jordan_spanning_set,
    make_field,
    symmetric_component_dim,
    to_vector,
)
from jvu.jordan import recipe_str

gens = GeneratorSet(("x", "y", "z", "t"))
d = (1, 1, 1, 1)

for name, field in (("GF(2)", make_field("prime-field", 2)), ("rationals", make_field("rationals"))):
    sym_dim = symmetric_component_dim(gens, d, field)

    spanning = jordan_spanning_set(gens, d, "quadratic", field=field)
    cb = ComponentBasis(gens, d)
    span = Subspace(field, len(cb))
    for elem in spanning:
        span.insert(to_vector(elem.value, cb))

    print(f"over {name}:")
    print(f"  symmetric multilinear dimension: {sym_dim}")
    print(f"  Jordan multilinear dimension:    {span.dim}")

    tetrad = FreePoly.from_word(gens, field, (3, 2, 0, 1)).symmetrize()
    verdict, _ = span.membership(to_vector(tetrad, cb))
    print(f"  tetrad {format_poly(tetrad)}: {verdict} the Jordan span")
    print()

print("A few of the Jordan spanning elements and the recipes that build them:")
field = make_field("prime-field", 2)
for elem in list(jordan_spanning_set(gens, d, "quadratic", field=field))[:4]:
    print(f"  {recipe_str(elem.recipe):24s} = {format_poly(elem.value)}")
