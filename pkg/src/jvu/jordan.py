"""Jordan operations inside the free associative algebra, and spanning sets
for multidegree components of the free special Jordan algebra SJ[X].

The special representation realizes the linear operation a o b = ab + ba and
the quadratic operation a U_b = bab on symmetric elements of F<X>.  Spanning
sets are built by closing the generators under the operation alphabet of the
chosen mode:

* ``linear``    -- circle products only (enough when 1/2 is in the field);
* ``quadratic`` -- squares, circle, U and its linearization, the alphabet
  that defines SJ[X] as a quadratic Jordan algebra and is required in
  characteristic 2.

Every element carries a *recipe*, an expression tree over these operations,
so membership certificates elsewhere stay human-readable.
"""

from __future__ import annotations

from .fields import Field
from .freealg import FreePoly, GeneratorSet, MultiDegree
from .linalg import ComponentBasis, Subspace, to_vector

LINEAR = "linear"
QUADRATIC = "quadratic"

DEFAULT_DEGREE_BOUND = 8


def circ(p: FreePoly, q: FreePoly) -> FreePoly:
    """The circle product pq + qp."""
    return p * q + q * p


def u_apply(b: FreePoly, a: FreePoly) -> FreePoly:
    """a U_b = b a b."""
    return b * a * b


def u_lin(b: FreePoly, c: FreePoly, a: FreePoly) -> FreePoly:
    """Linearized U: b a c + c a b = a U_{b+c} - a U_b - a U_c."""
    return b * a * c + c * a * b


def square(p: FreePoly) -> FreePoly:
    return p * p


def commutator_image(a: FreePoly, b: FreePoly, c: FreePoly) -> FreePoly:
    """c U_a U_b - c U_b U_a, the image of c under the U-operator commutator."""
    return u_apply(b, u_apply(a, c)) - u_apply(a, u_apply(b, c))


def commutator_identity_residual(field: Field) -> FreePoly:
    """Residual of z[U_x,U_y] - {(x o y) z x y} + z U_{x o y} over the given field.

    The contract is that this is the zero polynomial over every field.
    """
    gens = GeneratorSet(("x", "y", "z"))
    x = FreePoly.generator(gens, field, "x")
    y = FreePoly.generator(gens, field, "y")
    z = FreePoly.generator(gens, field, "z")
    xy = circ(x, y)
    lhs = commutator_image(x, y, z)
    rhs = (xy * z * x * y).symmetrize() - u_apply(xy, z)
    return lhs - rhs


# ---------------------------------------------------------------------------
# Jordan elements with recipes


class JordanElement:
    """A symmetric polynomial together with the Jordan expression producing it.

    Recipe nodes: ("gen", name), ("unit",), ("square", r), ("circ", r, r),
    ("U", b, a) for a U_b, ("Ulin", b, c, a), ("scale", scalar, r).
    """

    __slots__ = ("value", "recipe", "multidegree")

    def __init__(self, value: FreePoly, recipe):
        self.value = value
        self.recipe = recipe
        self.multidegree = value.multidegree()

    def __repr__(self):
        return f"JordanElement({recipe_str(self.recipe)})"

    @classmethod
    def generator(cls, gens: GeneratorSet, field: Field, name: str) -> "JordanElement":
        return cls(FreePoly.generator(gens, field, name), ("gen", name))

    @classmethod
    def unit(cls, gens: GeneratorSet, field: Field) -> "JordanElement":
        return cls(FreePoly.one(gens, field), ("unit",))


def je_circ(v: JordanElement, w: JordanElement) -> JordanElement:
    return JordanElement(circ(v.value, w.value), ("circ", v.recipe, w.recipe))


def je_square(v: JordanElement) -> JordanElement:
    return JordanElement(square(v.value), ("square", v.recipe))


def je_u(b: JordanElement, a: JordanElement) -> JordanElement:
    return JordanElement(u_apply(b.value, a.value), ("U", b.recipe, a.recipe))


def je_ulin(b: JordanElement, c: JordanElement, a: JordanElement) -> JordanElement:
    return JordanElement(u_lin(b.value, c.value, a.value), ("Ulin", b.recipe, c.recipe, a.recipe))


def recipe_str(recipe) -> str:
    """Render a recipe in the expression grammar of the command line."""
    kind = recipe[0]
    if kind == "gen":
        return recipe[1]
    if kind == "unit":
        return "one"
    if kind == "square":
        return f"sq({recipe_str(recipe[1])})"
    if kind == "circ":
        return f"circ({recipe_str(recipe[1])}, {recipe_str(recipe[2])})"
    if kind == "U":
        return f"U({recipe_str(recipe[1])}; {recipe_str(recipe[2])})"
    if kind == "Ulin":
        return f"Ulin({recipe_str(recipe[1])}, {recipe_str(recipe[2])}; {recipe_str(recipe[3])})"
    if kind == "scale":
        return f"{recipe[1]}*({recipe_str(recipe[2])})"
    raise ValueError(f"unknown recipe node {kind!r}")


def eval_recipe(recipe, gens: GeneratorSet, field: Field) -> FreePoly:
    """Re-evaluate a recipe from scratch (used to replay certificates)."""
    kind = recipe[0]
    if kind == "gen":
        return FreePoly.generator(gens, field, recipe[1])
    if kind == "unit":
        return FreePoly.one(gens, field)
    if kind == "square":
        return square(eval_recipe(recipe[1], gens, field))
    if kind == "circ":
        return circ(eval_recipe(recipe[1], gens, field), eval_recipe(recipe[2], gens, field))
    if kind == "U":
        return u_apply(eval_recipe(recipe[1], gens, field), eval_recipe(recipe[2], gens, field))
    if kind == "Ulin":
        return u_lin(
            eval_recipe(recipe[1], gens, field),
            eval_recipe(recipe[2], gens, field),
            eval_recipe(recipe[3], gens, field),
        )
    if kind == "scale":
        return eval_recipe(recipe[2], gens, field).scale(recipe[1])
    raise ValueError(f"unknown recipe node {kind!r}")


# ---------------------------------------------------------------------------
# Graded span tables and the spanning-set closure


def dominated(d: MultiDegree, limit: MultiDegree) -> bool:
    return all(a <= b for a, b in zip(d, limit))


class GradedSpanTable:
    """Echelonized spans of homogeneous elements, one per multidegree <= limit.

    Any intermediate whose multidegree exceeds the limit componentwise can
    never return below it under further multiplications, so such elements are
    pruned before they are ever computed.
    """

    def __init__(self, gens: GeneratorSet, field: Field, limit: MultiDegree):
        self.gens = gens
        self.field = field
        self.limit = tuple(limit)
        self._bases: dict[MultiDegree, ComponentBasis] = {}
        self._spans: dict[MultiDegree, Subspace] = {}
        self._reps: dict[MultiDegree, list[JordanElement]] = {}
        self._inserted: dict[MultiDegree, list[JordanElement]] = {}

    def component_basis(self, d: MultiDegree) -> ComponentBasis:
        if d not in self._bases:
            self._bases[d] = ComponentBasis(self.gens, d)
        return self._bases[d]

    def subspace(self, d: MultiDegree) -> Subspace:
        if d not in self._spans:
            self._spans[d] = Subspace(self.field, len(self.component_basis(d)))
        return self._spans[d]

    def insert(self, elem: JordanElement) -> bool:
        """Insert an element into its component; True iff the span grew."""
        if elem.value.is_zero():
            return False
        d = elem.multidegree
        if d is None:
            raise ValueError("span table takes homogeneous elements only")
        if not dominated(d, self.limit):
            return False
        vec = to_vector(elem.value, self.component_basis(d))
        self._inserted.setdefault(d, []).append(elem)
        if self.subspace(d).insert(vec):
            self._reps.setdefault(d, []).append(elem)
            return True
        return False

    def reps(self, d: MultiDegree) -> list[JordanElement]:
        return list(self._reps.get(tuple(d), ()))

    def inserted(self, d: MultiDegree) -> list[JordanElement]:
        """Every element ever inserted at d, aligned with the span's insert indices."""
        return list(self._inserted.get(tuple(d), ()))

    def all_reps(self) -> list[JordanElement]:
        out = []
        for reps in self._reps.values():
            out.extend(reps)
        return out

    def multidegrees(self) -> list[MultiDegree]:
        """Multidegrees whose spans have been touched, ascending."""
        return sorted(self._inserted, key=lambda d: (sum(d), d))

    def dim(self, d: MultiDegree) -> int:
        d = tuple(d)
        if d not in self._spans:
            return 0
        return self._spans[d].dim


def _degree_sum(*elems: JordanElement) -> MultiDegree:
    return tuple(sum(c) for c in zip(*(e.multidegree for e in elems)))


def _spanning_candidates(reps, old_ids, mode, limit):
    """Candidate products over the current representatives, skipping those
    whose slots are all old (their products are already in the span)."""
    for i, v in enumerate(reps):
        v_old = id(v) in old_ids
        if mode == QUADRATIC and not v_old:
            if dominated(_degree_sum(v, v), limit):
                yield je_square(v)
        for j in range(i, len(reps)):
            w = reps[j]
            if v_old and id(w) in old_ids:
                continue
            if dominated(_degree_sum(v, w), limit):
                yield je_circ(v, w)
    if mode != QUADRATIC:
        return
    for b in reps:
        b_old = id(b) in old_ids
        for a in reps:
            if b_old and id(a) in old_ids:
                continue
            if dominated(_degree_sum(b, b, a), limit):
                yield je_u(b, a)
    for i, b in enumerate(reps):
        for c in reps[i + 1 :]:
            bc_old = id(b) in old_ids and id(c) in old_ids
            for a in reps:
                if bc_old and id(a) in old_ids:
                    continue
                if dominated(_degree_sum(b, c, a), limit):
                    yield je_ulin(b, c, a)


class SpanningSet:
    """Homogeneous Jordan elements spanning one multidegree component of SJ[X]
    (or of its unital hull)."""

    __slots__ = ("elements", "multidegree", "mode")

    def __init__(self, elements: list[JordanElement], d: MultiDegree, mode: str):
        self.elements = elements
        self.multidegree = tuple(d)
        self.mode = mode

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


_SPANNING_CACHE: dict = {}


def jordan_closure_table(
    gens: GeneratorSet,
    limit: MultiDegree,
    mode: str,
    unital: bool,
    field: Field,
    degree_bound: int = DEFAULT_DEGREE_BOUND,
) -> GradedSpanTable:
    """Close the generators (plus the formal unit, if requested) under the
    mode's operation alphabet, keeping every multidegree <= limit.

    Runs breadth-first rounds until a full round adds no new span vector, so
    the result is a certified fixed point.
    """
    if mode not in (LINEAR, QUADRATIC):
        raise ValueError(f"unknown mode {mode!r}")
    if sum(limit) > degree_bound:
        raise ValueError(f"total degree {sum(limit)} exceeds bound {degree_bound}")
    key = (gens.names, tuple(limit), mode, unital, field)
    if key in _SPANNING_CACHE:
        return _SPANNING_CACHE[key]
    table = GradedSpanTable(gens, field, limit)
    seeds = [JordanElement.generator(gens, field, n) for n in gens.names]
    if unital:
        seeds.append(JordanElement.unit(gens, field))
    for s in seeds:
        table.insert(s)
    old_ids: set[int] = set()
    while True:
        reps = table.all_reps()
        grew = False
        for cand in _spanning_candidates(reps, old_ids, mode, table.limit):
            if table.insert(cand):
                grew = True
        old_ids = {id(e) for e in reps}
        if not grew:
            break
    _SPANNING_CACHE[key] = table
    return table


def jordan_spanning_set(
    gens: GeneratorSet,
    d: MultiDegree,
    mode: str,
    field: Field,
    unital: bool = False,
    degree_bound: int = DEFAULT_DEGREE_BOUND,
) -> SpanningSet:
    """A finite set of homogeneous Jordan elements spanning the multidegree-d
    component of SJ[X] (resp. of its unital hull when ``unital``)."""
    d = tuple(d)
    table = jordan_closure_table(gens, d, mode, unital, field, degree_bound)
    return SpanningSet(table.reps(d), d, mode)


def spanning_is_fixed_point(
    table: GradedSpanTable, mode: str
) -> bool:
    """Re-verify closure: one more full round over the final representatives
    must land entirely inside the recorded spans."""
    reps = table.all_reps()
    for cand in _spanning_candidates(reps, set(), mode, table.limit):
        if cand.value.is_zero():
            continue
        d = cand.multidegree
        vec = to_vector(cand.value, table.component_basis(d))
        if not table.subspace(d).contains(vec):
            return False
    return True


def symmetric_component_dim(gens: GeneratorSet, d: MultiDegree, field: Field) -> int:
    """Dimension of span{ {w} : w a word of multidegree d } over the field."""
    cb = ComponentBasis(gens, d)
    span = Subspace(field, len(cb))
    for w in cb.words:
        sym = FreePoly.from_word(gens, field, w).symmetrize()
        if not sym.is_zero():
            span.insert(to_vector(sym, cb))
    return span.dim
