"""Graded components of principal ideals on both sides of the Cohn criterion.

For a homogeneous Jordan element f this computes, per multidegree:

* the component of the Jordan outer ideal generated by f -- the span of
  F f + U_f(unital hull) closed under all circle and U multiplications by
  elements of the unital hull (``quadratic`` mode), or the plain linear-ideal
  circle closure (``linear`` mode, enough when 1/2 is in the field);
* the component of the two-sided associative ideal generated by f -- the
  span of all w1 f w2 over complementary word pairs, enumerated exhaustively.

Both are finite linear-algebra problems because the ideals are multigraded.
The gap witness check asks whether an element lies in the associative
component but outside the Jordan one; a quotient with such a witness cannot
be special.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .fields import Field
from .freealg import FreePoly, GeneratorSet, MultiDegree
from .jordan import (
    DEFAULT_DEGREE_BOUND,
    GradedSpanTable,
    JordanElement,
    LINEAR,
    QUADRATIC,
    dominated,
    je_circ,
    je_u,
    je_ulin,
    jordan_closure_table,
)
from .linalg import ComponentBasis, Subspace, from_vector, to_vector, words_of_multidegree


def _sub_multidegrees(limit: MultiDegree) -> list[MultiDegree]:
    """All multidegrees <= limit componentwise, ascending by total degree then lex."""
    ranges = [range(c + 1) for c in limit]
    out: list[MultiDegree] = [()]
    for r in ranges:
        out = [d + (c,) for d in out for c in r]
    return sorted(out, key=lambda d: (sum(d), d))


def _degree_diff(d: MultiDegree, e: MultiDegree) -> MultiDegree | None:
    diff = tuple(a - b for a, b in zip(d, e))
    return diff if all(c >= 0 for c in diff) else None


def _degree_sum2(a: MultiDegree, b: MultiDegree) -> MultiDegree:
    return tuple(x + y for x, y in zip(a, b))


@dataclass
class OuterIdealComponent:
    """The multidegree-d slice of the Jordan outer ideal generated by f,
    with a generation certificate per inserted vector and a closure that has
    been run to a fixed point."""

    generator: JordanElement
    multidegree: MultiDegree
    mode: str
    field: Field
    component_basis: ComponentBasis
    span: Subspace
    inserted: list[JordanElement]  # aligned with span insert indices
    rounds_to_fixpoint: int  # rounds that added at least one new span vector
    table: GradedSpanTable = dc_field(repr=False, default=None)

    @property
    def dim(self) -> int:
        return self.span.dim

    def membership(self, p: FreePoly):
        """("inside", {insert index -> coeff}) or ("outside", residual FreePoly)."""
        verdict, data = self.span.membership(to_vector(p, self.component_basis))
        if verdict == "inside":
            return verdict, data
        return verdict, from_vector(data, self.component_basis, self.field)


def _multiplier_reps(gens, d, mode, field, degree_bound):
    """Spanning representatives of SJ[X] at every nonzero multidegree <= d."""
    cap = tuple(d)
    table = jordan_closure_table(gens, cap, mode, mode == QUADRATIC, field, degree_bound)
    zero = (0,) * len(gens)
    out = []
    for e in _sub_multidegrees(cap):
        if e == zero:
            continue
        reps = table.reps(e)
        if reps:
            out.append((e, reps))
    return table, out


def outer_ideal_component(
    f: JordanElement,
    d: MultiDegree,
    mode: str,
    field: Field,
    degree_bound: int = DEFAULT_DEGREE_BOUND,
) -> OuterIdealComponent:
    """Compute the multidegree-d component of the outer ideal generated by f.

    Quadratic mode seeds with f and U_f applied to spanning elements of the
    unital hull, then closes under circle, U, and linearized-U multiplication
    by spanning Jordan elements of every admissible complementary multidegree;
    linear mode seeds with f and closes under circle multiplication only.
    Breadth-first rounds run until a full round adds nothing.
    """
    d = tuple(d)
    if sum(d) > degree_bound:
        raise ValueError(f"total degree {sum(d)} exceeds bound {degree_bound}")
    if f.multidegree is None:
        raise ValueError("ideal generator must be homogeneous")
    if not dominated(f.multidegree, d):
        raise ValueError(f"generator multidegree {f.multidegree} not below target {d}")
    if mode not in (LINEAR, QUADRATIC):
        raise ValueError(f"unknown mode {mode!r}")
    gens = f.value.gens
    jordan_table, multipliers = _multiplier_reps(gens, d, mode, field, degree_bound)

    table = GradedSpanTable(gens, field, d)
    frontier: list[JordanElement] = []

    def push(elem: JordanElement):
        if table.insert(elem):
            frontier.append(elem)

    push(f)
    if mode == QUADRATIC:
        ff = f.multidegree
        udeg = tuple(2 * c for c in ff)
        zero = (0,) * len(gens)
        for e in _sub_multidegrees(d):
            if _degree_diff(d, tuple(a + b for a, b in zip(udeg, e))) is None:
                continue
            hull_reps = (
                [JordanElement.unit(gens, field)] if e == zero else jordan_table.reps(e)
            )
            for u in hull_reps:
                push(je_u(f, u))

    rounds = 0
    while frontier:
        work, frontier = frontier, []
        grew = False
        for v in work:
            dv = v.multidegree
            for e, reps in multipliers:
                if _degree_diff(d, _degree_sum2(dv, e)) is None:
                    continue
                for a in reps:
                    cand = je_circ(v, a)
                    if table.insert(cand):
                        frontier.append(cand)
                        grew = True
            if mode != QUADRATIC:
                continue
            for e, reps in multipliers:
                tot = tuple(dvc + 2 * ec for dvc, ec in zip(dv, e))
                if dominated(tot, d):
                    for a in reps:
                        cand = je_u(a, v)
                        if table.insert(cand):
                            frontier.append(cand)
                            grew = True
            for i, (e1, reps1) in enumerate(multipliers):
                for e2, reps2 in multipliers[i:]:
                    tot = tuple(a + b + c for a, b, c in zip(dv, e1, e2))
                    if not dominated(tot, d):
                        continue
                    for ai, a in enumerate(reps1):
                        bs = reps2[ai + 1 :] if e1 == e2 else reps2
                        for b in bs:
                            cand = je_ulin(a, b, v)
                            if table.insert(cand):
                                frontier.append(cand)
                                grew = True
        if grew:
            rounds += 1

    return OuterIdealComponent(
        generator=f,
        multidegree=d,
        mode=mode,
        field=field,
        component_basis=table.component_basis(d),
        span=table.subspace(d),
        inserted=table.inserted(d),
        rounds_to_fixpoint=rounds,
        table=table,
    )


def outer_ideal_is_closed(comp: OuterIdealComponent) -> bool:
    """Re-verify the fixed point: every admissible multiplication applied to
    every basis representative lands inside the recorded spans."""
    table = comp.table
    gens = comp.generator.value.gens
    _, multipliers = _multiplier_reps(gens, comp.multidegree, comp.mode, comp.field, sum(comp.multidegree))

    def inside(elem: JordanElement) -> bool:
        if elem.value.is_zero():
            return True
        e = elem.multidegree
        if not dominated(e, comp.multidegree):
            return True
        return table.subspace(e).contains(to_vector(elem.value, table.component_basis(e)))

    for v in table.all_reps():
        dv = v.multidegree
        for e, reps in multipliers:
            if _degree_diff(comp.multidegree, _degree_sum2(dv, e)) is None:
                continue
            for a in reps:
                if not inside(je_circ(v, a)):
                    return False
                if comp.mode == QUADRATIC and not inside(je_u(a, v)):
                    return False
        if comp.mode == QUADRATIC:
            for i, (e1, reps1) in enumerate(multipliers):
                for e2, reps2 in multipliers[i:]:
                    if not dominated(_degree_sum2(dv, _degree_sum2(e1, e2)), comp.multidegree):
                        continue
                    for a in reps1:
                        for b in reps2:
                            if not inside(je_ulin(a, b, v)):
                                return False
    return True


@dataclass
class AssocIdealComponent:
    """The multidegree-d slice of the two-sided associative ideal generated
    by f: the span of all w1 f w2 over complementary word pairs."""

    generator: FreePoly
    multidegree: MultiDegree
    field: Field
    component_basis: ComponentBasis
    span: Subspace
    products: list[tuple]  # (w1, w2) pairs aligned with span insert indices

    @property
    def dim(self) -> int:
        return self.span.dim

    def membership(self, p: FreePoly):
        verdict, data = self.span.membership(to_vector(p, self.component_basis))
        if verdict == "inside":
            return verdict, data
        return verdict, from_vector(data, self.component_basis, self.field)


def assoc_ideal_component(f: FreePoly, d: MultiDegree) -> AssocIdealComponent:
    """Span of {w1 * f * w2} over all word pairs with complementary multidegree."""
    d = tuple(d)
    df = f.multidegree()
    if df is None:
        raise ValueError("ideal generator must be homogeneous and nonzero")
    rest = _degree_diff(d, df)
    if rest is None:
        raise ValueError(f"generator multidegree {df} not below target {d}")
    gens, field = f.gens, f.field
    cb = ComponentBasis(gens, d)
    span = Subspace(field, len(cb))
    products: list[tuple] = []
    for e1 in _sub_multidegrees(rest):
        e2 = _degree_diff(rest, e1)
        for w1 in words_of_multidegree(gens, e1):
            left = FreePoly.from_word(gens, field, w1) * f
            for w2 in words_of_multidegree(gens, e2):
                p = left * FreePoly.from_word(gens, field, w2)
                products.append((w1, w2))
                span.insert(to_vector(p, cb))
    return AssocIdealComponent(f, d, field, cb, span, products)


@dataclass
class GapWitnessReport:
    """Membership of one homogeneous symmetric element on both sides of the
    Cohn criterion at a single multidegree."""

    g_in_assoc: bool
    g_in_outer: bool
    assoc_certificate: dict | None
    outer_certificate: dict | None
    assoc_residual: FreePoly | None
    outer_residual: FreePoly | None
    outer: OuterIdealComponent
    assoc: AssocIdealComponent

    @property
    def gap(self) -> bool:
        return self.g_in_assoc and not self.g_in_outer


def cohn_gap_witness(
    f: JordanElement,
    g: FreePoly,
    d: MultiDegree,
    mode: str,
    field: Field,
    degree_bound: int = DEFAULT_DEGREE_BOUND,
) -> GapWitnessReport:
    """Check g against both ideal components generated by f at multidegree d.

    A gap (g inside the associative component, outside the Jordan one) shows
    the quotient by the Jordan ideal is not special.
    """
    d = tuple(d)
    if not g.is_homogeneous(d) or g.is_zero():
        raise ValueError(f"witness must be nonzero homogeneous of multidegree {d}")
    if g.reverse() != g:
        raise ValueError("witness must be symmetric under reversal")
    assoc = assoc_ideal_component(f.value, d)
    outer = outer_ideal_component(f, d, mode, field, degree_bound)
    a_verdict, a_data = assoc.membership(g)
    o_verdict, o_data = outer.membership(g)
    return GapWitnessReport(
        g_in_assoc=a_verdict == "inside",
        g_in_outer=o_verdict == "inside",
        assoc_certificate=a_data if a_verdict == "inside" else None,
        outer_certificate=o_data if o_verdict == "inside" else None,
        assoc_residual=a_data if a_verdict == "outside" else None,
        outer_residual=o_data if o_verdict == "outside" else None,
        outer=outer,
        assoc=assoc,
    )
