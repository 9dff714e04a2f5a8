"""A concrete 27-dimensional exceptional Jordan algebra over the rationals.

The coordinate algebra is the split octonions realized as Zorn vector
matrices [[alpha, a], [b, beta]] with alpha, beta rational and a, b rational
3-vectors; their multiplication table is integral and the norm form
alpha*beta - a.b is isotropic.  Hermitian 3x3 matrices over them, with the
product a.b = (AB + BA)/2, form the exceptional Jordan algebra; elements are
27 exact rational coordinates and right-multiplication operators are exact
27x27 rational matrices (stored as an integer matrix over a common
denominator, so operator products stay in fast integer arithmetic).

The cubic form data t, s, n is the Freudenthal determinant package; the sign
conventions are pinned by requiring the cubic characteristic identity
a^3 = t(a) a^2 - s(a) a + n(a) 1 to vanish identically, which the test suite
re-checks against all sign variants.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .fields import RATIONALS, make_field
from .linalg import affine_solve

OCT_DIM = 8
DIM = 27

_QQ = make_field(RATIONALS)


# ---------------------------------------------------------------------------
# Split octonions


def _zorn_mul(x, y):
    """Zorn vector-matrix product on raw 8-coordinate tuples
    (alpha, beta, a1, a2, a3, b1, b2, b3)."""
    a1, b1 = x[0], x[1]
    v1, w1 = x[2:5], x[5:8]
    a2, b2 = y[0], y[1]
    v2, w2 = y[2:5], y[5:8]
    dot_vw = v1[0] * w2[0] + v1[1] * w2[1] + v1[2] * w2[2]
    dot_wv = w1[0] * v2[0] + w1[1] * v2[1] + w1[2] * v2[2]
    cross_ww = (
        w1[1] * w2[2] - w1[2] * w2[1],
        w1[2] * w2[0] - w1[0] * w2[2],
        w1[0] * w2[1] - w1[1] * w2[0],
    )
    cross_vv = (
        v1[1] * v2[2] - v1[2] * v2[1],
        v1[2] * v2[0] - v1[0] * v2[2],
        v1[0] * v2[1] - v1[1] * v2[0],
    )
    return (
        a1 * a2 + dot_vw,
        b1 * b2 + dot_wv,
        a1 * v2[0] + b2 * v1[0] - cross_ww[0],
        a1 * v2[1] + b2 * v1[1] - cross_ww[1],
        a1 * v2[2] + b2 * v1[2] - cross_ww[2],
        a2 * w1[0] + b1 * w2[0] + cross_vv[0],
        a2 * w1[1] + b1 * w2[1] + cross_vv[1],
        a2 * w1[2] + b1 * w2[2] + cross_vv[2],
    )


def _build_table():
    table = []
    for i in range(OCT_DIM):
        ei = tuple(1 if k == i else 0 for k in range(OCT_DIM))
        row = []
        for j in range(OCT_DIM):
            ej = tuple(1 if k == j else 0 for k in range(OCT_DIM))
            row.append(_zorn_mul(ei, ej))
        table.append(row)
    return table


#: basis products as integer coordinate vectors; basis order E1, E2, u1..u3, v1..v3
MUL_TABLE = _build_table()


class Octonion:
    """A split octonion: 8 exact rational coordinates over the Zorn basis."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(coords)
        if len(coords) != OCT_DIM:
            raise ValueError("octonions have 8 coordinates")
        self.coords = coords

    @classmethod
    def zero(cls):
        return cls((0,) * OCT_DIM)

    @classmethod
    def one(cls):
        return cls((1, 1, 0, 0, 0, 0, 0, 0))

    @classmethod
    def basis(cls, i: int):
        return cls(tuple(1 if k == i else 0 for k in range(OCT_DIM)))

    def __add__(self, other):
        return Octonion(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Octonion(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Octonion(tuple(-a for a in self.coords))

    def __mul__(self, other):
        out = [0] * OCT_DIM
        for i, a in enumerate(self.coords):
            if not a:
                continue
            row = MUL_TABLE[i]
            for j, b in enumerate(other.coords):
                if not b:
                    continue
                ab = a * b
                t = row[j]
                for k in range(OCT_DIM):
                    if t[k]:
                        out[k] += ab * t[k]
        return Octonion(out)

    def scale(self, c):
        return Octonion(tuple(c * a for a in self.coords))

    def conj(self):
        a, b, v1, v2, v3, w1, w2, w3 = self.coords
        return Octonion((b, a, -v1, -v2, -v3, -w1, -w2, -w3))

    def trace(self):
        """u + conj(u) as a scalar (the coefficient of the unit)."""
        return self.coords[0] + self.coords[1]

    def norm(self):
        """The multiplicative norm alpha*beta - a.b (isotropic: n(E1) = 0)."""
        a, b, v1, v2, v3, w1, w2, w3 = self.coords
        return a * b - (v1 * w1 + v2 * w2 + v3 * w3)

    def is_zero(self):
        return not any(self.coords)

    def __eq__(self, other):
        return isinstance(other, Octonion) and all(
            a == b for a, b in zip(self.coords, other.coords)
        )

    def __hash__(self):
        return hash(tuple(Fraction(c) for c in self.coords))

    def __repr__(self):
        return f"Octonion{self.coords}"


def oct_mul(u: Octonion, v: Octonion) -> Octonion:
    return u * v


def oct_conj(u: Octonion) -> Octonion:
    return u.conj()


def oct_trace(u: Octonion):
    return u.trace()


def oct_norm(u: Octonion):
    return u.norm()


# ---------------------------------------------------------------------------
# Hermitian 3x3 elements


class AlbertElement:
    """A Hermitian 3x3 octonion matrix: diagonal (d1, d2, d3) and
    off-diagonal octonions (o1, o2, o3), laid out as
    [[d1, o3, conj(o2)], [conj(o3), d2, o1], [o2, conj(o1), d3]]."""

    __slots__ = ("d", "o")

    def __init__(self, d, o):
        self.d = tuple(d)
        self.o = tuple(o)
        if len(self.d) != 3 or len(self.o) != 3:
            raise ValueError("need 3 diagonal scalars and 3 octonions")

    @classmethod
    def zero(cls):
        z = Octonion.zero()
        return cls((0, 0, 0), (z, z, z))

    @classmethod
    def unit(cls):
        z = Octonion.zero()
        return cls((1, 1, 1), (z, z, z))

    @classmethod
    def diag_idempotent(cls, i: int):
        z = Octonion.zero()
        return cls(tuple(1 if k == i else 0 for k in range(3)), (z, z, z))

    @classmethod
    def from_coords(cls, coords):
        coords = list(coords)
        if len(coords) != DIM:
            raise ValueError("Albert elements have 27 coordinates")
        d = tuple(coords[0:3])
        o = tuple(Octonion(coords[3 + 8 * i : 11 + 8 * i]) for i in range(3))
        return cls(d, o)

    @classmethod
    def basis(cls, k: int):
        coords = [0] * DIM
        coords[k] = 1
        return cls.from_coords(coords)

    def coords(self):
        out = list(self.d)
        for q in self.o:
            out.extend(q.coords)
        return out

    def __add__(self, other):
        return AlbertElement(
            tuple(a + b for a, b in zip(self.d, other.d)),
            tuple(a + b for a, b in zip(self.o, other.o)),
        )

    def __sub__(self, other):
        return AlbertElement(
            tuple(a - b for a, b in zip(self.d, other.d)),
            tuple(a - b for a, b in zip(self.o, other.o)),
        )

    def __neg__(self):
        return AlbertElement(tuple(-a for a in self.d), tuple(-a for a in self.o))

    def scale(self, c):
        return AlbertElement(tuple(c * a for a in self.d), tuple(q.scale(c) for q in self.o))

    def is_zero(self):
        return not any(self.d) and all(q.is_zero() for q in self.o)

    def __eq__(self, other):
        return (
            isinstance(other, AlbertElement)
            and all(a == b for a, b in zip(self.d, other.d))
            and self.o == other.o
        )

    def __hash__(self):
        return hash((tuple(Fraction(c) for c in self.d), self.o))

    def __repr__(self):
        return f"AlbertElement(d={self.d}, o={self.o})"

    def _matrix(self):
        d1, d2, d3 = self.d
        o1, o2, o3 = self.o
        one = Octonion.one()
        return [
            [one.scale(d1), o3, o2.conj()],
            [o3.conj(), one.scale(d2), o1],
            [o2, o1.conj(), one.scale(d3)],
        ]

    @classmethod
    def _from_matrix(cls, m):
        d = []
        for i in range(3):
            q = m[i][i]
            # Hermitian diagonals are scalar multiples of the octonion unit
            assert q.coords[0] == q.coords[1] and not any(q.coords[2:]), q
            d.append(q.coords[0])
        return cls(tuple(d), (m[1][2], m[2][0], m[0][1]))


def _matmul3(a, b):
    return [
        [sum((a[i][k] * b[k][j] for k in range(3)), Octonion.zero()) for j in range(3)]
        for i in range(3)
    ]


def jordan_mul(a: AlbertElement, b: AlbertElement) -> AlbertElement:
    """The Jordan product (AB + BA)/2 of Hermitian matrices."""
    ma, mb = a._matrix(), b._matrix()
    ab, ba = _matmul3(ma, mb), _matmul3(mb, ma)
    half = Fraction(1, 2)
    m = [[(ab[i][j] + ba[i][j]).scale(half) for j in range(3)] for i in range(3)]
    return AlbertElement._from_matrix(m)


def associator(x: AlbertElement, y: AlbertElement, z: AlbertElement) -> AlbertElement:
    """(x, y, z) = (xy)z - x(yz) in the Jordan product."""
    return jordan_mul(jordan_mul(x, y), z) - jordan_mul(x, jordan_mul(y, z))


# ---------------------------------------------------------------------------
# Exact operators


def _clear_denominators(values):
    """Return (integers, d) with values[i] = integers[i] / d exactly."""
    den = 1
    for v in values:
        if isinstance(v, Fraction):
            d = v.denominator
            den = den * d // gcd(den, d)
    nums = []
    for v in values:
        if isinstance(v, Fraction):
            nums.append(v.numerator * (den // v.denominator))
        else:
            nums.append(v * den)
    return nums, den


class AlbertOperator:
    """An exact linear operator on Albert elements, acting on coordinate row
    vectors from the right: (x op)[j] = sum_i x[i] num[i][j] / den."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if den < 0:
            num = [[-x for x in row] for row in num]
            den = -den
        self.num = num
        self.den = den

    @classmethod
    def identity(cls):
        return cls([[1 if i == j else 0 for j in range(DIM)] for i in range(DIM)])

    @classmethod
    def zero(cls):
        return cls([[0] * DIM for _ in range(DIM)])

    def normalized(self):
        g = self.den
        for row in self.num:
            for x in row:
                if x:
                    g = gcd(g, x)
                    if g == 1:
                        return self
        if g <= 1:
            return self
        return AlbertOperator([[x // g for x in row] for row in self.num], self.den // g)

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(self.num[i][j], self.den)

    def fraction_rows(self):
        return [[Fraction(x, self.den) for x in row] for row in self.num]

    def __matmul__(self, other: "AlbertOperator") -> "AlbertOperator":
        bt = list(zip(*other.num))
        num = [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in self.num]
        return AlbertOperator(num, self.den * other.den).normalized()

    def __add__(self, other: "AlbertOperator") -> "AlbertOperator":
        da, db = self.den, other.den
        l = da * db // gcd(da, db)
        ka, kb = l // da, l // db
        num = [
            [ka * x + kb * y for x, y in zip(ra, rb)]
            for ra, rb in zip(self.num, other.num)
        ]
        return AlbertOperator(num, l).normalized()

    def __sub__(self, other: "AlbertOperator") -> "AlbertOperator":
        return self + (-other)

    def __neg__(self):
        return AlbertOperator([[-x for x in row] for row in self.num], self.den)

    def scale_int(self, k: int) -> "AlbertOperator":
        return AlbertOperator([[k * x for x in row] for row in self.num], self.den).normalized()

    def is_zero(self) -> bool:
        return all(not x for row in self.num for x in row)

    def __eq__(self, other):
        if not isinstance(other, AlbertOperator):
            return NotImplemented
        return (self - other).is_zero()

    def apply(self, elem: AlbertElement) -> AlbertElement:
        nums, d = _clear_denominators(elem.coords())
        out = [0] * DIM
        for i, v in enumerate(nums):
            if not v:
                continue
            row = self.num[i]
            for j in range(DIM):
                if row[j]:
                    out[j] += v * row[j]
        dd = d * self.den
        return AlbertElement.from_coords([Fraction(x, dd) for x in out])


def commutator(p: AlbertOperator, q: AlbertOperator) -> AlbertOperator:
    return (p @ q) - (q @ p)


_SC2: list | None = None  # sparse rows of 2 * (basis_i . basis_j)


def _structure_constants():
    global _SC2
    if _SC2 is None:
        basis = [AlbertElement.basis(k) for k in range(DIM)]
        sc = [[None] * DIM for _ in range(DIM)]
        for i in range(DIM):
            for j in range(i, DIM):
                prod = jordan_mul(basis[i], basis[j])
                row = tuple(
                    (k, int(2 * c)) for k, c in enumerate(prod.coords()) if c
                )
                sc[i][j] = row
                sc[j][i] = row
        _SC2 = sc
    return _SC2


def r_op(a: AlbertElement) -> AlbertOperator:
    """The right multiplication operator x -> x.a as an exact matrix."""
    sc = _structure_constants()
    nums, d = _clear_denominators(a.coords())
    num = []
    for i in range(DIM):
        row = [0] * DIM
        sci = sc[i]
        for k, v in enumerate(nums):
            if not v:
                continue
            for j, c in sci[k]:
                row[j] += v * c
        num.append(row)
    return AlbertOperator(num, 2 * d).normalized()


def u_op(a: AlbertElement) -> AlbertOperator:
    """U_a = 2 R_a^2 - R_{a^2}."""
    ra = r_op(a)
    return (ra @ ra).scale_int(2) - r_op(jordan_mul(a, a))


# ---------------------------------------------------------------------------
# Cubic form data


def trace_form(a: AlbertElement):
    return a.d[0] + a.d[1] + a.d[2]


def s_form(a: AlbertElement):
    """s(a) = (t(a)^2 - t(a^2)) / 2."""
    t = trace_form(a)
    return Fraction(t * t - trace_form(jordan_mul(a, a)), 2)


def norm_form(a: AlbertElement):
    """The Freudenthal cubic norm (the determinant of the Hermitian matrix)."""
    d1, d2, d3 = a.d
    o1, o2, o3 = a.o
    return (
        d1 * d2 * d3
        - d1 * o1.norm()
        - d2 * o2.norm()
        - d3 * o3.norm()
        + ((o1 * o2) * o3).trace()
    )


def s_bilinear(a: AlbertElement, b: AlbertElement):
    """s(a, b) = s(a+b) - s(a) - s(b)."""
    return s_form(a + b) - s_form(a) - s_form(b)


def norm_trilinear(a: AlbertElement, b: AlbertElement, c: AlbertElement):
    """n(a, b, c), the full polarization of the cubic norm."""
    return (
        norm_form(a + b + c)
        - norm_form(a + b)
        - norm_form(a + c)
        - norm_form(b + c)
        + norm_form(a)
        + norm_form(b)
        + norm_form(c)
    )


def forms(a: AlbertElement):
    """(t(a), s(a), n(a))."""
    return trace_form(a), s_form(a), norm_form(a)


# ---------------------------------------------------------------------------
# Identity checks


def check_cubic(a: AlbertElement) -> AlbertElement:
    """Residual of a^3 - t(a) a^2 + s(a) a - n(a) 1; exactly zero on contract."""
    a2 = jordan_mul(a, a)
    a3 = jordan_mul(a2, a)
    t, s, n = trace_form(a), s_form(a), norm_form(a)
    return a3 - a2.scale(t) + a.scale(s) - AlbertElement.unit().scale(n)


def check_eq1(a: AlbertElement, b: AlbertElement) -> AlbertElement:
    """Residual of the directional linearization of the cubic identity:
    a^2 b + 2 (ab) a  vs  t(b) a^2 + 2 t(a) ab - s(a,b) a - s(a) b + n(a,a,b)/2."""
    a2 = jordan_mul(a, a)
    ab = jordan_mul(a, b)
    lhs = jordan_mul(a2, b) + jordan_mul(ab, a).scale(2)
    rhs = (
        a2.scale(trace_form(b))
        + ab.scale(2 * trace_form(a))
        - a.scale(s_bilinear(a, b))
        - b.scale(s_form(a))
        + AlbertElement.unit().scale(Fraction(norm_trilinear(a, a, b), 2))
    )
    return lhs - rhs


def check_operator_identity(a: AlbertElement, b: AlbertElement) -> bool:
    """R_b^2 R_a + R_a R_b^2 = -R_{(ba)b} + 2 R_{ab} R_b + R_{b^2} R_a, exactly."""
    ra, rb = r_op(a), r_op(b)
    rb2 = rb @ rb
    ab = jordan_mul(a, b)
    bab = jordan_mul(jordan_mul(b, a), b)
    lhs = (rb2 @ ra) + (ra @ rb2)
    rhs = -r_op(bab) + (r_op(ab) @ rb).scale_int(2) + (r_op(jordan_mul(b, b)) @ ra)
    return (lhs - rhs).is_zero()


def zero_pair_operator_collapse(a: AlbertElement, b: AlbertElement) -> bool:
    """When ab = 0 the operator identity degenerates to
    R_b^2 R_a + R_a R_b^2 = R_{b^2} R_a."""
    ra, rb = r_op(a), r_op(b)
    rb2 = rb @ rb
    lhs = (rb2 @ ra) + (ra @ rb2)
    return (lhs - (r_op(jordan_mul(b, b)) @ ra)).is_zero()


@dataclass
class ZeroPairChecks:
    """Exact operator facts for one pair with a.b = 0, including the
    dichotomy witness: s(a,b) = 0 or a^2 b = 0 (at least one always holds)."""

    r_a2_b_commute: bool
    r_a_b2_commute: bool
    commutators_match: bool  # [U_a, U_b] = [R_{a^2}, R_{b^2}]
    u_commutator_zero: bool
    s_ab_zero: bool
    a2b_zero: bool

    @property
    def all_hold(self) -> bool:
        return (
            self.r_a2_b_commute
            and self.r_a_b2_commute
            and self.commutators_match
            and self.u_commutator_zero
            and (self.s_ab_zero or self.a2b_zero)
        )


def _require_zero_product(a, b):
    if not jordan_mul(a, b).is_zero():
        raise ValueError("precondition a.b = 0 violated")


def check_commutator_reduction(a: AlbertElement, b: AlbertElement) -> bool:
    """[U_a, U_b] = [R_{a^2}, R_{b^2}] for a pair with a.b = 0."""
    _require_zero_product(a, b)
    lhs = commutator(u_op(a), u_op(b))
    rhs = commutator(r_op(jordan_mul(a, a)), r_op(jordan_mul(b, b)))
    return (lhs - rhs).is_zero()


def check_zero_pair(a: AlbertElement, b: AlbertElement) -> ZeroPairChecks:
    """All the zero-product consequences at once; see ZeroPairChecks."""
    _require_zero_product(a, b)
    ra, rb = r_op(a), r_op(b)
    a2, b2 = jordan_mul(a, a), jordan_mul(b, b)
    ra2, rb2 = r_op(a2), r_op(b2)
    ua = (ra @ ra).scale_int(2) - ra2
    ub = (rb @ rb).scale_int(2) - rb2
    u_comm = commutator(ua, ub)
    r_comm = commutator(ra2, rb2)
    return ZeroPairChecks(
        r_a2_b_commute=commutator(ra2, rb).is_zero(),
        r_a_b2_commute=commutator(ra, rb2).is_zero(),
        commutators_match=(u_comm - r_comm).is_zero(),
        u_commutator_zero=u_comm.is_zero(),
        s_ab_zero=s_bilinear(a, b) == 0,
        a2b_zero=jordan_mul(a2, b).is_zero(),
    )


# ---------------------------------------------------------------------------
# Sampling


def random_element(rng: random.Random, lo: int = -9, hi: int = 9) -> AlbertElement:
    """Uniform integer coordinates in [lo, hi]."""
    return AlbertElement.from_coords([rng.randint(lo, hi) for _ in range(DIM)])


def left_kernel(op: AlbertOperator) -> list[list[Fraction]]:
    """Basis of {v : v op = 0} (row vectors), exact over the rationals."""
    cols = [[Fraction(x, op.den) for x in row] for row in op.num]
    zero = [Fraction(0)] * DIM
    return affine_solve(cols, zero, _QQ).homogeneous


def peirce_eigenspaces(e: AlbertElement):
    """Kernel bases of R_e and R_e - I for an idempotent e (the 0- and
    1-eigenspaces of the Peirce decomposition; their product is zero)."""
    re = r_op(e)
    return left_kernel(re), left_kernel(re - AlbertOperator.identity())


def _integer_combination(rng, basis, lo=-9, hi=9):
    coords = [Fraction(0)] * DIM
    for vec in basis:
        c = rng.randint(lo, hi)
        if c:
            coords = [x + c * y for x, y in zip(coords, vec)]
    nums, _ = _clear_denominators(coords)  # scale-invariant checks: drop denominators
    return AlbertElement.from_coords(nums)


def sample_zero_pair(seed_or_rng) -> tuple[AlbertElement, AlbertElement]:
    """A reproducible pair (a, b) with a.b = 0, via Peirce decomposition.

    Builds a rank-one element c = U_w(e11) from a random integer w, rescales
    to an idempotent e = c / t(c), and draws integer combinations from the 0-
    and 1-eigenspaces of R_e, whose product vanishes identically.  The result
    is re-verified exactly before returning.  Retries on degenerate draws and
    aborts after 100 attempts.
    """
    rng = seed_or_rng if isinstance(seed_or_rng, random.Random) else random.Random(seed_or_rng)
    e11 = AlbertElement.diag_idempotent(0)
    for _ in range(100):
        w = random_element(rng)
        c = u_op(w).apply(e11)
        tc = trace_form(c)
        if tc == 0:
            continue
        e = c.scale(Fraction(1) / Fraction(tc))
        if jordan_mul(e, e) != e:
            continue
        j0, j1 = peirce_eigenspaces(e)
        if not j0 or not j1:
            continue
        a = _integer_combination(rng, j0)
        b = _integer_combination(rng, j1)
        if a.is_zero() or b.is_zero():
            continue
        if not jordan_mul(a, b).is_zero():
            raise AssertionError("Peirce sampling produced a nonzero product")
        return a, b
    raise RuntimeError("no zero pair found in 100 attempts")


def find_noncommuting_pair(rng: random.Random, attempts: int = 50):
    """A pair with a.b != 0 and [U_a, U_b] != 0 (shows the checks are not vacuous)."""
    for _ in range(attempts):
        a, b = random_element(rng), random_element(rng)
        if jordan_mul(a, b).is_zero():
            continue
        if not commutator(u_op(a), u_op(b)).is_zero():
            return a, b
    raise RuntimeError("no noncommuting pair found")
