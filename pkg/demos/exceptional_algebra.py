"""Zero products force commuting U-operators in the exceptional algebra.

In a nondegenerate Jordan algebra the relation a.b = 0 implies
[U_a, U_b] = 0, and the crux case is the 27-dimensional exceptional algebra
of Hermitian 3x3 matrices over split octonions.  Everything here is exact
rational arithmetic: the cubic characteristic identity pins the trace,
quadratic and cubic forms, an operator identity reduces [U_a, U_b] to
[R_{a^2}, R_{b^2}], and Peirce-decomposition sampling produces genuinely
random zero-product pairs to feed the commutation check.
"""

import random

from jvu.albert import (
    AlbertElement,
    Octonion,
    check_cubic,
    check_zero_pair,
    commutator,
    find_noncommuting_pair,
    forms,
    jordan_mul,
    oct_norm,
    random_element,
    r_op,
    s_bilinear,
    sample_zero_pair,
    u_op,
)

rng = random.Random(42)

print("Split octonions: the norm is multiplicative yet isotropic.")
print("  n(E1) =", oct_norm(Octonion.basis(0)), " (a nonzero basis vector of norm 0)")
u = Octonion([rng.randint(-9, 9) for _ in range(8)])
v = Octonion([rng.randint(-9, 9) for _ in range(8)])
print("  n(u v) == n(u) n(v):", oct_norm(u * v) == oct_norm(u) * oct_norm(v))
print()

print("The cubic identity a^3 = t(a) a^2 - s(a) a + n(a) 1 holds exactly:")
a = random_element(rng)
t, s, n = forms(a)
print("  a has integer coordinates in [-9, 9];  t(a), s(a), n(a) =", (t, s, n))
print("  residual of the identity:", "0" if check_cubic(a).is_zero() else "NONZERO")
print("  unit element forms:", forms(AlbertElement.unit()))
print()

print("Zero-product pairs via the Peirce decomposition of a random idempotent:")
for i in range(3):
    a, b = sample_zero_pair(rng)
    checks = check_zero_pair(a, b)
    print(f"  pair {i}: a.b = 0 exactly;"
          f" [R_a2,R_b]=0: {checks.r_a2_b_commute},"
          f" [U_a,U_b]=[R_a2,R_b2]: {checks.commutators_match},"
          f" [U_a,U_b]=0: {checks.u_commutator_zero}")
    branch = "s(a,b)=0" if checks.s_ab_zero else "a^2 b = 0"
    print(f"          dichotomy branch: {branch};  s(a,b) = {s_bilinear(a, b)}")
print()

print("The hypothesis matters: a random pair with a.b != 0 has noncommuting U-operators.")
a, b = find_noncommuting_pair(random.Random(1))
print("  jordan_mul(a, b) is zero:", jordan_mul(a, b).is_zero())
print("  [U_a, U_b] is zero:      ", commutator(u_op(a), u_op(b)).is_zero())
print()

e11 = AlbertElement.diag_idempotent(0)
print("Peirce eigenvalues of a primitive idempotent: R_e has eigenvalues 0, 1/2, 1;")
print("the 0- and 1-spaces multiply to zero, which is where the sampler draws from.")
print("  r_op(e11) applied to e22:", r_op(e11).apply(AlbertElement.diag_idempotent(1)).is_zero())
