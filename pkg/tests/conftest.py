"""Shared helpers: seeded random scalars and sparse polynomials."""

import random
from fractions import Fraction

from jvu.fields import Field
from jvu.freealg import FreePoly, GeneratorSet


def rand_scalar(rng: random.Random, field: Field):
    if field.characteristic == 0:
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return rng.randrange(field.characteristic)


def rand_nonzero_scalar(rng: random.Random, field: Field):
    while True:
        c = rand_scalar(rng, field)
        if not field.is_zero(c):
            return c


def rand_word(rng: random.Random, gens: GeneratorSet, max_len: int = 4):
    return tuple(rng.randrange(len(gens)) for _ in range(rng.randint(0, max_len)))


def rand_poly(
    rng: random.Random,
    gens: GeneratorSet,
    field: Field,
    max_terms: int = 4,
    max_len: int = 4,
) -> FreePoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        terms[rand_word(rng, gens, max_len)] = rand_scalar(rng, field)
    return FreePoly(gens, field, terms)
