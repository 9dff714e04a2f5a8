"""Exact scalar arithmetic over the rationals and prime fields GF(p).

Scalars are plain Python values: ``fractions.Fraction`` for the rationals,
``int`` residues in ``[0, p)`` for GF(p).  A :class:`Field` handle owns the
operations; everything downstream is generic over it.  All arithmetic is
exact, there is no floating-point mode.
"""

from __future__ import annotations

from fractions import Fraction

RATIONALS = "rationals"
PRIME_FIELD = "prime-field"

# GF(p) residues are machine integers; everything needed here fits far below this.
_MAX_PRIME = 2**31


class FieldError(ValueError):
    """Invalid field descriptor or operand from the wrong field."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Handle for an exact field: the rationals or GF(p).

    Scalars are canonical by construction: Fractions are reduced with a
    positive denominator, residues lie in ``[0, p)``.  Membership tests
    elsewhere rely on that exact-zero canonicalization.
    """

    __slots__ = ("kind", "characteristic")

    def __init__(self, kind: str, characteristic: int):
        self.kind = kind
        self.characteristic = characteristic

    def __repr__(self):
        if self.kind == RATIONALS:
            return "Field(Q)"
        return f"Field(GF({self.characteristic}))"

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.kind == other.kind
            and self.characteristic == other.characteristic
        )

    def __hash__(self):
        return hash((self.kind, self.characteristic))

    @property
    def zero(self):
        return Fraction(0) if self.kind == RATIONALS else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == RATIONALS else 1

    def from_int(self, n: int):
        """Image of the integer n in this field."""
        if self.kind == RATIONALS:
            return Fraction(n)
        return n % self.characteristic

    def from_rational(self, num: int, den: int = 1):
        """Image of num/den; over GF(p) the denominator is inverted mod p."""
        if self.kind == RATIONALS:
            return Fraction(num, den)
        return self.mul(self.from_int(num), self.inv(self.from_int(den)))

    def check(self, a):
        """Validate that a is a canonical scalar of this field."""
        if self.kind == RATIONALS:
            if not isinstance(a, Fraction):
                raise FieldError(f"expected Fraction over Q, got {type(a).__name__}")
        else:
            if not isinstance(a, int) or not 0 <= a < self.characteristic:
                raise FieldError(f"expected residue in [0, {self.characteristic}), got {a!r}")
        return a

    def add(self, a, b):
        if self.kind == RATIONALS:
            return a + b
        return (a + b) % self.characteristic

    def sub(self, a, b):
        if self.kind == RATIONALS:
            return a - b
        return (a - b) % self.characteristic

    def mul(self, a, b):
        if self.kind == RATIONALS:
            return a * b
        return (a * b) % self.characteristic

    def neg(self, a):
        if self.kind == RATIONALS:
            return -a
        return (-a) % self.characteristic

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == RATIONALS:
            return 1 / a
        return pow(a, self.characteristic - 2, self.characteristic)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return not a


def make_field(kind: str, p: int | None = None) -> Field:
    """Create a field handle: ``make_field("rationals")`` or ``make_field("prime-field", p)``."""
    if kind == RATIONALS:
        if p is not None:
            raise FieldError("the rationals take no modulus")
        return Field(RATIONALS, 0)
    if kind == PRIME_FIELD:
        if p is None or not _is_prime(p):
            raise FieldError(f"prime-field modulus must be prime, got {p!r}")
        if p >= _MAX_PRIME:
            raise FieldError(f"modulus too large: {p}")
        return Field(PRIME_FIELD, p)
    raise FieldError(f"unknown field kind {kind!r}")


def field_from_name(name: str) -> Field:
    """Parse a field name as used on the command line: ``q``, ``gf2``, ``gf5``, ..."""
    if name == "q":
        return make_field(RATIONALS)
    if name.startswith("gf"):
        try:
            p = int(name[2:])
        except ValueError:
            raise FieldError(f"bad field name {name!r}") from None
        return make_field(PRIME_FIELD, p)
    raise FieldError(f"bad field name {name!r} (expected q or gf<p>)")


_OPS = {"add": 2, "sub": 2, "mul": 2, "neg": 1, "inv": 1}


def arith(field: Field, op: str, a, b=None):
    """Dispatch a single field operation by name, validating operands."""
    if op not in _OPS:
        raise FieldError(f"unknown operation {op!r}")
    field.check(a)
    if _OPS[op] == 2:
        if b is None:
            raise FieldError(f"{op} needs two operands")
        field.check(b)
        return getattr(field, op)(a, b)
    if b is not None:
        raise FieldError(f"{op} takes one operand")
    return getattr(field, op)(a)
