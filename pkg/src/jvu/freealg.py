"""The free associative algebra F<X> on named generators.

Words are tuples of generator indices; polynomials are sparse maps from
words to nonzero scalars of a :class:`~jvu.fields.Field`.  The reversal
involution ``*`` fixes generators and reverses words; the symmetrizer
``{u} = u + u*`` produces the symmetric elements out of which the special
Jordan algebra is built.

Words of equal multidegree all have the same length, so the degree-then-
lexicographic order used throughout is just tuple order within a component.
"""

from __future__ import annotations

from .fields import Field

Word = tuple[int, ...]
MultiDegree = tuple[int, ...]


class GeneratorSet:
    """An ordered set of distinct generator names; the order fixes multidegree
    coordinates and the deglex word order."""

    __slots__ = ("names", "_index")

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"generator names must be distinct: {names}")
        if not names:
            raise ValueError("need at least one generator")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, GeneratorSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"GeneratorSet({', '.join(self.names)})"

    def index(self, name: str) -> int:
        if name not in self._index:
            raise KeyError(f"unknown generator {name!r} (have {', '.join(self.names)})")
        return self._index[name]

    def word_multidegree(self, word: Word) -> MultiDegree:
        counts = [0] * len(self.names)
        for i in word:
            counts[i] += 1
        return tuple(counts)


def deglex_key(word: Word):
    return (len(word), word)


class FreePoly:
    """A sparse noncommutative polynomial: word -> nonzero scalar.

    Canonical on construction (no zero coefficients stored), so equality is
    plain dict comparison and p - p is the empty polynomial.
    """

    __slots__ = ("gens", "field", "terms")

    def __init__(self, gens: GeneratorSet, field: Field, terms=None):
        self.gens = gens
        self.field = field
        if terms is None:
            self.terms = {}
        else:
            self.terms = {w: c for w, c in terms.items() if not field.is_zero(c)}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, gens: GeneratorSet, field: Field) -> "FreePoly":
        return cls(gens, field)

    @classmethod
    def one(cls, gens: GeneratorSet, field: Field) -> "FreePoly":
        """The empty word with coefficient 1 (the unit of F<X>)."""
        return cls(gens, field, {(): field.one})

    @classmethod
    def generator(cls, gens: GeneratorSet, field: Field, name: str) -> "FreePoly":
        return cls(gens, field, {(gens.index(name),): field.one})

    @classmethod
    def from_word(cls, gens: GeneratorSet, field: Field, word: Word) -> "FreePoly":
        return cls(gens, field, {tuple(word): field.one})

    @classmethod
    def constant(cls, gens: GeneratorSet, field: Field, c) -> "FreePoly":
        return cls(gens, field, {(): c})

    def _compat(self, other: "FreePoly"):
        if self.gens != other.gens:
            raise ValueError("mismatched generator sets")
        if self.field != other.field:
            raise ValueError("mismatched fields")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "FreePoly") -> "FreePoly":
        self._compat(other)
        f = self.field
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = f.add(terms.get(w, f.zero), c)
            if f.is_zero(s):
                terms.pop(w, None)
            else:
                terms[w] = s
        out = FreePoly(self.gens, f)
        out.terms = terms
        return out

    def __neg__(self) -> "FreePoly":
        f = self.field
        out = FreePoly(self.gens, f)
        out.terms = {w: f.neg(c) for w, c in self.terms.items()}
        return out

    def __sub__(self, other: "FreePoly") -> "FreePoly":
        return self + (-other)

    def __mul__(self, other: "FreePoly") -> "FreePoly":
        self._compat(other)
        f = self.field
        terms: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = f.add(terms.get(w, f.zero), f.mul(c1, c2))
                if f.is_zero(s):
                    terms.pop(w, None)
                else:
                    terms[w] = s
        out = FreePoly(self.gens, f)
        out.terms = terms
        return out

    def scale(self, c) -> "FreePoly":
        f = self.field
        out = FreePoly(self.gens, f)
        if not f.is_zero(c):
            out.terms = {w: f.mul(c, v) for w, v in self.terms.items()}
        return out

    def __eq__(self, other):
        return (
            isinstance(other, FreePoly)
            and self.gens == other.gens
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.gens, self.field, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    # -- involution and grading ---------------------------------------------

    def reverse(self) -> "FreePoly":
        """The involution *: reverse every word, keep coefficients."""
        out = FreePoly(self.gens, self.field)
        out.terms = {w[::-1]: c for w, c in self.terms.items()}
        return out

    def symmetrize(self) -> "FreePoly":
        """{p} = p + p*; always a fixed point of reverse."""
        return self + self.reverse()

    def component(self, d: MultiDegree) -> "FreePoly":
        """The sub-sum of terms of multidegree exactly d."""
        d = tuple(d)
        out = FreePoly(self.gens, self.field)
        out.terms = {
            w: c for w, c in self.terms.items() if self.gens.word_multidegree(w) == d
        }
        return out

    def is_homogeneous(self, d: MultiDegree) -> bool:
        d = tuple(d)
        return all(self.gens.word_multidegree(w) == d for w in self.terms)

    def multidegree(self) -> MultiDegree | None:
        """The common multidegree of all terms, or None if mixed or zero."""
        degs = {self.gens.word_multidegree(w) for w in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def sorted_terms(self):
        """Terms in deglex order (degree, then lexicographic in generator indices)."""
        return sorted(self.terms.items(), key=lambda t: deglex_key(t[0]))

    def word_str(self, word: Word) -> str:
        if not word:
            return "1"
        return "*".join(self.gens.names[i] for i in word)

    def __str__(self):
        from .expr import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"FreePoly({self})"
