"""Group algebra elements of k[S_n]."""
from __future__ import annotations

from .fields import Field, FieldError
from .permutations import Permutation


class GroupAlgebraElement:
    """A finite k-linear combination of permutations of one degree.

    Zero coefficients are pruned, so equality of elements is equality of
    the term dictionaries.
    """

    __slots__ = ("n", "field", "terms")

    def __init__(self, n: int, field: Field, terms=None):
        self.n = n
        self.field = field
        pruned = {}
        for perm, coeff in (terms or {}).items():
            if perm.n != n:
                raise ValueError(f"degree mismatch: {perm} in k[S_{n}]")
            c = field.normalize(field.of(coeff))
            if c != field.zero:
                pruned[perm] = c
        self.terms = pruned

    @classmethod
    def zero(cls, n, field):
        return cls(n, field)

    @classmethod
    def one(cls, n, field):
        return cls(n, field, {Permutation.identity(n): field.one})

    @classmethod
    def of_permutation(cls, perm, field, coeff=1):
        return cls(perm.n, field, {perm: coeff})

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.n != other.n or self.field != other.field:
            raise FieldError("mixed group algebras")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for perm, c in other.terms.items():
            terms[perm] = self.field.normalize(terms.get(perm, self.field.zero) + c)
        return GroupAlgebraElement(self.n, self.field, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = self.field.of(c)
        return GroupAlgebraElement(
            self.n, self.field, {p: self.field.normalize(x * c) for p, x in self.terms.items()}
        )

    def __mul__(self, other):
        self._check(other)
        f = self.field
        terms: dict = {}
        for p1, c1 in self.terms.items():
            for p2, c2 in other.terms.items():
                p = p1 * p2
                terms[p] = f.normalize(terms.get(p, f.zero) + c1 * c2)
        return GroupAlgebraElement(self.n, f, terms)

    def embed(self, n: int, offset: int = 0) -> "GroupAlgebraElement":
        """Image in k[S_n] under shifting all points by ``offset``.

        Permutations fix every point outside ``offset+1 .. offset+self.n``.
        """
        if offset + self.n > n:
            raise ValueError("embedding does not fit")
        out = {}
        for perm, c in self.terms.items():
            img = list(range(1, n + 1))
            for x in range(1, perm.n + 1):
                img[offset + x - 1] = perm(x) + offset
            out[Permutation(img)] = c
        return GroupAlgebraElement(n, self.field, out)

    def __eq__(self, other):
        return (
            isinstance(other, GroupAlgebraElement)
            and self.n == other.n
            and self.field == other.field
            and self.terms == other.terms
        )

    def __repr__(self):
        parts = [f"{c}*{list(p.images)}" for p, c in sorted(self.terms.items(), key=lambda t: t[0].images)]
        return f"GA(S_{self.n}: " + (" + ".join(parts) if parts else "0") + ")"
