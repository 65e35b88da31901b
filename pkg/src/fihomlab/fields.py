"""Exact coefficient fields.

Two kinds of field are supported: the rationals (elements are
``fractions.Fraction``) and prime fields F_q (elements are ints normalized to
``0 <= x < q``).  All arithmetic is exact; there is no floating point anywhere
in this package.
"""
from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    """Invalid field construction or mixed-field arithmetic."""


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q < 4:
        return True
    if q % 2 == 0:
        return False
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


class Field:
    """Abstract field of coefficients.

    ``q`` is the modulus for prime fields and ``None`` for the rationals;
    matrix code branches on it for fast normalization.
    """

    q: int | None = None
    characteristic: int = 0

    def of(self, value):
        raise NotImplementedError

    def inv(self, value):
        raise NotImplementedError

    def normalize(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self.of(0)

    @property
    def one(self):
        return self.of(1)

    def div(self, a, b):
        return self.normalize(a * self.inv(b))

    def __eq__(self, other):
        return isinstance(other, Field) and self.q == other.q

    def __hash__(self):
        return hash(("Field", self.q))


class RationalField(Field):
    q = None
    characteristic = 0
    name = "Q"

    def of(self, value):
        return Fraction(value)

    def inv(self, value):
        v = Fraction(value)
        if v == 0:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / v

    def normalize(self, value):
        return value

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, q: int):
        if not _is_prime(q):
            raise FieldError(f"{q} is not prime")
        self.q = q
        self.characteristic = q
        self.name = f"F{q}"

    def of(self, value):
        if isinstance(value, Fraction):
            if value.denominator % self.q == 0:
                raise ZeroDivisionError(f"denominator not invertible mod {self.q}")
            return (value.numerator * self.inv(value.denominator % self.q)) % self.q
        return int(value) % self.q

    def inv(self, value):
        v = int(value) % self.q
        if v == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.q}")
        return pow(v, self.q - 2, self.q)

    def normalize(self, value):
        return value % self.q

    def __repr__(self):
        return f"GF({self.q})"


QQ = RationalField()

_gf_cache: dict[int, PrimeField] = {}


def GF(q: int) -> PrimeField:
    if q not in _gf_cache:
        _gf_cache[q] = PrimeField(q)
    return _gf_cache[q]


def field_by_name(name: str) -> Field:
    """Parse a field label: ``Q`` or ``F<q>`` (e.g. ``F5``)."""
    name = name.strip()
    if name in ("Q", "QQ"):
        return QQ
    if name.startswith("F") and name[1:].isdigit():
        return GF(int(name[1:]))
    raise FieldError(f"unknown field {name!r} (expected Q or Fq)")
