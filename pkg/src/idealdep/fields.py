"""Coefficient fields: exact rationals and prime fields.

Rational coefficients are `fractions.Fraction` values; prime-field
coefficients are ints reduced into [0, p).  The field object carries only
the choice of field — the polynomial layer branches on ``char``.

Prime-field mode exists for speed experiments; all verdict-producing
computations run over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def is_prime(n: int) -> bool:
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


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient field: char 0 means the rationals, else GF(char)."""

    char: int = 0

    def __post_init__(self):
        if self.char != 0 and not is_prime(self.char):
            raise ValueError(f"prime-field characteristic must be prime, got {self.char}")

    @property
    def is_rationals(self) -> bool:
        return self.char == 0

    def coerce(self, value):
        """Coerce an int / Fraction / field element into this field."""
        if self.char == 0:
            if isinstance(value, Fraction):
                return value
            if isinstance(value, int):
                return Fraction(value)
            raise TypeError(f"cannot coerce {value!r} into Q")
        if isinstance(value, int):
            return value % self.char
        if isinstance(value, Fraction):
            num = value.numerator % self.char
            den = value.denominator % self.char
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.char}")
            return (num * pow(den, self.char - 2, self.char)) % self.char
        raise TypeError(f"cannot coerce {value!r} into GF({self.char})")

    def add(self, a, b):
        return a + b if self.char == 0 else (a + b) % self.char

    def mul(self, a, b):
        return a * b if self.char == 0 else (a * b) % self.char

    def neg(self, a):
        return -a if self.char == 0 else (-a) % self.char

    def inv(self, a):
        if self.char == 0:
            return Fraction(1) / a
        if a % self.char == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.char - 2, self.char)

    @property
    def zero(self):
        return Fraction(0) if self.char == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.char == 0 else 1

    def label(self) -> str:
        return "Q" if self.char == 0 else f"GF {self.char}"

    def render(self, c) -> str:
        return str(c)


QQ = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)
