"""Multivariate polynomials with exact coefficients.

Monomials are exponent tuples; a polynomial is a map from monomials to
nonzero field elements, tied to a `PolyRing` (the free polynomial ring on
named degree-1 variables).  All arithmetic is exact — coefficients are
`Fraction`s over the rationals, ints over a prime field, and magnitudes
are unbounded.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from idealdep import _kernel as K
from idealdep.fields import QQ, FieldSpec
from idealdep.orders import GREVLEX, MonomialOrder

Mono = tuple  # tuple[int, ...]


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, degree: int) -> tuple:
    """All exponent tuples of the given total degree, grevlex-descending."""
    if nvars == 0:
        return ((),) if degree == 0 else ()
    if nvars == 1:
        return ((degree,),)
    out = []

    def rec(prefix, rem, k):
        if k == 1:
            out.append(prefix + (rem,))
            return
        for e in range(rem, -1, -1):
            rec(prefix + (e,), rem - e, k - 1)

    rec((), degree, nvars)
    key = GREVLEX.key_desc()
    out.sort(key=key)
    return tuple(out)


class PolyRing:
    """A free polynomial ring over a field on named degree-1 variables."""

    __slots__ = ("field", "names", "nvars", "_hash")

    def __init__(self, field: FieldSpec, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        if not names:
            raise ValueError("need at least one variable")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "nvars", len(names))
        object.__setattr__(self, "_hash", hash((field, names)))

    def __setattr__(self, *a):
        raise AttributeError("PolyRing is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.names == other.names
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PolyRing({self.field.label()}[{', '.join(self.names)}])"

    # -- constructors -------------------------------------------------

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return Polynomial(self, {(0,) * self.nvars: self.field.one})

    def constant(self, value) -> Polynomial:
        c = self.field.coerce(value)
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def variable(self, i: int) -> Polynomial:
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): self.field.one})

    def variables(self) -> list[Polynomial]:
        return [self.variable(i) for i in range(self.nvars)]

    def monomial(self, exps, coeff=1) -> Polynomial:
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps}")
        c = self.field.coerce(coeff)
        if c == 0:
            return self.zero()
        return Polynomial(self, {exps: c})

    def from_terms(self, terms) -> Polynomial:
        acc: dict = {}
        f = self.field
        for exps, coeff in terms:
            exps = tuple(exps)
            if len(exps) != self.nvars:
                raise ValueError("wrong exponent length")
            c = f.add(acc.get(exps, f.zero), f.coerce(coeff))
            if c == 0:
                acc.pop(exps, None)
            else:
                acc[exps] = c
        return Polynomial(self, acc)

    def parse(self, text: str) -> Polynomial:
        from idealdep.problem import parse_polynomial

        return parse_polynomial(self, text)

    def degree_monomials(self, degree: int) -> tuple:
        return monomials_of_degree(self.nvars, degree)

    def render_monomial(self, exps) -> str:
        parts = []
        for name, e in zip(self.names, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


class Polynomial:
    """Element of a PolyRing.  Immutable; zero coefficients never stored."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def homogeneous_degree(self):
        """The common total degree of all terms, or None if inhomogeneous."""
        if not self.terms:
            return None
        degs = {sum(m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return not self.terms or self.homogeneous_degree() is not None

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def terms_desc(self, order: MonomialOrder = GREVLEX) -> list:
        key = order.key_desc()
        return sorted(self.terms.items(), key=lambda t: key(t[0]))

    def leading_monomial(self, order: MonomialOrder = GREVLEX):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        key = order.key_desc()
        return min(self.terms, key=key)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX):
        return self.terms[self.leading_monomial(order)]

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.ring.field.zero)

    def constant_value(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def max_coefficient_bits(self) -> int:
        bits = 0
        for c in self.terms.values():
            if isinstance(c, Fraction):
                bits = max(bits, c.numerator.bit_length(), c.denominator.bit_length())
            else:
                bits = max(bits, int(c).bit_length())
        return bits

    # -- arithmetic ---------------------------------------------------

    def _check_ring(self, other: Polynomial):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        self._check_ring(other)
        f = self.ring.field
        acc = dict(self.terms)
        for m, c in other.terms.items():
            s = f.add(acc.get(m, f.zero), c)
            if s == 0:
                acc.pop(m, None)
            else:
                acc[m] = s
        return Polynomial(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return self.ring.constant(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.field.coerce(other)
            if c == 0:
                return self.ring.zero()
            f = self.ring.field
            return Polynomial(self.ring, {m: f.mul(v, c) for m, v in self.terms.items()})
        self._check_ring(other)
        f = self.ring.field
        acc: dict = {}
        small, large = self.terms, other.terms
        if len(small) > len(large):
            small, large = large, small
        for m1, c1 in small.items():
            for m2, c2 in large.items():
                m = K.mono_mul(m1, m2)
                s = f.add(acc.get(m, f.zero), f.mul(c1, c2))
                if s == 0:
                    acc.pop(m, None)
                else:
                    acc[m] = s
        return Polynomial(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if other == 0:
                return not self.terms
            other = self.ring.constant(other)
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def monic(self, order: MonomialOrder = GREVLEX) -> Polynomial:
        if not self.terms:
            return self
        inv = self.ring.field.inv(self.leading_coefficient(order))
        return self * inv

    def substitute(self, images: list[Polynomial]) -> Polynomial:
        """Evaluate at polynomials: variable i goes to images[i]."""
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        target = images[0].ring
        result = target.zero()
        for m, c in self.terms.items():
            term = target.constant(c)
            for i, e in enumerate(m):
                if e:
                    term = term * images[i] ** e
            result = result + term
        return result

    # -- rendering ----------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms_desc():
            mono = self.ring.render_monomial(m)
            if mono == "1":
                piece = str(c)
            elif c == 1:
                piece = mono
            elif c == -1:
                piece = f"-{mono}"
            else:
                piece = f"{c}*{mono}"
            parts.append(piece)
        out = parts[0]
        for piece in parts[1:]:
            if piece.startswith("-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out

    def __repr__(self):
        return f"<{self}>"


def inject(f: Polynomial, target: PolyRing, positions: tuple) -> Polynomial:
    """Re-read f in a larger ring; positions[i] is the target index of var i."""
    if f.ring.field != target.field:
        raise ValueError("field mismatch")
    terms = {}
    for m, c in f.terms.items():
        exps = [0] * target.nvars
        for i, e in enumerate(m):
            exps[positions[i]] = e
        terms[tuple(exps)] = c
    return Polynomial(target, terms)


def project(f: Polynomial, target: PolyRing, positions: tuple) -> Polynomial:
    """Re-read f in a smaller ring; positions[j] is the source index of
    target variable j.  All other source variables must be absent from f."""
    if f.ring.field != target.field:
        raise ValueError("field mismatch")
    keep = set(positions)
    terms = {}
    for m, c in f.terms.items():
        for i, e in enumerate(m):
            if e and i not in keep:
                raise ValueError("polynomial involves a projected-away variable")
        terms[tuple(m[i] for i in positions)] = c
    return Polynomial(target, terms)
