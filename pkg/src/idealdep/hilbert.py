"""Hilbert series, Hilbert polynomials, dimension and multiplicity.

The series of a quotient by a monomial ideal is computed by the classical
pivot recursion
    HS(M) = HS(M + (x_j)) + t * HS(M : x_j)
with coprime-generator base cases; the pivot is the most frequent variable
among the minimal generators (ties broken by variable index).  All
arithmetic is exact integer arithmetic.

`graded_piece_length` is the deliberately independent brute-force oracle:
it never touches the series machinery, so the two paths can cross-validate
each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from idealdep import _kernel as K
from idealdep import linalg
from idealdep.orders import GREVLEX, MonomialOrder


@dataclass(frozen=True)
class HilbertSeries:
    """numerator / (1 - t)^denom_power with integer numerator coefficients
    (index = power of t); expanded coefficients are graded-piece lengths."""

    numerator: tuple
    denom_power: int

    def coefficient(self, m: int) -> int:
        """Length of the degree-m piece."""
        if m < 0:
            return 0
        v = self.denom_power
        total = 0
        for i, a in enumerate(self.numerator):
            if a == 0 or i > m:
                continue
            if v == 0:
                if i == m:
                    total += a
            else:
                total += a * comb(m - i + v - 1, v - 1)
        return total

    def __str__(self):
        terms = []
        for i, a in enumerate(self.numerator):
            if a:
                terms.append(f"{'+' if a > 0 and terms else ''}{a}*t^{i}")
        num = "".join(terms) or "0"
        return f"({num}) / (1-t)^{self.denom_power}"


@dataclass(frozen=True)
class HilbertPolynomial:
    """Exact polynomial with the Krull dimension and multiplicity attached.

    ``coeffs[k]`` is the coefficient of m^k.  The Hilbert function agrees
    with the polynomial from ``regularity_bound`` on.  For krull_dim 0 the
    polynomial is zero and ``multiplicity`` is the total length.
    """

    coeffs: tuple
    krull_dim: int
    multiplicity: int
    regularity_bound: int

    def __call__(self, m) -> Fraction:
        acc = Fraction(0)
        mm = Fraction(1)
        for c in self.coeffs:
            acc += c * mm
            mm *= m
        return acc


def _minimalize(monos):
    monos = sorted(set(monos), key=lambda m: (K.mono_deg(m), m))
    out = []
    for m in monos:
        if not any(K.mono_divides(p, m) for p in out):
            out.append(m)
    return out


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _one_minus_t_power(deg):
    out = [0] * (deg + 1)
    out[0] = 1
    out[deg] = -1
    return out


def _pairwise_coprime(monos):
    for a, b in combinations_with_replacement(range(len(monos)), 2):
        if a == b:
            continue
        if any(x and y for x, y in zip(monos[a], monos[b])):
            return False
    return True


def _series_numerator(monos):
    """Numerator of HS(R/(monos)) over (1-t)^nvars; monos minimal."""
    if not monos:
        return [1]
    if len(monos) == 1 or _pairwise_coprime(monos):
        acc = [1]
        for m in monos:
            acc = _poly_mul_int(acc, _one_minus_t_power(K.mono_deg(m)))
        return acc
    nvars = len(monos[0])
    counts = [0] * nvars
    for m in monos:
        for i, e in enumerate(m):
            if e:
                counts[i] += 1
    pivot = max(range(nvars), key=lambda i: (counts[i], -i))
    # M + (x_pivot): generators without the pivot variable, plus the pivot
    var = tuple(1 if i == pivot else 0 for i in range(nvars))
    plus = [var] + [m for m in monos if m[pivot] == 0]
    # M : x_pivot
    colon = _minimalize(
        [tuple(e - 1 if i == pivot and e else e for i, e in enumerate(m)) for m in monos]
    )
    n_plus = _series_numerator(_minimalize(plus))
    n_colon = _series_numerator(colon)
    size = max(len(n_plus), len(n_colon) + 1)
    out = [0] * size
    for i, a in enumerate(n_plus):
        out[i] += a
    for i, a in enumerate(n_colon):
        out[i + 1] += a
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def series_of_monomial_quotient(monos, nvars: int) -> HilbertSeries:
    """Hilbert series of (free ring on nvars variables) / (monomial ideal)."""
    monos = _minimalize(list(monos))
    if any(K.mono_deg(m) == 0 for m in monos):
        return HilbertSeries((0,), nvars)  # unit ideal: zero ring
    return HilbertSeries(tuple(_series_numerator(monos)), nvars)


def series_to_polynomial(hs: HilbertSeries) -> HilbertPolynomial:
    num = list(hs.numerator)
    dim = hs.denom_power
    while dim > 0 and sum(num) == 0:
        # divide by (1 - t): quotient coefficients are prefix sums
        acc = 0
        quo = []
        for a in num[:-1]:
            acc += a
            quo.append(acc)
        num = quo or [0]
        while len(num) > 1 and num[-1] == 0:
            num.pop()
        dim -= 1
    if not any(num):
        return HilbertPolynomial((), 0, 0, 0)
    top = len(num) - 1
    if dim == 0:
        return HilbertPolynomial((), 0, sum(num), max(0, top + 1))
    # HP(m) = sum_i num[i] * C(m - i + dim - 1, dim - 1), expanded in m
    coeffs = [Fraction(0)] * dim
    fact = 1
    for k in range(1, dim):
        fact *= k
    for i, a in enumerate(num):
        if a == 0:
            continue
        # expand the falling product (m - i + 1)...(m - i + dim - 1) in m
        prod = [Fraction(1)]
        for k in range(1, dim):
            const = Fraction(k - i)
            new = [Fraction(0)] * (len(prod) + 1)
            for idx, c in enumerate(prod):
                new[idx] += c * const
                new[idx + 1] += c
            prod = new
        for idx, c in enumerate(prod):
            coeffs[idx] += Fraction(a, fact) * c
    mult = sum(num)
    reg = max(0, top - dim + 1)
    return HilbertPolynomial(tuple(coeffs), dim, mult, reg)


# ----------------------------------------------------------------------
# ideal-level operations (GradedIdeal ducks in to avoid an import cycle)
# ----------------------------------------------------------------------


def initial_monomials(ideal, order: MonomialOrder = GREVLEX) -> tuple:
    """Minimal generators of the lead-term ideal of the lifted ideal."""
    if ideal.is_zero() and not ideal.ring.relations:
        return ()
    gb = ideal.groebner(order)
    return tuple(_minimalize(list(gb.lead_monomials)))


def dim_and_degree(ideal, order: MonomialOrder = GREVLEX):
    """(Krull dimension, multiplicity) of R/I via the initial ideal."""
    monos = initial_monomials(ideal, order)
    hs = series_of_monomial_quotient(monos, ideal.ring.nvars)
    hp = series_to_polynomial(hs)
    return hp.krull_dim, hp.multiplicity


def quotient_series(ideal, order: MonomialOrder = GREVLEX) -> HilbertSeries:
    return series_of_monomial_quotient(initial_monomials(ideal, order), ideal.ring.nvars)


def _power_products(gens, n: int):
    out = []
    seen = set()
    for combo in combinations_with_replacement(gens, n):
        f = combo[0]
        for g in combo[1:]:
            f = f * g
        key = str(f)
        if key not in seen:
            seen.add(key)
            out.append(f)
    return out


def graded_piece_length(ideal, n: int, m: int) -> int:
    """l_k((I^n)_m) by brute-force linear algebra.

    Spans normal forms of (power generator) * (standard monomial) inside
    the standard-monomial basis of the degree-m piece of the ring and takes
    the rank.  Never touches the Hilbert-series machinery: this is the
    independent oracle for the fiber-cone pipeline.
    """
    if n < 1:
        raise ValueError("power must be >= 1")
    if m < 0:
        return 0
    ring = ideal.ring
    if ideal.is_zero():
        return 0
    basis = ring.standard_monomials(m)
    if not basis:
        return 0
    index = {mono: i for i, mono in enumerate(basis)}
    rows = []
    for g in _power_products(list(ideal.gens), n):
        g = ring.reduce(g)
        if g.is_zero():
            continue
        dg = g.homogeneous_degree()
        if dg is None or dg > m:
            continue
        for mu in ring.standard_monomials(m - dg):
            prod = ring.reduce(g * ring.ambient.monomial(mu))
            if prod.is_zero():
                continue
            row = [ring.field.zero] * len(basis)
            for mono, c in prod.terms.items():
                row[index[mono]] = c
            rows.append(row)
    if not rows:
        return 0
    return linalg.rank(rows, ring.field)


def graded_piece_basis(ideal, m: int):
    """Canonical k-basis of the degree-m piece of I, as polynomials."""
    ring = ideal.ring
    if ideal.is_zero() or m < 0:
        return []
    basis = ring.standard_monomials(m)
    if not basis:
        return []
    index = {mono: i for i, mono in enumerate(basis)}
    rows = []
    for g in ideal.gens:
        dg = g.homogeneous_degree()
        if dg > m:
            continue
        for mu in ring.standard_monomials(m - dg):
            prod = ring.reduce(g * ring.ambient.monomial(mu))
            if prod.is_zero():
                continue
            row = [ring.field.zero] * len(basis)
            for mono, c in prod.terms.items():
                row[index[mono]] = c
            rows.append(row)
    if not rows:
        return []
    ech = linalg.echelon(rows, ring.field)
    out = []
    for row in ech:
        out.append(ring.ambient.from_terms(
            (basis[i], c) for i, c in enumerate(row) if c
        ))
    return out


def hilbert_function_values(hs: HilbertSeries, upto: int) -> list:
    return [hs.coefficient(m) for m in range(upto + 1)]
