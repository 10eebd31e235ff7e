"""Reduced Groebner bases via Buchberger's algorithm.

Internally polynomials travel in "primitive form": integer term lists with
content 1 and positive leading coefficient (prime-field coefficients stay
as ints mod p).  All pair handling uses the Gebauer-Moeller refinement of
the two classical pair-elimination criteria, with normal (smallest-lcm
first) selection.  The reduced basis is unique for a given ideal and
order, so outputs are canonical regardless of processing order.
"""

from __future__ import annotations

import heapq
import threading
from fractions import Fraction
from math import gcd

from idealdep import _kernel as K
from idealdep import cache
from idealdep.orders import GREVLEX, MonomialOrder, block_order
from idealdep.poly import Polynomial, PolyRing


class _Stats:
    """Process-wide engine counters surfaced in CLI reports."""

    def __init__(self):
        self._lock = threading.Lock()
        self.reset()

    def reset(self):
        with getattr(self, "_lock", threading.Lock()):
            self.groebner_runs = 0
            self.max_basis_size = 0
            self.max_coefficient_bits = 0
            self.reductions = 0

    def record_run(self, basis_size, coeff_bits, reductions):
        with self._lock:
            self.groebner_runs += 1
            self.max_basis_size = max(self.max_basis_size, basis_size)
            self.max_coefficient_bits = max(self.max_coefficient_bits, coeff_bits)
            self.reductions += reductions

    def snapshot(self) -> dict:
        with self._lock:
            return {
                "groebner_runs": self.groebner_runs,
                "max_basis_size": self.max_basis_size,
                "max_coefficient_bits": self.max_coefficient_bits,
                "reductions": self.reductions,
            }


STATS = _Stats()


def _lcm_int(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def to_primitive(f: Polynomial, order: MonomialOrder):
    """Sorted integer term list plus the scale: f == scale * terms."""
    p = f.ring.field.char
    terms = f.terms_desc(order)
    if p:
        return [(m, int(c) % p) for m, c in terms], 1
    den = 1
    for _, c in terms:
        den = _lcm_int(den, c.denominator)
    ints = [(m, int(c * den)) for m, c in terms]
    content = 0
    for _, v in ints:
        content = gcd(content, v)
        if content == 1:
            break
    if content == 0:
        return [], Fraction(1)
    if ints[0][1] < 0:
        content = -content
    return [(m, v // content) for m, v in ints], Fraction(content, den)


def _strip(terms):
    """Normalize an integer term list to primitive with positive lead."""
    if not terms:
        return terms
    content = 0
    for _, v in terms:
        content = gcd(content, v)
        if content == 1:
            break
    if terms[0][1] < 0:
        content = -content
    if content == 1:
        return terms
    return [(m, v // content) for m, v in terms]


def from_primitive(terms, ring: PolyRing, scale=None) -> Polynomial:
    p = ring.field.char
    if p:
        return Polynomial(ring, {m: c % p for m, c in terms if c % p})
    if scale is None:
        scale = Fraction(1)
    return Polynomial(ring, {m: c * scale for m, c in terms})


def _spoly(f, g, code, elim, p):
    mf, cf = f[0]
    mg, cg = g[0]
    big = K.mono_lcm(mf, mg)
    df = K.mono_quotient(big, mf)
    dg = K.mono_quotient(big, mg)
    fs = [(K.mono_mul(m, df), c) for m, c in f]
    if p:
        b = (-cf * pow(cg, p - 2, p)) % p
        return K.addmul_terms(fs, 1, g, b, dg, code, elim, p)
    d = gcd(cf, cg)
    return K.addmul_terms(fs, cg // d, g, -(cf // d), dg, code, elim, 0)


def _update_gm(G, leads, pairs, heap, f):
    """Add f to the basis, maintaining the Gebauer-Moeller pair set.

    ``pairs`` maps live (i, j) to the lcm of their leads; ``heap`` holds
    (deg, lcm, i, j) selection keys with lazy deletion.
    """
    mf = f[0][0]
    t = len(G)
    for ij, lij in list(pairs.items()):
        if (
            K.mono_divides(mf, lij)
            and K.mono_lcm(leads[ij[0]], mf) != lij
            and K.mono_lcm(leads[ij[1]], mf) != lij
        ):
            del pairs[ij]
    by_lcm: dict = {}
    for i in range(t):
        by_lcm.setdefault(K.mono_lcm(leads[i], mf), []).append(i)
    minimal = []
    for big in sorted(by_lcm, key=lambda m: (K.mono_deg(m), m)):
        if all(not K.mono_divides(prev, big) for prev in minimal):
            minimal.append(big)
    for big in minimal:
        members = by_lcm[big]
        if not any(K.mono_lcm(leads[i], mf) == K.mono_mul(leads[i], mf) for i in members):
            ij = (min(members), t)
            pairs[ij] = big
            heapq.heappush(heap, (K.mono_deg(big), big, ij))
    G.append(f)
    leads.append(mf)


def buchberger_primitive(prims, code, elim, p):
    """Reduced Groebner basis of primitive-form inputs (same form out)."""
    inputs = [t for t in (_strip(f) for f in prims) if t]
    inputs.sort(key=lambda f: (K.mono_deg(f[0][0]), f[0][0], len(f)))
    G: list = []
    leads: list = []
    pairs: dict = {}
    heap: list = []
    reductions = 0

    def nf(f):
        out, _ = K.reduce_full(f, leads, G, code, elim, p)
        return _strip(out)

    for f in inputs:
        h = nf(f)
        if h:
            _update_gm(G, leads, pairs, heap, h)
            reductions += 1
    while pairs:
        _, _, ij = heapq.heappop(heap)
        if ij not in pairs:
            continue  # pruned earlier; lazy deletion
        del pairs[ij]
        i, j = ij
        s = _spoly(G[i], G[j], code, elim, p)
        if not s:
            continue
        h = nf(s)
        reductions += 1
        if h:
            _update_gm(G, leads, pairs, heap, h)

    # minimalize: drop elements whose lead is divisible by another lead
    order_idx = sorted(range(len(G)), key=lambda i: (K.mono_deg(leads[i]), leads[i]))
    minimal_idx = []
    for i in order_idx:
        if not any(K.mono_divides(leads[j], leads[i]) for j in minimal_idx):
            minimal_idx.append(i)
    basis = [G[i] for i in minimal_idx]
    # interreduce tails
    reduced = []
    for i, f in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        other_leads = [g[0][0] for g in others]
        out, _ = K.reduce_full(f, other_leads, others, code, elim, p)
        reduced.append(_strip(out))
    reduced = [f for f in reduced if f]
    reduced.sort(key=lambda f: (K.mono_deg(f[0][0]), f[0][0]))
    return reduced, reductions


class GroebnerBasis:
    """A reduced Groebner basis: monic elements, canonical ordering."""

    __slots__ = ("ring", "order", "elements", "_prim", "_leads")

    def __init__(self, ring, order, prim_elements):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_prim", tuple(tuple(f) for f in prim_elements))
        object.__setattr__(self, "_leads", tuple(f[0][0] for f in prim_elements))
        p = ring.field.char
        elems = []
        for f in prim_elements:
            if p:
                inv = pow(f[0][1], p - 2, p)
                elems.append(Polynomial(ring, {m: (c * inv) % p for m, c in f}))
            else:
                lead = f[0][1]
                elems.append(Polynomial(ring, {m: Fraction(c, lead) for m, c in f}))
        object.__setattr__(self, "elements", tuple(elems))

    def __setattr__(self, *a):
        raise AttributeError("GroebnerBasis is immutable")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.order == other.order
            and self._prim == other._prim
        )

    def __hash__(self):
        return hash((self.ring, self.order, self._prim))

    @property
    def lead_monomials(self):
        return self._leads

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise ValueError("polynomial not in the basis ring")
        if not f.terms:
            return f
        prim, scale = to_primitive(f, self.order)
        out, mult = K.reduce_full(
            prim, self._leads, self._prim, self.order.code, self.order.elim,
            self.ring.field.char,
        )
        p = self.ring.field.char
        if p:
            return Polynomial(self.ring, {m: c % p for m, c in out if c % p})
        coeff_scale = scale / mult
        return Polynomial(self.ring, {m: c * coeff_scale for m, c in out})

    def contains(self, f: Polynomial) -> bool:
        if not f.terms:
            return True
        prim, _ = to_primitive(f, self.order)
        out, _ = K.reduce_full(
            prim, self._leads, self._prim, self.order.code, self.order.elim,
            self.ring.field.char,
        )
        return not out

    def max_coefficient_bits(self) -> int:
        bits = 0
        for f in self._prim:
            for _, c in f:
                bits = max(bits, int(c).bit_length())
        return bits

    def canonical_strings(self) -> list:
        return [str(g) for g in self.elements]


def groebner_basis(gens, order: MonomialOrder = GREVLEX, ring: PolyRing | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = [g for g in gens if g is not None and not g.is_zero()]
    if ring is None:
        if not gens:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators from different rings")
    if not gens:
        return GroebnerBasis(ring, order, [])

    key = cache.groebner_key(ring, order, gens)
    cached = cache.get_groebner(key, ring, order)
    if cached is not None:
        return cached

    prims = [to_primitive(g, order)[0] for g in gens]
    reduced, reductions = buchberger_primitive(prims, order.code, order.elim, ring.field.char)
    gb = GroebnerBasis(ring, order, reduced)
    STATS.record_run(len(reduced), gb.max_coefficient_bits(), reductions)
    cache.put_groebner(key, gb)
    return gb


def eliminate_variables(gens, first_k: int, ring: PolyRing | None = None) -> list:
    """Generators of (gens) intersected with the subring that omits the
    first ``first_k`` variables, still expressed in the ambient ring."""
    if ring is None and gens:
        ring = gens[0].ring
    if first_k == 0:
        return list(gens)
    gb = groebner_basis(gens, block_order(first_k), ring=ring)
    out = []
    for g in gb.elements:
        if all(all(e == 0 for e in m[:first_k]) for m in g.terms):
            out.append(g)
    return out


def verify_buchberger_certificate(gb: GroebnerBasis, original_gens=None) -> bool:
    """Independent certificate: every S-polynomial reduces to zero and each
    original generator lies in the ideal of the basis.  Test-mode oracle."""
    code, elim, p = gb.order.code, gb.order.elim, gb.ring.field.char
    prims = list(gb._prim)
    leads = list(gb._leads)
    for i in range(len(prims)):
        for j in range(i + 1, len(prims)):
            s = _spoly(prims[i], prims[j], code, elim, p)
            if not s:
                continue
            out, _ = K.reduce_full(s, leads, prims, code, elim, p)
            if out:
                return False
    if original_gens:
        for g in original_gens:
            if not gb.contains(g):
                return False
    # reducedness: no term of any element divisible by another element's lead
    for i, f in enumerate(prims):
        for m, _ in f:
            for j, lead in enumerate(leads):
                if j != i and K.mono_divides(lead, m):
                    return False
    return True
