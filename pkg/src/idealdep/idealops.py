"""Ideal algebra: powers, intersections, colons, saturation, elimination,
truncations and subalgebra kernel presentations.

Everything is computed in the ambient free ring with the defining
relations adjoined, then read back as normal forms.  Intersections use the
classical auxiliary-variable construction; colons divide an intersection
by the colon element inside the quotient ring (exact, via a graded linear
solve); saturation iterates colons to a fixed point detected by
Groebner-basis equality.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from idealdep import hilbert
from idealdep.errors import InternalCheckError, PreconditionError
from idealdep.groebner import eliminate_variables, groebner_basis, to_primitive
from idealdep.groebner import GroebnerBasis
from idealdep.linalg import solve_exact
from idealdep.orders import GREVLEX
from idealdep.poly import Polynomial, PolyRing, inject, project
from idealdep.rings import GradedIdeal, GradedRing


def ideal_power(ideal: GradedIdeal, n: int) -> GradedIdeal:
    """I^n, generated by all n-fold products of the stored generators."""
    if n < 1:
        raise PreconditionError("ideal_power needs n >= 1 (the unit ideal is not a graded ideal here)")
    if n == 1 or ideal.is_zero():
        return ideal
    gens = []
    for combo in combinations_with_replacement(ideal.gens, n):
        f = combo[0]
        for g in combo[1:]:
            f = f * g
        gens.append(f)
    return GradedIdeal(ideal.ring, gens)


def _fresh_name(base: str, taken) -> str:
    name = base
    k = 0
    while name in taken:
        k += 1
        name = f"{base}{k}"
    return name


def intersect(I: GradedIdeal, J: GradedIdeal) -> GradedIdeal:
    """I ∩ J via elimination of an auxiliary variable w from w*I + (1-w)*J."""
    if I.ring != J.ring:
        raise ValueError("ideals in different rings")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return ring.zero_ideal()
    w_name = _fresh_name("w0", ring.names)
    big = PolyRing(ring.field, (w_name,) + ring.names)
    positions = tuple(range(1, ring.nvars + 1))
    w = big.variable(0)
    one = big.one()
    gens = []
    for f in I.lifted_gens():
        gens.append(w * inject(f, big, positions))
    for g in J.lifted_gens():
        gens.append((one - w) * inject(g, big, positions))
    eliminated = eliminate_variables(gens, 1, ring=big)
    result = [project(h, ring.ambient, positions) for h in eliminated]
    return GradedIdeal(ring, result)


def ring_division(ring: GradedRing, h: Polynomial, g: Polynomial) -> Polynomial:
    """The quotient q with q*g = h in the quotient ring (h, g homogeneous,
    g nonzero, h in the principal ideal (g))."""
    h = ring.reduce(h)
    g = ring.reduce(g)
    if g.is_zero():
        raise PreconditionError("division by zero in the ring")
    if h.is_zero():
        return ring.ambient.zero()
    dh = h.homogeneous_degree()
    dg = g.homogeneous_degree()
    if dh is None or dg is None or dh < dg:
        raise PreconditionError("inhomogeneous or impossible ring division")
    src = ring.standard_monomials(dh - dg)
    dst = ring.standard_monomials(dh)
    index = {m: i for i, m in enumerate(dst)}
    cols = []
    for mu in src:
        prod = ring.reduce(g * ring.ambient.monomial(mu))
        col = [ring.field.zero] * len(dst)
        for mono, c in prod.terms.items():
            col[index[mono]] = c
        cols.append(col)
    rhs = [ring.field.zero] * len(dst)
    for mono, c in h.terms.items():
        rhs[index[mono]] = c
    matrix = [[cols[j][i] for j in range(len(cols))] for i in range(len(dst))]
    sol = solve_exact(matrix, rhs)
    if sol is None:
        sol = _particular_solution(matrix, rhs)
    if sol is None:
        raise InternalCheckError("ring division has no solution; is the element really a multiple?")
    return ring.ambient.from_terms(
        (src[j], c) for j, c in enumerate(sol) if c
    )


def _particular_solution(matrix, rhs):
    """Any solution of M x = b over the rationals (free variables at 0)."""
    from fractions import Fraction

    m = len(matrix)
    n = len(matrix[0]) if m else 0
    rows = [[Fraction(v) for v in r] + [Fraction(b)] for r, b in zip(matrix, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    for i in range(r, m):
        if rows[i][n]:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = rows[i][n]
    return x


def colon(I: GradedIdeal, J: GradedIdeal) -> GradedIdeal:
    """I : J = {f : f*J ⊆ I}."""
    if I.ring != J.ring:
        raise ValueError("ideals in different rings")
    if J.is_zero():
        raise PreconditionError("colon by the zero ideal")
    ring = I.ring
    if I.is_zero():
        return ring.zero_ideal()
    acc = None
    for g in J.gens:
        principal = GradedIdeal(ring, [g])
        meet = intersect(I, principal)
        quotients = [ring_division(ring, h, g) for h in meet.gens]
        part = GradedIdeal(ring, quotients)
        acc = part if acc is None else intersect(acc, part)
    return acc if acc is not None else I


def saturate(I: GradedIdeal, J: GradedIdeal) -> GradedIdeal:
    """I : J^∞ by iterating colon until the ideal stabilizes."""
    if J.is_zero():
        raise PreconditionError("saturation by the zero ideal")
    current = I
    while True:
        nxt = colon(current, J)
        if nxt.same_ideal_as(current):
            return current
        current = nxt


def eliminate(I: GradedIdeal, first_k: int) -> GradedIdeal:
    """Generators of I ∩ (subring on all but the first first_k variables),
    returned as an ideal of the same ring."""
    if first_k < 0 or first_k > I.ring.nvars:
        raise PreconditionError("bad elimination count")
    if first_k == 0 or I.is_zero():
        return I
    kept = eliminate_variables(I.lifted_gens(), first_k, ring=I.ring.ambient)
    return GradedIdeal(I.ring, kept)


def truncate(I: GradedIdeal, t: int) -> GradedIdeal:
    """The ideal generated by a k-basis of the degree-t piece of I."""
    basis = hilbert.graded_piece_basis(I, t)
    return GradedIdeal(I.ring, basis)


def min_gens(I: GradedIdeal):
    return list(I.min_gens())


def max_gen_degree(I: GradedIdeal) -> int:
    return I.max_gen_degree()


def kernel_presentation(ring: GradedRing, elements, var_prefix: str = "t"):
    """Presentation of the subalgebra generated by equal-degree elements.

    Returns (T, K): a free graded ring T on len(elements) degree-1
    variables and the ideal K of relations, i.e. the kernel of T -> ring
    sending the j-th variable to elements[j].  The kernel is computed by
    eliminating the ring variables from relations + (t_j - element_j) under
    a block order.  Callers pass a k-linearly independent list; dependence
    is detected afterwards as a linear form in the kernel and rejected.
    """
    elements = list(elements)
    if not elements:
        raise PreconditionError("no elements to present")
    degrees = {e.homogeneous_degree() for e in elements}
    if None in degrees or len(degrees) != 1:
        raise PreconditionError("presentation needs homogeneous elements of one common degree")
    nv = ring.nvars
    s = len(elements)
    tnames = []
    taken = set(ring.names)
    for j in range(1, s + 1):
        name = _fresh_name(f"{var_prefix}{j}", taken)
        taken.add(name)
        tnames.append(name)
    big = PolyRing(ring.field, ring.names + tuple(tnames))
    positions = tuple(range(nv))
    gens = [inject(r, big, positions) for r in ring.relations]
    for j, e in enumerate(elements):
        gens.append(big.variable(nv + j) - inject(ring.reduce(e), big, positions))
    eliminated = eliminate_variables(gens, nv, ring=big)
    tring = PolyRing(ring.field, tuple(tnames))
    tpositions = tuple(range(nv, nv + s))
    kernel_gens = [project(h, tring, tpositions) for h in eliminated]
    for g in kernel_gens:
        if not g.is_homogeneous():
            raise InternalCheckError("kernel of an equal-degree presentation must be graded")
        if g.homogeneous_degree() == 1:
            raise PreconditionError("elements are k-linearly dependent (linear form in the kernel)")
    fiber = GradedRing(tring, ())
    K = GradedIdeal(fiber, kernel_gens)
    # the eliminated subset is already the reduced grevlex basis of K:
    # the block order restricted to the kept variables is grevlex.
    prims = [to_primitive(g, GREVLEX)[0] for g in K.gens]
    prims.sort(key=lambda f: (sum(f[0][0]), f[0][0]))
    K._seed_groebner(GREVLEX, GroebnerBasis(tring, GREVLEX, prims))
    return fiber, K
