"""Standard graded rings R = k[x_1..x_v]/P and homogeneous ideals.

Every variable has degree 1 and every relation is homogeneous of positive
degree, so quotients are standard graded.  Ideal computations happen in
the ambient free ring with the relations adjoined; generators are stored
as normal forms modulo the relations.

All objects are immutable after construction; lazily computed caches are
populated idempotently, so concurrent use on shared values is safe.
"""

from __future__ import annotations

from typing import Iterable

from idealdep import hilbert
from idealdep.errors import PreconditionError
from idealdep.fields import FieldSpec
from idealdep.groebner import GroebnerBasis, groebner_basis
from idealdep.orders import GREVLEX, MonomialOrder
from idealdep.poly import Polynomial, PolyRing, inject


class GradedRing:
    """A standard graded algebra: free polynomial ring modulo homogeneous
    relations.  The user is responsible for asserting domain-ness when the
    relation list is nonempty; the library records but cannot verify it."""

    __slots__ = (
        "ambient",
        "relations",
        "_relations_gb",
        "_std_monos",
        "_series",
        "_dim_mult",
    )

    def __init__(self, ambient: PolyRing, relations: Iterable[Polynomial] = ()):
        relations = tuple(relations)
        for rel in relations:
            if rel.ring != ambient:
                raise ValueError("relation not in the ambient ring")
            deg = rel.homogeneous_degree()
            if deg is None or deg < 1:
                raise ValueError(f"relation {rel} is not homogeneous of positive degree")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "relations", relations)
        object.__setattr__(self, "_relations_gb", None)
        object.__setattr__(self, "_std_monos", {})
        object.__setattr__(self, "_series", None)
        object.__setattr__(self, "_dim_mult", None)

    def __setattr__(self, *a):
        raise AttributeError("GradedRing is immutable")

    @classmethod
    def free(cls, field: FieldSpec, names: Iterable[str]) -> "GradedRing":
        return cls(PolyRing(field, names), ())

    # -- identity -------------------------------------------------------

    @property
    def field(self) -> FieldSpec:
        return self.ambient.field

    @property
    def names(self):
        return self.ambient.names

    @property
    def nvars(self) -> int:
        return self.ambient.nvars

    def is_free(self) -> bool:
        return not self.relations

    def _relation_key(self):
        return tuple(sorted(str(r) for r in self.relations))

    def __eq__(self, other):
        return (
            isinstance(other, GradedRing)
            and self.ambient == other.ambient
            and self._relation_key() == other._relation_key()
        )

    def __hash__(self):
        return hash((self.ambient, self._relation_key()))

    def __repr__(self):
        base = f"{self.field.label()}[{', '.join(self.names)}]"
        if self.relations:
            rels = ", ".join(str(r) for r in self.relations)
            return f"GradedRing({base} / ({rels}))"
        return f"GradedRing({base})"

    def describe(self) -> str:
        base = f"{self.field.label()}[{','.join(self.names)}]"
        if self.relations:
            return base + " / (" + ", ".join(str(r) for r in self.relations) + ")"
        return base

    # -- normal forms and graded pieces ----------------------------------

    def relations_groebner(self) -> GroebnerBasis:
        gb = self._relations_gb
        if gb is None:
            gb = groebner_basis(list(self.relations), GREVLEX, ring=self.ambient)
            object.__setattr__(self, "_relations_gb", gb)
        return gb

    def reduce(self, f: Polynomial) -> Polynomial:
        """Normal form of f modulo the defining relations."""
        if f.ring != self.ambient:
            raise ValueError("polynomial not in this ring")
        if not self.relations:
            return f
        return self.relations_groebner().normal_form(f)

    def standard_monomials(self, degree: int) -> tuple:
        """Monomials of the given degree not divisible by any lead term of
        the relations' basis; a k-basis of the degree piece of the ring."""
        if degree < 0:
            return ()
        got = self._std_monos.get(degree)
        if got is not None:
            return got
        monos = self.ambient.degree_monomials(degree)
        if self.relations:
            from idealdep import _kernel as K

            leads = self.relations_groebner().lead_monomials
            monos = tuple(
                m for m in monos if not any(K.mono_divides(l, m) for l in leads)
            )
        self._std_monos[degree] = monos
        return monos

    def piece_length(self, degree: int) -> int:
        return len(self.standard_monomials(degree))

    def hilbert_series(self) -> "hilbert.HilbertSeries":
        hs = self._series
        if hs is None:
            if self.relations:
                leads = self.relations_groebner().lead_monomials
            else:
                leads = ()
            hs = hilbert.series_of_monomial_quotient(leads, self.nvars)
            object.__setattr__(self, "_series", hs)
        return hs

    def _dim_and_mult(self):
        dm = self._dim_mult
        if dm is None:
            hp = hilbert.series_to_polynomial(self.hilbert_series())
            dm = (hp.krull_dim, hp.multiplicity)
            object.__setattr__(self, "_dim_mult", dm)
        return dm

    @property
    def dimension(self) -> int:
        return self._dim_and_mult()[0]

    @property
    def multiplicity(self) -> int:
        return self._dim_and_mult()[1]

    # -- ideals -----------------------------------------------------------

    def ideal(self, gens) -> "GradedIdeal":
        polys = []
        for g in gens:
            if isinstance(g, str):
                polys.append(self.ambient.parse(g))
            else:
                polys.append(g)
        return GradedIdeal(self, polys)

    def zero_ideal(self) -> "GradedIdeal":
        return GradedIdeal(self, ())

    def maximal_ideal(self) -> "GradedIdeal":
        return GradedIdeal(self, self.ambient.variables())

    # -- extensions ---------------------------------------------------------

    def with_extra_variable(self, preferred: str = "Y"):
        """The ring with one fresh degree-1 variable appended; returns
        (ring, name, renamed) where renamed notes a collision rename."""
        name = preferred
        renamed = False
        number = 0
        while name in self.names:
            number += 1
            name = f"{preferred}{number}"
            renamed = True
        target = PolyRing(self.field, self.names + (name,))
        positions = tuple(range(self.nvars))
        rels = [inject(r, target, positions) for r in self.relations]
        return GradedRing(target, rels), name, renamed


class GradedIdeal:
    """A homogeneous ideal, generators kept as nonzero normal forms."""

    __slots__ = ("ring", "gens", "_gb", "_min_gens", "_dim_deg", "_rees")

    def __init__(self, ring: GradedRing, gens: Iterable[Polynomial]):
        normalized = []
        seen = set()
        for g in gens:
            if g.ring != ring.ambient:
                raise ValueError("generator not in the ambient ring")
            if not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")
            g = ring.reduce(g)
            if g.is_zero():
                continue
            deg = g.homogeneous_degree()
            if deg is None:
                raise ValueError(f"normal form of a generator is inhomogeneous: {g}")
            if deg == 0:
                raise ValueError("degree-0 generator would make the ideal the whole ring")
            text = str(g)
            if text in seen:
                continue
            seen.add(text)
            normalized.append(g)
        normalized.sort(key=lambda f: (f.homogeneous_degree(), str(f)))
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "gens", tuple(normalized))
        object.__setattr__(self, "_gb", {})
        object.__setattr__(self, "_min_gens", None)
        object.__setattr__(self, "_dim_deg", None)
        object.__setattr__(self, "_rees", None)

    def __setattr__(self, *a):
        raise AttributeError("GradedIdeal is immutable")

    def __repr__(self):
        return f"GradedIdeal({', '.join(str(g) for g in self.gens) or '0'})"

    def is_zero(self) -> bool:
        return not self.gens

    def lifted_gens(self) -> list:
        """Generators of the preimage in the ambient free ring."""
        return list(self.gens) + list(self.ring.relations)

    def groebner(self, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
        gb = self._gb.get(order)
        if gb is None:
            gb = groebner_basis(self.lifted_gens(), order, ring=self.ring.ambient)
            self._gb[order] = gb
        return gb

    def _seed_groebner(self, order: MonomialOrder, gb: GroebnerBasis):
        self._gb.setdefault(order, gb)

    def contains(self, f: Polynomial) -> bool:
        f = self.ring.reduce(f) if f.ring == self.ring.ambient else f
        return self.groebner().contains(f)

    def contains_ideal(self, other: "GradedIdeal") -> bool:
        if other.ring != self.ring:
            raise ValueError("ideals in different rings")
        gb = self.groebner()
        return all(gb.contains(g) for g in other.gens)

    def same_ideal_as(self, other: "GradedIdeal") -> bool:
        if other.ring != self.ring:
            raise ValueError("ideals in different rings")
        return self.groebner().canonical_strings() == other.groebner().canonical_strings()

    # -- minimal generators ---------------------------------------------

    def min_gens(self) -> tuple:
        """Canonical minimal homogeneous generating set, chosen greedily
        from the stored generators in (degree, text) order: a candidate is
        kept iff it is not in the ideal of the previously kept ones."""
        if self.is_zero():
            raise PreconditionError("the zero ideal has no generating degrees")
        got = self._min_gens
        if got is not None:
            return got
        kept: list = []
        for g in self.gens:
            if not kept:
                kept.append(g)
                continue
            gb = groebner_basis(
                kept + list(self.ring.relations), GREVLEX, ring=self.ring.ambient
            )
            if not gb.contains(g):
                kept.append(g)
        result = tuple(kept)
        object.__setattr__(self, "_min_gens", result)
        return result

    def generating_degrees(self) -> tuple:
        return tuple(sorted({g.homogeneous_degree() for g in self.min_gens()}))

    def max_gen_degree(self) -> int:
        return self.generating_degrees()[-1]

    def is_equigenerated(self) -> bool:
        return len(self.generating_degrees()) == 1

    # -- numerical invariants ----------------------------------------------

    def quotient_dim_degree(self):
        """(Krull dimension, multiplicity) of R/I."""
        got = self._dim_deg
        if got is None:
            got = hilbert.dim_and_degree(self)
            object.__setattr__(self, "_dim_deg", got)
        return got

    def height(self) -> int:
        """dim R - dim R/I; valid because R is a catenary graded domain."""
        return self.ring.dimension - self.quotient_dim_degree()[0]
