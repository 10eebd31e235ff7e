"""Decision procedures for integral dependence of graded ideals.

For a validated pair I ⊆ J in a graded domain R (dim d >= 2, heights
strictly between 0 and d):

* finite colength of the integral closures  <=>  equal diagonal degrees
  at one slope c above both maximal generating degrees;
* equality of the integral closures  <=>  equal diagonal degrees in R
  *and* in the one-variable extension S = R[Y] at the same slope;
* for equigenerated pairs, equality of generating degrees plus equality of
  the Rees multiplicities below dim(R/I) decides closure equality without
  touching S;
* the full mixed-multiplicity tables in R and S decide the same question,
  index by index, with the out-of-range indices forced equal a priori.

The slope defaults to (shared maximal generating degree) + 1; any larger
slope gives the same verdicts, which the tests exercise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from idealdep import multiplicity as mult
from idealdep.errors import (
    ContainmentFailed,
    DomainAssertionMissing,
    HeightOutOfRange,
    NotEquigenerated,
    RingDimensionTooSmall,
    ZeroIdealGiven,
)
from idealdep.rings import GradedIdeal


@dataclass(frozen=True)
class HypothesisReport:
    dim_ring: int
    height_inner: int
    height_outer: int
    deg_inner: int
    deg_outer: int
    shared_degree: int
    containment_ok: bool
    assumptions: tuple

    def as_dict(self) -> dict:
        return {
            "dim_ring": self.dim_ring,
            "height_inner": self.height_inner,
            "height_outer": self.height_outer,
            "max_gen_degree_inner": self.deg_inner,
            "max_gen_degree_outer": self.deg_outer,
            "shared_degree_bound": self.shared_degree,
            "containment_ok": self.containment_ok,
            "assumptions": list(self.assumptions),
        }


@dataclass(frozen=True)
class Verdict:
    finite_colength: bool
    closures_equal: bool | None
    witnesses: dict
    c_used: int
    criteria: tuple
    assumptions: tuple

    def as_dict(self) -> dict:
        return {
            "finite_colength": self.finite_colength,
            "closures_equal": self.closures_equal,
            "witnesses": dict(self.witnesses),
            "c_used": self.c_used,
            "criteria": list(self.criteria),
            "assumptions": list(self.assumptions),
        }


@dataclass(frozen=True)
class IndexComparison:
    index: int
    inner_value: int
    outer_value: int
    equal: bool
    forced_equal: bool


@dataclass(frozen=True)
class MixedReport:
    beta: int
    base_table: tuple
    extended_table: tuple
    overall_equal: bool
    assumptions: tuple

    def as_dict(self) -> dict:
        def row(c: IndexComparison) -> dict:
            return {
                "index": c.index,
                "inner": c.inner_value,
                "outer": c.outer_value,
                "equal": c.equal,
                "forced_equal": c.forced_equal,
            }

        return {
            "beta": self.beta,
            "base_ring_table": [row(c) for c in self.base_table],
            "extended_ring_table": [row(c) for c in self.extended_table],
            "overall_equal": self.overall_equal,
            "assumptions": list(self.assumptions),
        }


def domain_assumptions(ring, assume_domain: bool) -> tuple:
    if ring.is_free():
        return ("free polynomial ring over a field: an integral domain automatically",)
    if not assume_domain:
        raise DomainAssertionMissing(
            "the quotient ring must be a domain for the verdicts to be valid; "
            "pass assert-domain to record that assumption"
        )
    return ("quotient ring asserted to be an integral domain by the caller (unverified)",)


def validate_hypotheses(
    inner: GradedIdeal, outer: GradedIdeal, assume_domain: bool = False
) -> HypothesisReport:
    """Check dim >= 2, 0 < height(inner) <= height(outer) < dim, and
    inner ⊆ outer.  Each violated bound raises its own error type; a
    violation is never reported as a false verdict."""
    if inner.ring != outer.ring:
        raise ValueError("the two ideals live in different rings")
    ring = inner.ring
    assumptions = domain_assumptions(ring, assume_domain)
    d = ring.dimension
    if d < 2:
        raise RingDimensionTooSmall(f"ring dimension {d} < 2")
    if inner.is_zero():
        raise ZeroIdealGiven("the inner ideal is zero")
    if outer.is_zero():
        raise ZeroIdealGiven("the outer ideal is zero")
    h_inner = inner.height()
    h_outer = outer.height()
    if not 0 < h_inner:
        raise HeightOutOfRange(f"height of the inner ideal is {h_inner}, need > 0")
    if not h_outer < d:
        raise HeightOutOfRange(f"height of the outer ideal is {h_outer}, need < dim = {d}")
    if not h_inner <= h_outer:
        raise HeightOutOfRange(
            f"height {h_inner} of the inner ideal exceeds height {h_outer} of the outer"
        )
    if not outer.contains_ideal(inner):
        raise ContainmentFailed("the inner ideal is not contained in the outer ideal")
    return HypothesisReport(
        dim_ring=d,
        height_inner=h_inner,
        height_outer=h_outer,
        deg_inner=inner.max_gen_degree(),
        deg_outer=outer.max_gen_degree(),
        shared_degree=max(inner.max_gen_degree(), outer.max_gen_degree()),
        containment_ok=True,
        assumptions=assumptions,
    )


def _pick_slope(report: HypothesisReport, c: int | None) -> int:
    if c is None:
        return report.shared_degree + 1
    if c <= report.shared_degree:
        raise ValueError(
            f"slope override {c} must exceed the shared generating degree {report.shared_degree}"
        )
    return c


def check_finite_colength(
    inner: GradedIdeal, outer: GradedIdeal, c: int | None = None, assume_domain: bool = False
) -> Verdict:
    """Finite colength of the closures <=> equal diagonal degrees at c."""
    report = validate_hypotheses(inner, outer, assume_domain)
    slope = _pick_slope(report, c)
    deg_inner = mult.diagonal_degree(inner, slope).value
    deg_outer = mult.diagonal_degree(outer, slope).value
    return Verdict(
        finite_colength=(deg_inner == deg_outer),
        closures_equal=None,
        witnesses={"inner_degree": deg_inner, "outer_degree": deg_outer},
        c_used=slope,
        criteria=("diagonal-degree-equality",),
        assumptions=report.assumptions,
    )


def check_integral_closure(
    inner: GradedIdeal, outer: GradedIdeal, c: int | None = None, assume_domain: bool = False
) -> Verdict:
    """Closure equality <=> diagonal degrees agree in R and in S = R[Y]."""
    report = validate_hypotheses(inner, outer, assume_domain)
    slope = _pick_slope(report, c)
    deg_inner = mult.diagonal_degree(inner, slope).value
    deg_outer = mult.diagonal_degree(outer, slope).value
    ext = mult.extend_with_variable(inner.ring)
    deg_inner_ext = mult.diagonal_degree(ext.extend_ideal(inner), slope).value
    deg_outer_ext = mult.diagonal_degree(ext.extend_ideal(outer), slope).value
    base_equal = deg_inner == deg_outer
    ext_equal = deg_inner_ext == deg_outer_ext
    assumptions = report.assumptions
    if ext.renamed:
        assumptions = assumptions + (
            f"extension variable renamed to {ext.variable} to avoid a collision",
        )
    return Verdict(
        finite_colength=base_equal,
        closures_equal=base_equal and ext_equal,
        witnesses={
            "inner_degree": deg_inner,
            "outer_degree": deg_outer,
            "inner_degree_extended": deg_inner_ext,
            "outer_degree_extended": deg_outer_ext,
        },
        c_used=slope,
        criteria=("diagonal-degree-equality", "extended-diagonal-degree-equality"),
        assumptions=assumptions,
    )


def check_equigenerated(
    inner: GradedIdeal, outer: GradedIdeal, assume_domain: bool = False
) -> Verdict:
    """Fast path for equigenerated pairs: closures are equal iff the
    generating degrees agree and the Rees multiplicities agree below
    dim(R/inner).  Avoids the ring extension entirely."""
    report = validate_hypotheses(inner, outer, assume_domain)
    if not inner.is_equigenerated() or not outer.is_equigenerated():
        raise NotEquigenerated(
            "both ideals must be generated in a single degree; use the full closure check"
        )
    deg_equal = report.deg_inner == report.deg_outer
    rees_inner = mult.rees_multiplicities(inner)
    rees_outer = mult.rees_multiplicities(outer)
    i0 = inner.quotient_dim_degree()[0]
    compared = list(range(i0))
    rees_equal = all(rees_inner[i] == rees_outer[i] for i in compared)
    finite = rees_equal
    return Verdict(
        finite_colength=finite,
        closures_equal=deg_equal and rees_equal,
        witnesses={
            "deg_inner": report.deg_inner,
            "deg_outer": report.deg_outer,
            "rees_inner": list(rees_inner.values),
            "rees_outer": list(rees_outer.values),
            "compared_indices": compared,
        },
        c_used=report.shared_degree + 1,
        criteria=("equigenerated-degree-equality", "rees-multiplicity-equality"),
        assumptions=report.assumptions,
    )


def mixed_report(
    inner: GradedIdeal, outer: GradedIdeal, assume_domain: bool = False
) -> MixedReport:
    """Index-by-index mixed-multiplicity comparison at beta = shared degree,
    over the full index ranges in R and S; indices outside the decisive
    ranges are flagged forced-equal (both sides are beta^j e(R) there).

    The overall verdict agrees with `check_integral_closure` by the theory;
    the test suite asserts that coherence on the whole corpus.
    """
    report = validate_hypotheses(inner, outer, assume_domain)
    beta = report.shared_degree
    d = report.dim_ring
    i0 = inner.quotient_dim_degree()[0]

    mixed_inner = mult.mixed_multiplicities(inner, beta)
    mixed_outer = mult.mixed_multiplicities(outer, beta)
    base_rows = []
    for i in range(d):
        sharp = 0 < d - i <= i0
        base_rows.append(
            IndexComparison(
                index=i,
                inner_value=mixed_inner[i],
                outer_value=mixed_outer[i],
                equal=mixed_inner[i] == mixed_outer[i],
                forced_equal=not sharp,
            )
        )

    ext = mult.extend_with_variable(inner.ring)
    mixed_inner_ext = mult.mixed_multiplicities(ext.extend_ideal(inner), beta)
    mixed_outer_ext = mult.mixed_multiplicities(ext.extend_ideal(outer), beta)
    ext_rows = []
    for j in range(d + 1):
        sharp = 0 <= d - j <= i0
        ext_rows.append(
            IndexComparison(
                index=j,
                inner_value=mixed_inner_ext[j],
                outer_value=mixed_outer_ext[j],
                equal=mixed_inner_ext[j] == mixed_outer_ext[j],
                forced_equal=not sharp,
            )
        )

    overall = all(r.equal for r in base_rows) and all(r.equal for r in ext_rows)
    assumptions = report.assumptions
    if ext.renamed:
        assumptions = assumptions + (
            f"extension variable renamed to {ext.variable} to avoid a collision",
        )
    return MixedReport(
        beta=beta,
        base_table=tuple(base_rows),
        extended_table=tuple(ext_rows),
        overall_equal=overall,
        assumptions=assumptions,
    )
