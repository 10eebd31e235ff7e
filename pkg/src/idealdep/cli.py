"""Command-line interface.

Subcommands:
    check     full closure-equality decision (base ring and extension)
    colength  finite-colength test only (base ring)
    ra-mult   Rees multiplicities of one ideal
    mixed     mixed-multiplicity tables in R and S, index by index
    density   CSV of exact finite-level density samples over an x grid
    oracle    cross-check fiber-cone piece sizes against direct lengths

Exit codes: 0 = computed (whatever the verdict), 2 = hypothesis violation,
3 = parse error, 1 = other errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from pathlib import Path

from idealdep import cache, checker, hilbert, report
from idealdep import multiplicity as mult
from idealdep.errors import HypothesisError, IdealDepError, ParseError
from idealdep.groebner import STATS
from idealdep.problem import ProblemSpec, parse_problem


def _add_common(p: argparse.ArgumentParser, pair: bool):
    p.add_argument("file", help="problem file")
    p.add_argument("--c", type=int, default=None,
                   help="diagonal slope override (must exceed the generating degrees)")
    p.add_argument("--assert-domain", action="store_true",
                   help="record the assumption that the quotient ring is a domain")
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--cache-dir", default=None, help="cache directory")
    p.add_argument("--no-cache", action="store_true", help="disable the result cache")
    p.add_argument("--json", dest="json_path", default=None,
                   help="also write the JSON report to this path")
    if not pair:
        p.add_argument("--ideal", choices=("I", "J"), default="I")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="idealdep")
    sub = ap.add_subparsers(dest="command", required=True)

    _add_common(sub.add_parser("check", help="decide equality of integral closures"), True)
    _add_common(sub.add_parser("colength", help="decide finite colength of the closures"), True)
    _add_common(sub.add_parser("ra-mult", help="Rees multiplicities of one ideal"), False)
    _add_common(sub.add_parser("mixed", help="mixed-multiplicity tables"), True)

    pd = sub.add_parser("density", help="finite-level density samples as CSV")
    _add_common(pd, False)
    pd.add_argument("--n", type=int, required=True, help="power level n")
    pd.add_argument("--x-from", type=Fraction, required=True)
    pd.add_argument("--x-to", type=Fraction, required=True)
    pd.add_argument("--x-step", type=Fraction, required=True)
    pd.add_argument("--csv", dest="csv_path", default=None,
                    help="write the CSV here instead of stdout")

    po = sub.add_parser("oracle", help="re-verify diagonal degrees against direct lengths")
    _add_common(po, False)
    po.add_argument("--n-max", type=int, default=4)

    return ap


def _configure_cache(args):
    if args.no_cache:
        cache.configure(None)
        return
    directory = args.cache_dir
    if directory is None:
        directory = Path.home() / ".cache" / "idealdep"
    cache.configure(directory)


def _load(args) -> ProblemSpec:
    text = Path(args.file).read_text(encoding="utf-8")
    spec = parse_problem(text)
    if args.assert_domain:
        spec.options.assert_domain = True
    if args.c is not None:
        spec.options.c = args.c
    return spec


def _emit(args, rep: dict, to_stdout=True):
    text = report.render(rep)
    if to_stdout:
        print(text)
    if args.json_path:
        Path(args.json_path).write_text(text + "\n", encoding="utf-8")


def _pair(spec: ProblemSpec):
    return spec.ideal("I"), spec.ideal("J")


def _run_check(args, spec: ProblemSpec) -> dict:
    inner, outer = _pair(spec)
    hyp = checker.validate_hypotheses(inner, outer, spec.options.assert_domain)
    verdict = checker.check_integral_closure(
        inner, outer, spec.options.c, spec.options.assert_domain
    )
    result = {"verdict": verdict.as_dict()}
    if spec.options.oracle:
        result["oracle"] = {
            "I": _oracle_rows(inner, verdict.c_used, 4),
            "J": _oracle_rows(outer, verdict.c_used, 4),
        }
    return {"result": result, "hypotheses": hyp.as_dict(), "assumptions": verdict.assumptions}


def _run_colength(args, spec: ProblemSpec) -> dict:
    inner, outer = _pair(spec)
    hyp = checker.validate_hypotheses(inner, outer, spec.options.assert_domain)
    verdict = checker.check_finite_colength(
        inner, outer, spec.options.c, spec.options.assert_domain
    )
    return {
        "result": {"verdict": verdict.as_dict()},
        "hypotheses": hyp.as_dict(),
        "assumptions": verdict.assumptions,
    }


def _run_ra_mult(args, spec: ProblemSpec) -> dict:
    ideal = spec.ideal(args.ideal)
    assumptions = checker.domain_assumptions(ideal.ring, spec.options.assert_domain)
    rees = mult.rees_multiplicities(ideal)
    d_i = ideal.max_gen_degree()
    slopes = list(range(d_i + 1, d_i + ideal.ring.dimension + 1))
    witnesses = [mult.diagonal_degree(ideal, c).value for c in slopes]
    return {
        "result": {
            "ideal": args.ideal,
            "values": list(rees.values),
            "sample_slopes": slopes,
            "sample_degrees": witnesses,
            "ring_multiplicity": ideal.ring.multiplicity,
        },
        "assumptions": assumptions,
    }


def _run_mixed(args, spec: ProblemSpec) -> dict:
    inner, outer = _pair(spec)
    hyp = checker.validate_hypotheses(inner, outer, spec.options.assert_domain)
    rep = checker.mixed_report(inner, outer, spec.options.assert_domain)
    return {
        "result": {"mixed": rep.as_dict()},
        "hypotheses": hyp.as_dict(),
        "assumptions": rep.assumptions,
    }


def _run_density(args, spec: ProblemSpec) -> dict:
    ideal = spec.ideal(args.ideal)
    if args.n < 1:
        raise IdealDepError("--n must be >= 1")
    if args.x_step <= 0:
        raise IdealDepError("--x-step must be positive")
    samples = []
    x = args.x_from
    while x <= args.x_to:
        samples.append(mult.density_sample(ideal, args.n, x))
        x += args.x_step
    csv_text = report.density_csv(samples)
    if args.csv_path:
        Path(args.csv_path).write_text(csv_text, encoding="utf-8")
    else:
        sys.stdout.write(csv_text)
    rows = [
        {
            "n": s.level,
            "x": [s.x.numerator, s.x.denominator],
            "f": [s.adic_value.numerator, s.adic_value.denominator],
            "g": [s.saturated_value.numerator, s.saturated_value.denominator],
        }
        for s in samples
    ]
    return {"result": {"ideal": args.ideal, "rows": rows}, "suppress_stdout": True}


def _oracle_rows(ideal, slope, n_max):
    series = mult.fiber_cone_series(ideal, slope)
    rows = []
    for n in range(1, n_max + 1):
        fiber_len = series.coefficient(n)
        direct = hilbert.graded_piece_length(ideal, n, slope * n)
        rows.append(
            {"n": n, "fiber_length": fiber_len, "direct_length": direct,
             "equal": fiber_len == direct}
        )
    return rows


def _run_oracle(args, spec: ProblemSpec) -> dict:
    ideal = spec.ideal(args.ideal)
    slope = spec.options.c if spec.options.c is not None else ideal.max_gen_degree() + 1
    if slope <= ideal.max_gen_degree():
        raise IdealDepError(f"slope {slope} must exceed the maximal generating degree")
    rows = _oracle_rows(ideal, slope, args.n_max)
    return {
        "result": {
            "ideal": args.ideal,
            "slope": slope,
            "levels": rows,
            "all_equal": all(r["equal"] for r in rows),
        }
    }


_RUNNERS = {
    "check": _run_check,
    "colength": _run_colength,
    "ra-mult": _run_ra_mult,
    "mixed": _run_mixed,
    "density": _run_density,
    "oracle": _run_oracle,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _configure_cache(args)
    STATS.reset()
    started = time.monotonic()
    try:
        spec = _load(args)
        payload = _RUNNERS[args.command](args, spec)
    except ParseError as exc:
        rep = report.error_report("parse", "parse", str(exc),
                                  getattr(exc, "line", 0), getattr(exc, "col", 0))
        print(report.render(rep), file=sys.stderr)
        return 3
    except HypothesisError as exc:
        rep = report.error_report("hypothesis", exc.code, str(exc))
        print(report.render(rep), file=sys.stderr)
        return 2
    except IdealDepError as exc:
        rep = report.error_report("error", "error", str(exc))
        print(report.render(rep), file=sys.stderr)
        return 1
    seconds = time.monotonic() - started
    rep = report.build_report(
        args.command,
        spec,
        payload["result"],
        seconds,
        hypotheses=payload.get("hypotheses"),
        assumptions=payload.get("assumptions", ()),
    )
    _emit(args, rep, to_stdout=not payload.get("suppress_stdout"))
    if args.verbose:
        print(f"done in {seconds:.3f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
