"""Machine-checkable JSON reports and CSV density output.

Every boolean in a report is re-derivable from the integer witnesses next
to it; reports carry the canonical problem text, the recorded assumptions,
timing, and engine statistics.
"""

from __future__ import annotations

import json
from fractions import Fraction

from idealdep import __version__, cache
from idealdep import _kernel as K
from idealdep.groebner import STATS

SCHEMA_VERSION = 1

DENSITY_CSV_HEADER = "n,x_num,x_den,f_num,f_den,g_num,g_den"


def build_report(command: str, spec, result: dict, seconds: float,
                 hypotheses: dict | None = None, assumptions=()) -> dict:
    report = {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "idealdep", "version": __version__, "backend": K.BACKEND},
        "command": command,
        "problem": {"text": spec.serialize(), "sha256": spec.sha256()},
        "options": spec.options.as_dict(),
        "assumptions": list(assumptions),
        "result": result,
        "timing": {"seconds": round(seconds, 6)},
        "engine": dict(STATS.snapshot(), cache=dict(cache.stats(), enabled=cache.enabled())),
    }
    if hypotheses is not None:
        report["hypotheses"] = hypotheses
    return report


def error_report(kind: str, code: str, message: str, line: int = 0, col: int = 0) -> dict:
    err: dict = {"kind": kind, "code": code, "message": message}
    if line:
        err["line"] = line
        err["col"] = col
    return {"schema_version": SCHEMA_VERSION, "error": err}


def render(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def density_csv(samples) -> str:
    lines = [DENSITY_CSV_HEADER]
    for s in samples:
        f = Fraction(s.adic_value)
        g = Fraction(s.saturated_value)
        x = Fraction(s.x)
        lines.append(
            f"{s.level},{x.numerator},{x.denominator},"
            f"{f.numerator},{f.denominator},{g.numerator},{g.denominator}"
        )
    return "\n".join(lines) + "\n"
