"""Exact linear algebra over the coefficient fields.

Rational matrices are cleared to integers row by row (legal for rank and
row-space questions) and handled by the kernel's fraction-free routines;
small dense solves use plain Fraction elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from idealdep import _kernel as K
from idealdep.fields import FieldSpec


def _clear_row(row) -> list:
    den = 1
    for v in row:
        if isinstance(v, Fraction):
            den = den // gcd(den, v.denominator) * v.denominator
    if den == 1:
        return [int(v) for v in row]
    return [int(v * den) for v in row]


def rank(rows, field: FieldSpec) -> int:
    if not rows:
        return 0
    if field.char:
        return K.rank_mod([[int(v) for v in r] for r in rows], field.char)
    return K.rank_int([_clear_row(r) for r in rows])


def echelon(rows, field: FieldSpec):
    """Canonical reduced echelon basis of the row space."""
    if not rows:
        return []
    if field.char:
        return K.echelon_mod([[int(v) for v in r] for r in rows], field.char)
    return K.echelon_int([_clear_row(r) for r in rows])


def solve_exact(matrix, rhs):
    """Solve M x = b exactly over the rationals; None when inconsistent.

    Requires M to have full column rank (unique solution) — callers here
    always solve square or overdetermined systems with unique answers.
    """
    m = len(matrix)
    if m == 0:
        return []
    n = len(matrix[0])
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
            return None  # inconsistent
    if len(pivots) < n:
        return None  # underdetermined: no unique solution
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = rows[i][n]
    return x
