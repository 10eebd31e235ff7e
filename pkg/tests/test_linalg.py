"""Exact linear algebra: fraction-free ranks, canonical echelon bases."""

import random
from fractions import Fraction

import pytest

from idealdep import GF, QQ
from idealdep.linalg import echelon, rank, solve_exact


def brute_rank_fraction(rows):
    """Plain Fraction Gaussian elimination, as an independent oracle."""
    rows = [[Fraction(v) for v in r] for r in rows]
    rk = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = None
        for i in range(rk, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        for i in range(rk + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] / rows[rk][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rk])]
        rk += 1
    return rk


@pytest.mark.parametrize("seed", range(12))
def test_rank_matches_fraction_oracle(seed):
    rng = random.Random(seed)
    n, m = rng.randint(1, 6), rng.randint(1, 6)
    rows = [[rng.randint(-6, 6) for _ in range(m)] for _ in range(n)]
    assert rank(rows, QQ) == brute_rank_fraction(rows)


@pytest.mark.parametrize("seed", range(6))
def test_echelon_is_canonical_for_the_row_space(seed):
    rng = random.Random(seed)
    n, m = rng.randint(2, 5), rng.randint(2, 5)
    rows = [[rng.randint(-4, 4) for _ in range(m)] for _ in range(n)]
    ech1 = echelon(rows, QQ)
    shuffled = rows[:]
    rng.shuffle(shuffled)
    # add a row that is a combination of the others: row space unchanged
    if rows:
        combo = [sum(3 * a - b for a, b in zip(col, col)) for col in zip(*rows)]
        extra = [sum(2 * r[j] for r in rows) for j in range(m)]
        shuffled.append(extra)
        del combo
    ech2 = echelon(shuffled, QQ)
    assert ech1 == ech2
    # rows are primitive with positive leads
    from math import gcd

    for row in ech1:
        nz = [v for v in row if v]
        assert nz[0] > 0
        g = 0
        for v in nz:
            g = gcd(g, v)
        assert g == 1


def test_rank_with_fractions():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3), Fraction(2)]]
    assert rank(rows, QQ) == 1


def test_mod_p_rank_and_echelon():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert rank(rows, GF(5)) == 2
    ech = echelon(rows, GF(5))
    assert ech[0][0] == 1  # unit pivots
    # 2*row0 == row1 mod 5 so the space is 2-dimensional
    assert len(ech) == 2


def test_solve_exact_unique():
    sol = solve_exact([[1, 1], [1, -1]], [3, 1])
    assert sol == [Fraction(2), Fraction(1)]


def test_solve_exact_inconsistent():
    assert solve_exact([[1, 1], [2, 2]], [1, 3]) is None


def test_solve_exact_underdetermined_rejected():
    assert solve_exact([[1, 1]], [2]) is None
