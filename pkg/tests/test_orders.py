"""Monomial order semantics, checked against brute-force comparators."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from idealdep.orders import GREVLEX, LEX, MonomialOrder, block_order

monos3 = st.tuples(*([st.integers(min_value=0, max_value=4)] * 3))


def brute_block_key(m, elim):
    """Sort key straight from the definition: lex on the first block, then
    grevlex (degree, then reversed-negated exponents) on the rest."""
    head, tail = m[:elim], m[elim:]
    return tuple(head) + (sum(tail),) + tuple(-e for e in reversed(tail))


def test_grevlex_examples():
    # degree tie broken toward the earlier variable block: x^2 > xy
    assert GREVLEX.compare((2, 0), (1, 1)) == 1
    assert GREVLEX.compare((1, 1), (2, 0)) == -1
    assert GREVLEX.compare((3, 1), (3, 1)) == 0


def test_block_elimination_example():
    # x vs y^3 with x in the eliminated block: x wins
    ord_ = block_order(1)
    assert ord_.compare((1, 0), (0, 3)) == 1
    assert ord_.compare((0, 3), (1, 0)) == -1


def test_block_order_against_brute_force_sort():
    # sort all monomials of degree <= 3 in two variables both ways
    all_monos = [
        (a, b) for a in range(4) for b in range(4) if a + b <= 3
    ]
    ord_ = block_order(1)
    by_compare = sorted(all_monos, key=ord_.key_asc())
    by_brute = sorted(all_monos, key=lambda m: brute_block_key(m, 1))
    assert by_compare == by_brute
    # and pairwise comparison agrees with the brute key
    for a, b in itertools.product(all_monos, repeat=2):
        c = ord_.compare(a, b)
        ka, kb = brute_block_key(a, 1), brute_block_key(b, 1)
        assert c == (ka > kb) - (ka < kb)


@given(monos3, monos3)
def test_compare_antisymmetry(a, b):
    for ord_ in (GREVLEX, LEX, block_order(1), block_order(2)):
        assert ord_.compare(a, b) == -ord_.compare(b, a)
        assert (ord_.compare(a, b) == 0) == (a == b)


@given(monos3, monos3)
def test_grevlex_refines_degree(a, b):
    if sum(a) > sum(b):
        assert GREVLEX.compare(a, b) == 1


@given(monos3, monos3, monos3)
def test_orders_are_multiplicative(a, b, c):
    from idealdep import _kernel as K

    for ord_ in (GREVLEX, LEX, block_order(1)):
        ac = K.mono_mul(a, c)
        bc = K.mono_mul(b, c)
        assert ord_.compare(a, b) == ord_.compare(ac, bc)


@given(monos3, monos3)
def test_keys_consistent_with_compare(a, b):
    for ord_ in (GREVLEX, LEX, block_order(2)):
        cmp = ord_.compare(a, b)
        ka, kb = ord_.key_asc()(a), ord_.key_asc()(b)
        assert cmp == (ka > kb) - (ka < kb)
        da, db = ord_.key_desc()(a), ord_.key_desc()(b)
        assert cmp == (da < db) - (da > db)


def test_bad_order_kind_rejected():
    with pytest.raises(ValueError):
        MonomialOrder("degrevlex")
