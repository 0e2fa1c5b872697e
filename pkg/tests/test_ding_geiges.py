from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from csurg.arith import ncf_eval
from csurg.ding_geiges import (
    DgPresentation,
    Explicit,
    bracket,
    dg_expand,
    dg_prefix_check,
    dg_total_stabilizations,
    push_off_count,
    reconstruct,
)
from csurg.errors import DomainError
from csurg.legendrian import MINUS, PLUS


def test_expand_examples():
    d = dg_expand(5)
    assert (d.k, d.chain) == (1, (1, 0, 0, 0))
    d = dg_expand(Fraction(1, 3))
    assert (d.k, d.chain) == (3, ())
    d = dg_expand(Fraction(7, 2))
    assert (d.k, d.chain) == (1, (1, 0, 1))
    assert d.signs == ((MINUS,), (), (MINUS,))


def test_expand_errors():
    for bad in (0, -1, "inf"):
        with pytest.raises(DomainError):
            dg_expand(bad)
    with pytest.raises(DomainError):
        dg_expand(Fraction(7, 2), Explicit([["-"], []]))


def test_explicit_plan_and_first_sign():
    d = dg_expand(Fraction(7, 2), Explicit([["+"], [], ["-"]]))
    assert d.first_sign() == PLUS and not d.all_negative()
    assert dg_expand(Fraction(1, 2)).first_sign() is None


def test_total_stabilisations():
    assert dg_total_stabilizations(dg_expand(Fraction(7, 2))) == 2
    assert all(dg_total_stabilizations(dg_expand(n)) == 1 for n in range(2, 10))
    assert dg_total_stabilizations(dg_expand(Fraction(1, 4))) == 0


def test_prefix_examples():
    assert dg_prefix_check(3, 2, Fraction(7, 2))
    assert dg_prefix_check(1, 3, Fraction(29, 21))
    assert dg_prefix_check(0, 2, Fraction(5, 9))
    with pytest.raises(DomainError):
        dg_prefix_check(1, 3, Fraction(2))


def test_bracket_infinite_top():
    lo, hi = bracket(2, 1)
    assert lo == 3 and hi > 10**9


def test_json_round_trip():
    d = dg_expand(Fraction(17, 5), Explicit([["+"], [], ["-", "+"], []]))
    assert d.chain == (1, 0, 2, 0)
    assert DgPresentation.from_json(d.to_json()) == d


positive = st.builds(Fraction, st.integers(1, 400), st.integers(1, 60))


@given(positive)
def test_minimal_k_and_reconstruction(pq):
    d = dg_expand(pq)
    p, q = pq.numerator, pq.denominator
    assert q - d.k * p <= 0 and (d.k == 1 or q - (d.k - 1) * p > 0)
    assert d.k == push_off_count(pq)
    if d.chain:
        assert reconstruct(d) == 1 + Fraction(p, d.k * p - q)
        assert ncf_eval(d.ncf()) == reconstruct(d)
    assert [len(r) for r in d.signs] == list(d.chain)
