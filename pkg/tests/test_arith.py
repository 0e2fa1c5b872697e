from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from csurg.arith import (
    INF,
    as_rational,
    format_rational,
    is_valid_ncf,
    ncf_eval,
    ncf_eval_batch,
    ncf_expand,
    ncf_expand_batch,
    ncf_is_prefix,
    parse_rational,
)
from csurg.errors import DomainError

import numpy as np


def test_expand_examples():
    assert ncf_expand(2) == [2]
    assert ncf_expand(5) == [5]
    assert ncf_expand(Fraction(12, 5)) == [3, 2, 3]


def test_eval_examples():
    assert ncf_eval([2]) == 2
    assert ncf_eval([3, 2, 3]) == Fraction(12, 5)
    assert ncf_eval([3, 2, 2, 2]) == Fraction(9, 4)


def test_prefix_examples():
    assert ncf_is_prefix([3], [3, 2, 3])
    assert not ncf_is_prefix([3, 2, 3], [3, 2])
    assert ncf_is_prefix([], [5])


def test_expand_rejects_small_and_infinite():
    with pytest.raises(DomainError):
        ncf_expand(Fraction(3, 2))
    with pytest.raises(DomainError):
        ncf_expand(INF)
    with pytest.raises(DomainError):
        ncf_eval([])


def test_infinity_ordering_and_io():
    assert INF > Fraction(10**9)
    assert parse_rational("inf") is INF
    assert parse_rational("1/0") is INF
    assert parse_rational("7") == Fraction(7)
    assert format_rational(Fraction(7, 2)) == "7/2"
    assert format_rational(INF) == "inf"
    assert parse_rational(format_rational(Fraction(-3, 4))) == Fraction(-3, 4)


def test_as_rational_rejects_bool():
    with pytest.raises(DomainError):
        as_rational(True)


rationals_ge_2 = st.builds(
    lambda q, k: Fraction(2 * q + k, q), st.integers(1, 200), st.integers(0, 48 * 200)
).filter(lambda r: r <= 50)


@given(rationals_ge_2)
def test_round_trip_and_bounds(r):
    e = ncf_expand(r)
    assert ncf_eval(e) == r
    assert is_valid_ncf(e)
    assert e[0] == -((-r.numerator) // r.denominator)
    assert len(e) <= r.denominator


@given(st.lists(st.tuples(st.integers(1, 300), st.integers(0, 3000)), min_size=1, max_size=40))
def test_batch_matches_scalar(pairs):
    p = np.array([2 * q + extra for q, extra in pairs])
    q = np.array([q for q, _ in pairs])
    flat, offsets = ncf_expand_batch(p, q)
    for k in range(len(p)):
        assert list(flat[offsets[k] : offsets[k + 1]]) == ncf_expand(Fraction(int(p[k]), int(q[k])))
    num, den = ncf_eval_batch(flat, offsets)
    for k in range(len(p)):
        assert Fraction(int(num[k]), int(den[k])) == Fraction(int(p[k]), int(q[k]))


def test_batch_rejects_small():
    with pytest.raises(DomainError):
        ncf_expand_batch([3], [2])
    with pytest.raises(DomainError):
        ncf_eval_batch([], [0, 0])
