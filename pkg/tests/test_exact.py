from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rrclosure.core.errors import DimensionMismatchError, UsageError
from rrclosure.core.exact import (
    LexVector,
    Ordering,
    format_rational,
    lex_compare,
    rational,
    vec_add,
    vec_scale,
    vec_sub,
)

from .strategies import rationals


def vectors(k):
    return st.lists(rationals(), min_size=k, max_size=k).map(LexVector.of)


def test_first_coordinate_decides():
    assert lex_compare(LexVector.of([1, -5]), LexVector.of([0, 100])) is Ordering.GT


def test_equal_vectors():
    assert lex_compare(LexVector.of([0, 0]), LexVector.zero(2)) is Ordering.EQ


def test_tie_broken_at_second_index():
    assert lex_compare(LexVector.of(["1/2", 0]), LexVector.of(["1/2", -3])) is Ordering.GT


def test_length_mismatch_is_a_usage_error():
    with pytest.raises(DimensionMismatchError):
        lex_compare(LexVector.of([1]), LexVector.of([1, 2]))
    with pytest.raises(UsageError):
        vec_add(LexVector.of([1]), LexVector.of([1, 2]))


def test_rationals_are_reduced():
    q = rational("-6/4")
    assert (q.numerator, q.denominator) == (-3, 2)
    assert format_rational(q) == "-3/2"
    assert format_rational(Fraction(4, 2)) == "2"


@pytest.mark.parametrize("bad", [0.5, "1/0", "abc"])
def test_rejects_non_rationals(bad):
    with pytest.raises(UsageError):
        rational(bad)


def test_scale_needs_an_integer():
    with pytest.raises(UsageError):
        vec_scale(LexVector.of([1]), Fraction(1, 2))
    assert vec_scale(LexVector.of(["1/2", 3]), 4) == LexVector.of([2, 12])


@given(vectors(2), vectors(2), vectors(2))
def test_order_is_total_and_transitive(a, b, c):
    assert (a <= b) or (b <= a)
    if a <= b and b <= c:
        assert a <= c


@given(vectors(3), vectors(3), vectors(3))
def test_addition_preserves_order(a, b, c):
    if a < b:
        assert a + c < b + c


@given(vectors(2), vectors(2))
def test_sub_inverts_add(a, b):
    assert vec_sub(vec_add(a, b), b) == a
