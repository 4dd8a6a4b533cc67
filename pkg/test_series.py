"""
Truncated power series in the exponential convention.
"""

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from lahseries.models.errors import (
    DivisionByNonUnit, InnerConstantTerm, NotInvertible, OrderMismatch, RangeError
)
from lahseries.tools.laurent import LaurentPoly
from lahseries.tools.series import (
    Series, generic_series, is_involution, is_odd, series_compose, series_derivative,
    series_from_ordinary, series_inverse, series_mul, series_negate_argument, series_power,
    series_power_over_factorial, series_reciprocal, series_to_ordinary, series_truncate
)

ORDER = 6
rationals = st.fractions(min_value=-9, max_value=9, max_denominator=4)
nonzero = rationals.filter(bool)
any_series = st.lists(rationals, min_size=ORDER + 1, max_size=ORDER + 1).map(lambda c: Series(tuple(c)))
inner_series = st.lists(rationals, min_size=ORDER, max_size=ORDER).map(lambda c: Series((0,) + tuple(c)))
invertible_series = st.tuples(nonzero, st.lists(rationals, min_size=ORDER - 1, max_size=ORDER - 1)).map(
    lambda t: Series((0, t[0]) + tuple(t[1]))
)

EXPM1 = Series((0,) + (1,) * ORDER)


def test_from_ordinary_scales_by_factorials():
    f = Series.from_ordinary([0, 1, 1, 1], 4)
    assert f.coeffs == (0, 1, 2, 6, 0)
    assert series_to_ordinary(f) == [0, 1, 1, 1, 0]
    assert series_from_ordinary([1, 1, Fraction(1, 2)], 2).coeffs == (1, 1, 1)


def test_binary_operations_need_equal_orders():
    with pytest.raises(OrderMismatch):
        Series((0, 1)) + Series((0, 1, 0))
    with pytest.raises(OrderMismatch):
        series_compose(Series((0, 1)), Series((0, 1, 0)))


def test_compose_rejects_inner_constant():
    with pytest.raises(InnerConstantTerm):
        series_compose(EXPM1, Series.constant(1, ORDER))


def test_inverse_requires_invertible():
    with pytest.raises(NotInvertible):
        series_inverse(Series((1, 1, 0)))
    with pytest.raises(NotInvertible):
        series_inverse(Series((0, 0, 1)))


def test_inverse_of_expm1_is_log1p():
    log1p = series_inverse(EXPM1)
    assert log1p.coeffs == tuple([0] + [(-1) ** (n - 1) * factorial(n - 1) for n in range(1, ORDER + 1)])


def test_generic_inverse_gives_first_stirling_column():
    inverse = series_inverse(generic_series(3))
    x1, x2, x3 = (LaurentPoly.variable(j) for j in (1, 2, 3))
    assert inverse[1] == x1 ** -1
    assert inverse[2] == -x2 * x1 ** -3
    assert inverse[3] == 3 * x2 ** 2 * x1 ** -5 - x3 * x1 ** -4


def test_symbolic_inverse_needs_monomial_leading_coefficient():
    x1, x2 = LaurentPoly.variable(1), LaurentPoly.variable(2)
    with pytest.raises(NotInvertible):
        series_inverse(Series((0, x1 + x2, 0)))


def test_negate_argument():
    f = Series((1, 2, 3, 4))
    assert series_negate_argument(f).coeffs == (1, -2, 3, -4)


def test_involution_and_oddness():
    assert is_involution(Series.negative_identity(ORDER))
    assert not is_involution(EXPM1)
    assert is_odd(Series.identity(ORDER))
    assert not is_odd(EXPM1)
    with pytest.raises(NotInvertible):
        is_involution(Series.constant(1, ORDER))


def test_derivative_and_truncate():
    f = Series((5, 1, 2, 3))
    assert series_derivative(f).coeffs == (1, 2, 3)
    assert series_truncate(f, 1).coeffs == (5, 1)
    with pytest.raises(OrderMismatch):
        series_derivative(Series((1,)))
    with pytest.raises(OrderMismatch):
        series_truncate(f, 4)


def test_reciprocal_of_one_plus_x():
    f = Series.from_ordinary([1, 1], ORDER)
    assert series_reciprocal(f).coeffs == tuple((-1) ** n * factorial(n) for n in range(ORDER + 1))
    with pytest.raises(DivisionByNonUnit):
        series_reciprocal(Series.identity(ORDER))


def test_power():
    f = Series.from_ordinary([1, 1], 3)
    assert series_to_ordinary(series_power(f, 3)) == [1, 3, 3, 1]
    with pytest.raises(RangeError):
        series_power(f, -1)
    with pytest.raises(RangeError):
        series_power_over_factorial(Series.identity(3), -1)


@given(invertible_series)
def test_inverse_round_trip(f):
    identity = Series.identity(ORDER)
    inverse = series_inverse(f)
    assert series_compose(f, inverse) == identity
    assert series_compose(inverse, f) == identity


@given(any_series, inner_series, inner_series)
def test_composition_associates(f, g, h):
    assert series_compose(series_compose(f, g), h) == series_compose(f, series_compose(g, h))


@given(any_series, any_series)
def test_leibniz_rule(f, g):
    lhs = series_derivative(series_mul(f, g))
    rhs = (series_mul(series_derivative(f), series_truncate(g, ORDER - 1))
           + series_mul(series_truncate(f, ORDER - 1), series_derivative(g)))
    assert lhs == rhs


@given(any_series, inner_series)
def test_negate_argument_is_a_composition_homomorphism(f, g):
    assert series_negate_argument(series_negate_argument(f)) == f
    assert series_negate_argument(series_compose(f, g)) == series_compose(f, series_negate_argument(g))


@given(any_series.filter(lambda f: f[0] != 0))
def test_reciprocal_round_trip(f):
    assert series_mul(f, series_reciprocal(f)) == Series.constant(1, ORDER)
