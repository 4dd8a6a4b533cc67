"""
Multivariate Stirling polynomials of the first kind and Lah polynomials.
"""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from lahseries.models.data_models import CheckMode
from lahseries.models.errors import RangeError, ZeroAtPole
from lahseries.tools.bell import bell_eval
from lahseries.tools.laurent import LaurentPoly
from lahseries.tools.number_triangles import (
    signed_lah_number, signed_stirling1_number, stirling2_number
)
from lahseries.tools.series import Series, series_compose, series_inverse
from lahseries.tools.stirling_lah import (
    check_inversion_of_sequences, check_lah_bell_representability, check_lah_lemma,
    check_lah_selfinverse, check_ortho_inversion, evaluate_families, lah_eval,
    lah_parity_support_check, lah_poly, stirling_first_eval, stirling_first_poly,
    stirling_first_via_inverse
)

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=4)
points = st.tuples(rationals.filter(bool), st.lists(rationals, min_size=7, max_size=7)).map(
    lambda t: [t[0]] + t[1]
)


def poly(*terms):
    return LaurentPoly(terms)


# Published first column of the Lah triangle
LAH_FIRST_COLUMN = {
    1: poly(((), -1)),
    2: poly(((-2, 1), 2)),
    3: poly(((-4, 2), -6)),
    4: poly(((-6, 3), 30), ((-5, 1, 1), -8), ((-4, 0, 0, 1), 2)),
    5: poly(((-8, 4), -210), ((-7, 2, 1), 120), ((-6, 1, 0, 1), -30)),
    6: poly(((-10, 5), 1890), ((-9, 3, 1), -1680), ((-8, 2, 0, 1), 420), ((-8, 1, 2), 140),
            ((-7, 1, 0, 0, 1), -12), ((-6, 0, 0, 0, 0, 1), 2), ((-7, 0, 1, 1), -40)),
}


def test_stirling_first_small_cases():
    assert stirling_first_poly(1, 1) == LaurentPoly.variable(1, -1)
    assert str(stirling_first_poly(2, 1)) == "-X_1^-3*X_2"
    for n in range(1, 7):
        assert stirling_first_poly(n, n) == LaurentPoly.variable(1, -n)


def test_stirling_first_range():
    with pytest.raises(RangeError):
        stirling_first_poly(3, 4)
    with pytest.raises(RangeError):
        lah_poly(2, 0)


@pytest.mark.parametrize("n", range(1, 11))
def test_two_constructions_of_stirling_first_agree(n):
    for k in range(1, n + 1):
        assert stirling_first_poly(n, k) == stirling_first_via_inverse(n, k)


@pytest.mark.parametrize("n", sorted(LAH_FIRST_COLUMN))
def test_lah_first_column(n):
    assert lah_poly(n, 1) == LAH_FIRST_COLUMN[n]


def test_lah_first_column_rendering():
    assert str(lah_poly(4, 1)) == "30*X_1^-6*X_2^3 - 8*X_1^-5*X_2*X_3 + 2*X_1^-4*X_4"


def test_lah_diagonal():
    for n in range(1, 7):
        assert lah_poly(n, n) == (-1) ** n


@pytest.mark.parametrize("n", range(1, 9))
def test_parity_support(n):
    assert lah_parity_support_check(n)


def test_parity_support_range():
    with pytest.raises(RangeError):
        lah_parity_support_check(0)


def test_lah_eval_at_pole():
    with pytest.raises(ZeroAtPole):
        lah_eval(3, 1, [0, 1, 1])
    with pytest.raises(ZeroAtPole):
        lah_eval(1, 1, [])


def test_inversion_of_sequences_first_order():
    assert lah_poly(1, 1) * LaurentPoly.variable(1) == -LaurentPoly.variable(1)


@pytest.mark.parametrize("check", [
    check_ortho_inversion, check_lah_selfinverse, check_lah_bell_representability,
    check_lah_lemma, check_inversion_of_sequences,
])
def test_identity_checks_hold_symbolically(check):
    report = check(6)
    assert report.mode is CheckMode.SYMBOLIC
    assert report.checked > 0
    assert report.passed, report.failures


@pytest.mark.parametrize("check", [
    check_ortho_inversion, check_lah_selfinverse, check_lah_bell_representability,
    check_lah_lemma, check_inversion_of_sequences,
])
def test_identity_checks_hold_numerically(check):
    pts = [[Fraction(2), Fraction(-1, 3)] + [Fraction(j, 4) for j in range(8)],
           [Fraction(-3, 2)] + [Fraction(1)] * 9]
    report = check(10, pts)
    assert report.mode is CheckMode.NUMERIC
    assert report.passed, report.failures


def test_corrupted_lah_polynomial_is_caught(monkeypatch):
    import lahseries.tools.stirling_lah as stirling_lah
    original = stirling_lah.lah_poly

    def corrupted(n, k):
        value = original(n, k)
        return value + LaurentPoly.variable(2) if (n, k) == (3, 1) else value

    monkeypatch.setattr(stirling_lah, "lah_poly", corrupted)
    report = check_lah_selfinverse(4)
    assert not report.passed
    assert any(f.n >= 3 for f in report.failures)


@given(points)
def test_streamed_values_match_tables(point):
    values = evaluate_families(point, 6)
    for n in range(1, 7):
        for k in range(1, n + 1):
            assert values.a[(n, k)] == stirling_first_eval(n, k, point)
            assert values.l[(n, k)] == lah_eval(n, k, point)


@given(points, st.lists(rationals, min_size=7, max_size=7))
def test_dual_composition(point, f_coeffs):
    order = 6
    g = Series((0,) + tuple(point[:order]))
    f = Series(tuple(f_coeffs))
    composed = series_compose(f, series_inverse(g))
    for n in range(1, order + 1):
        assert composed[n] == sum(f[k] * stirling_first_eval(n, k, point) for k in range(1, n + 1))


@given(points)
def test_negated_inverse_coefficients(point):
    order = 6
    g = Series((0,) + tuple(point[:order]))
    reflected = series_compose(Series.negative_identity(order), series_inverse(g))
    for n in range(1, order + 1):
        assert reflected[n] == -stirling_first_eval(n, 1, point)


@given(points)
def test_lah_first_column_represents_conjugate(point):
    # L_{n,1}(g) is coefficient n of g o (-id) o inverse(g)
    order = 6
    g = Series((0,) + tuple(point[:order]))
    conjugate = series_compose(g, series_compose(Series.negative_identity(order), series_inverse(g)))
    assert [lah_eval(n, 1, point) for n in range(1, order + 1)] == list(conjugate.coeffs[1:])


def test_bell_representability_example():
    firsts = [lah_poly(j, 1) for j in range(1, 4)]
    assert lah_poly(4, 2) == bell_eval(4, 2, firsts)


@pytest.mark.parametrize("n", range(1, 11))
def test_number_triangles_match_sympy(n):
    for k in range(1, n + 1):
        assert stirling2_number(n, k) == sympy.functions.combinatorial.numbers.stirling(n, k)
        assert signed_stirling1_number(n, k) == sympy.functions.combinatorial.numbers.stirling(
            n, k, kind=1, signed=True)
        assert signed_lah_number(n, k) == (-1) ** n * sympy.factorial(n) / sympy.factorial(k) * sympy.binomial(n - 1, k - 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_coefficient_sums_are_signed_numbers(n):
    ones = [1] * n
    for k in range(1, n + 1):
        assert stirling_first_eval(n, k, ones) == signed_stirling1_number(n, k)
        assert lah_eval(n, k, ones) == signed_lah_number(n, k)
