"""
Involution generation, conjugate representation and decomposition.
"""

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from lahseries.models.data_models import SeedSpec
from lahseries.models.errors import (
    InconsistentTransfer, InsufficientSeeds, NotInvertible, NotInvolution,
    TrivialInvolution, ZeroLeadingSeed
)
from lahseries.tools.expr import eval_text
from lahseries.tools.involution import (
    coefficient_form_check, conjugate_negative_identity, conjugator_family_member,
    conjugator_from_involution, involution_check_report, involution_from_conjugator,
    involution_from_even_seeds, same_involution_iff_odd_transfer, symbolic_even_seeds
)
from lahseries.tools.laurent import LaurentPoly
from lahseries.tools.series import Series, generic_series, is_involution, is_odd
from lahseries.tools.stirling_lah import lah_poly

ORDER = 8
rationals = st.fractions(min_value=-9, max_value=9, max_denominator=4)
nonzero = rationals.filter(bool)
even_seeds = st.lists(rationals, min_size=ORDER // 2, max_size=ORDER // 2).map(SeedSpec.even)
odd_seeds = st.tuples(nonzero, st.lists(rationals, max_size=ORDER // 2)).map(
    lambda t: SeedSpec.odd([t[0]] + t[1])
)
invertible_series = st.tuples(nonzero, st.lists(rationals, min_size=ORDER - 1, max_size=ORDER - 1)).map(
    lambda t: Series((0, t[0]) + tuple(t[1]))
)
odd_invertible = st.tuples(nonzero, st.lists(rationals, min_size=ORDER // 2 - 1, max_size=ORDER // 2 - 1)).map(
    lambda t: Series.from_ordinary([0, t[0]] + [c for a in t[1] for c in (0, a)], ORDER)
)

EXPM1 = Series((0,) + (1,) * ORDER)
MOBIUS = Series(tuple((-1) ** n * factorial(n) if n else 0 for n in range(ORDER + 1)))
a1, a2, a3, a4 = (LaurentPoly.variable(j) for j in range(1, 5))


def test_symbolic_odd_coefficients():
    f = involution_from_even_seeds(symbolic_even_seeds(4), 9)
    h = Fraction(1, 2)
    assert f[1] == -1
    assert f[3] == -3 * h * a1 ** 2
    assert f[5] == 15 * a1 ** 4 - 15 * h * a1 * a2
    assert f[7] == (-Fraction(4095, 4) * a1 ** 6 + 945 * h * a1 ** 3 * a2
                    - 35 * h * a2 ** 2 - 14 * a1 * a3)
    assert f[9] == (411075 * h * a1 ** 8 - 208845 * h * a1 ** 5 * a2 + 7875 * a1 ** 2 * a2 ** 2
                    + 2205 * a1 ** 3 * a3 - 105 * a2 * a3 - 45 * h * a1 * a4)
    assert [f[n] for n in (2, 4, 6, 8)] == [a1, a2, a3, a4]


def test_small_numeric_involution():
    f = involution_from_even_seeds(SeedSpec.even([1]), 3)
    assert f.coeffs == (0, -1, 1, Fraction(-3, 2))
    assert is_involution(f)


def test_zero_seeds_give_negative_identity():
    assert involution_from_even_seeds(SeedSpec.even([0, 0, 0]), 6) == Series.negative_identity(6)


def test_insufficient_seeds():
    with pytest.raises(InsufficientSeeds):
        involution_from_even_seeds(SeedSpec.even([1]), 5)


def test_odd_seeds_need_nonzero_lead():
    with pytest.raises(ZeroLeadingSeed):
        SeedSpec.odd([0, 1])
    with pytest.raises(ZeroLeadingSeed):
        SeedSpec.odd([])


@given(even_seeds)
def test_generator_soundness(seeds):
    assert is_involution(involution_from_even_seeds(seeds, ORDER))


@given(even_seeds, st.integers(1, ORDER // 2))
def test_even_seed_freedom(seeds, k):
    f = involution_from_even_seeds(seeds, ORDER)
    bumped = list(seeds.values)
    bumped[k - 1] += 1
    g = involution_from_even_seeds(SeedSpec.even(bumped), ORDER)
    assert g.coeffs[:2 * k] == f.coeffs[:2 * k]
    assert g[2 * k] == f[2 * k] + 1


def test_check_report_accepts_involutions():
    report = involution_check_report(MOBIUS)
    assert report.passed
    assert report.first_failure is None


def test_check_report_rejects_expm1():
    report = involution_check_report(EXPM1)
    assert not report.passed
    assert report.first_failure == 2
    assert report.notes


def test_check_report_rejects_positive_lead():
    report = involution_check_report(Series.from_ordinary([0, 1, 0, 1], ORDER))
    assert not report.passed
    assert report.notes


def test_check_report_needs_invertible():
    with pytest.raises(NotInvertible):
        involution_check_report(Series.constant(1, ORDER))


def test_conjugate_of_expm1_is_mobius():
    assert involution_from_conjugator(EXPM1) == MOBIUS
    assert conjugate_negative_identity(EXPM1) == MOBIUS


def test_conjugate_of_generic_series_is_lah_column():
    f = involution_from_conjugator(generic_series(5))
    assert [f[n] for n in range(1, 6)] == [lah_poly(n, 1) for n in range(1, 6)]


def test_conjugator_rejects_identity_and_non_involutions():
    with pytest.raises(TrivialInvolution):
        conjugator_from_involution(Series.identity(ORDER))
    with pytest.raises(NotInvolution):
        conjugator_from_involution(EXPM1)
    with pytest.raises(NotInvolution):
        conjugator_from_involution(Series.constant(1, ORDER))


def test_conjugator_pads_missing_odd_seeds():
    g = conjugator_from_involution(MOBIUS, SeedSpec.odd([2]))
    assert g[1] == 2
    assert all(g[n] == 0 for n in range(3, ORDER + 1, 2))
    assert involution_from_conjugator(g) == MOBIUS


@given(even_seeds, odd_seeds)
def test_decomposition_round_trip(seeds, odd):
    f = involution_from_even_seeds(seeds, ORDER)
    g = conjugator_from_involution(f, odd)
    assert involution_from_conjugator(g) == f
    assert conjugate_negative_identity(g) == f


@given(invertible_series)
def test_conjugate_matches_direct_composition(g):
    assert involution_from_conjugator(g) == conjugate_negative_identity(g)


def test_coefficient_form_witnesses():
    assert coefficient_form_check(Series.negative_identity(ORDER)) == Series.identity(ORDER)
    witness = coefficient_form_check(MOBIUS)
    assert witness[1] == 1
    assert involution_from_conjugator(witness) == MOBIUS
    assert coefficient_form_check(EXPM1) is None
    assert coefficient_form_check(Series.identity(ORDER)) is None


def test_scaled_exponential_transfer_is_odd():
    h = Series(tuple(Fraction(0) if n == 0 else Fraction(2) ** n for n in range(ORDER + 1)))
    result = same_involution_iff_odd_transfer(EXPM1, h)
    assert result.equal and result.transfer_is_odd
    assert result.transfer == Series.from_ordinary([0, 2], ORDER)


def test_exp_sin_transfer_is_sine():
    result = same_involution_iff_odd_transfer(EXPM1, eval_text("exp(sin(x))-1", ORDER))
    assert result.equal
    assert result.transfer == eval_text("sin(x)", ORDER)


def test_unrelated_conjugators():
    result = same_involution_iff_odd_transfer(Series.identity(ORDER), EXPM1)
    assert not result.equal
    assert not result.transfer_is_odd


def test_transfer_needs_invertible():
    with pytest.raises(NotInvertible):
        same_involution_iff_odd_transfer(Series.constant(1, ORDER), EXPM1)


@given(invertible_series, odd_invertible)
def test_family_members_share_the_involution(g, psi):
    assert is_odd(psi)
    h = conjugator_family_member(g, psi)
    result = same_involution_iff_odd_transfer(g, h)
    assert result.equal and result.transfer == psi


def test_family_member_rejects_non_odd_transfer():
    with pytest.raises(InconsistentTransfer):
        conjugator_family_member(EXPM1, EXPM1)
