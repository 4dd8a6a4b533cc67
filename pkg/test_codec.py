"""
JSON wire formats for polynomials and series.
"""

import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lahseries.models.data_models import Convention
from lahseries.models.errors import DocumentError
from lahseries.tools.bell import bell_poly
from lahseries.tools.codec import (
    poly_from_json, poly_to_json, read_series_file, series_from_json, series_to_json
)
from lahseries.tools.laurent import LaurentPoly
from lahseries.tools.series import Series, generic_series
from lahseries.tools.stirling_lah import lah_poly


def test_polynomial_encoding_is_canonical():
    doc = json.loads(poly_to_json(lah_poly(4, 1)))
    assert doc == {"terms": [
        {"coef": "30", "exps": [-6, 3]},
        {"coef": "-8", "exps": [-5, 1, 1]},
        {"coef": "2", "exps": [-4, 0, 0, 1]},
    ]}


def test_constant_and_zero_polynomials():
    assert json.loads(poly_to_json(LaurentPoly.constant(Fraction(-1, 2)))) == {
        "terms": [{"coef": "-1/2", "exps": []}]
    }
    assert json.loads(poly_to_json(LaurentPoly.zero())) == {"terms": []}


def test_polynomial_decoding():
    text = '{"terms": [{"coef": "3", "exps": [0, 2]}, {"coef": "4", "exps": [1, 0, 1]}]}'
    assert poly_from_json(text) == bell_poly(4, 2)


@pytest.mark.parametrize("text", [
    '{"terms": [{"coef": "2/4", "exps": [1]}]}',
    '{"terms": [{"coef": "x", "exps": [1]}]}',
    '{"terms": [{"coef": "1", "exps": [1], "extra": 0}]}',
    '{"terms": [{"coef": "1", "exps": [1, -1]}]}',
    'not json',
])
def test_bad_polynomial_documents(text):
    with pytest.raises(DocumentError):
        poly_from_json(text)


def test_series_encoding():
    f = Series((0, -1, 2, Fraction(-3, 2)))
    assert json.loads(series_to_json(f)) == {
        "convention": "exponential", "order": 3, "coeffs": ["0", "-1", "2", "-3/2"]
    }
    assert json.loads(series_to_json(f, Convention.ORDINARY))["coeffs"] == ["0", "-1", "1", "-1/4"]


def test_ordinary_documents_are_rescaled():
    f = series_from_json('{"convention": "ordinary", "order": 3, "coeffs": ["0", "1", "1", "1"]}')
    assert f.coeffs == (0, 1, 2, 6)


@pytest.mark.parametrize("text", [
    '{"order": 2, "coeffs": ["0", "1"]}',
    '{"order": -1, "coeffs": []}',
    '{"order": 1, "coeffs": ["0", "1/0"]}',
    '{"convention": "hyperbolic", "order": 1, "coeffs": ["0", "1"]}',
])
def test_bad_series_documents(text):
    with pytest.raises(DocumentError):
        series_from_json(text)


def test_symbolic_series_have_no_wire_form():
    with pytest.raises(DocumentError):
        series_to_json(generic_series(2))


def test_read_series_file(tmp_path):
    path = tmp_path / "f.json"
    path.write_text(series_to_json(Series((0, -1, 2))), encoding="utf-8")
    assert read_series_file(path) == Series((0, -1, 2))
    with pytest.raises(DocumentError):
        read_series_file(tmp_path / "missing.json")


@given(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=6), min_size=1, max_size=8))
def test_series_survive_both_conventions(coeffs):
    f = Series(tuple(coeffs))
    for convention in Convention:
        assert series_from_json(series_to_json(f, convention)) == f


rationals = st.fractions(min_value=-9, max_value=9, max_denominator=4)
monomials = st.tuples(st.integers(-3, 3), st.integers(0, 2), st.integers(0, 2))


@given(st.lists(st.tuples(monomials, rationals), max_size=5).map(LaurentPoly))
def test_polynomials_survive_encoding(p):
    decoded = poly_from_json(poly_to_json(p))
    assert decoded == p
    assert decoded.items() == p.items()
