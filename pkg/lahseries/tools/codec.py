"""
Codec Tools
===========
Conversion between LaurentPoly / Series values and their JSON documents.
"""

from fractions import Fraction
from pathlib import Path
from typing import Union
import logging

from pydantic import ValidationError

from lahseries.models.data_models import Convention
from lahseries.models.errors import DocumentError, ExponentError
from lahseries.models.wire import PolyDocument, SeriesDocument, TermDocument
from lahseries.tools.laurent import LaurentPoly
from lahseries.tools.series import Series, series_to_ordinary

logger = logging.getLogger(__name__)


# Polynomials

def poly_to_document(p: LaurentPoly) -> PolyDocument:
    return PolyDocument(terms=[
        TermDocument(coef=str(c), exps=list(m)) for m, c in p.items()
    ])


def poly_from_document(doc: PolyDocument) -> LaurentPoly:
    return LaurentPoly((term.exps, Fraction(term.coef)) for term in doc.terms)


def poly_to_json(p: LaurentPoly) -> str:
    return poly_to_document(p).model_dump_json()


def poly_from_json(text: Union[str, bytes]) -> LaurentPoly:
    """
    Raises:
        DocumentError: text is not a valid polynomial document
    """
    try:
        return poly_from_document(PolyDocument.model_validate_json(text))
    except ValidationError as e:
        raise DocumentError(f"invalid polynomial document: {e.error_count()} error(s): {e.errors()[0]['msg']}") from None
    except ExponentError as e:
        raise DocumentError(f"invalid polynomial document: {e}") from None


# Series

def series_to_document(f: Series, convention: Convention = Convention.EXPONENTIAL) -> SeriesDocument:
    if f.symbolic:
        raise DocumentError("symbolic series have no rational wire encoding")
    coeffs = series_to_ordinary(f) if convention is Convention.ORDINARY else f.coeffs
    return SeriesDocument(convention=convention.value, order=f.order, coeffs=[str(c) for c in coeffs])


def series_from_document(doc: SeriesDocument) -> Series:
    coeffs = [Fraction(c) for c in doc.coeffs]
    if doc.convention == Convention.ORDINARY.value:
        return Series.from_ordinary(coeffs, doc.order)
    return Series(tuple(coeffs))


def series_to_json(f: Series, convention: Convention = Convention.EXPONENTIAL) -> str:
    return series_to_document(f, convention).model_dump_json()


def series_from_json(text: Union[str, bytes]) -> Series:
    """
    Raises:
        DocumentError: text is not a valid series document
    """
    try:
        return series_from_document(SeriesDocument.model_validate_json(text))
    except ValidationError as e:
        raise DocumentError(f"invalid series document: {e.error_count()} error(s): {e.errors()[0]['msg']}") from None


def read_series_file(path: Union[str, Path]) -> Series:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"cannot read series file {path}: {e.strerror}") from None
    logger.debug(f"loaded series from {path}")
    return series_from_json(text)
