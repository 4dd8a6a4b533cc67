"""
Lahseries Wire Models
=====================
Pydantic models for the JSON encodings of polynomials and series used by the
CLI and the committed fixtures.

    polynomial: {"terms": [{"coef": "p/q", "exps": [e1, ..., em]}, ...]}
    series:     {"convention": "exponential", "order": N, "coeffs": ["p/q", ...]}
"""

from fractions import Fraction
from typing import List, Literal

from pydantic import BaseModel, ConfigDict, field_validator, model_validator


def _check_rational(text: str) -> str:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational literal: {text!r}") from None
    if str(value) != text.strip():
        raise ValueError(f"rational {text!r} is not in reduced form (expected {value})")
    return text.strip()


class TermDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    coef: str
    exps: List[int] = []

    @field_validator("coef")
    @classmethod
    def _coef_is_rational(cls, v: str) -> str:
        return _check_rational(v)


class PolyDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    terms: List[TermDocument] = []


class SeriesDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    convention: Literal["exponential", "ordinary"] = "exponential"
    order: int
    coeffs: List[str]

    @field_validator("coeffs")
    @classmethod
    def _coeffs_are_rational(cls, v: List[str]) -> List[str]:
        return [_check_rational(c) for c in v]

    @model_validator(mode="after")
    def _order_matches(self) -> 'SeriesDocument':
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"order {self.order} needs {self.order + 1} coefficients, got {len(self.coeffs)}")
        return self
