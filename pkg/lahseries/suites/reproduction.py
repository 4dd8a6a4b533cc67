"""
Published Value Reproduction
============================
Recomputes the closed forms and sequences that the Lah/involution theory
publishes as worked examples and compares them with the committed JSON
fixtures. Comparison is semantic; a mismatch carries a unified diff of the
canonical JSON renderings.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Union
import difflib
import json
import logging

from pydantic import ValidationError

from lahseries.models.data_models import ReproductionOutcome
from lahseries.models.errors import FixtureError
from lahseries.models.wire import PolyDocument, SeriesDocument
from lahseries.tools.codec import (
    poly_from_document, poly_to_document, series_from_document, series_to_document
)
from lahseries.tools.expr import eval_text
from lahseries.tools.involution import involution_from_even_seeds, symbolic_even_seeds
from lahseries.tools.series import Series
from lahseries.tools.stirling_lah import lah_eval, lah_poly

logger = logging.getLogger(__name__)

SEQUENCE_ORDER = 10
LAH_POWER_BASES = (Fraction(2), Fraction(3), Fraction(-1, 2))


@dataclass(frozen=True)
class ReproductionItem:
    name: str
    description: str
    kind: str  # "poly" | "series" | "rationals"
    compute: Callable[[], Any]


# Kinds: encode computed values to JSON-ready documents, decode fixtures back

def _rationals_to_json(value):
    if isinstance(value, dict):
        return {key: _rationals_to_json(v) for key, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_rationals_to_json(v) for v in value]
    return str(value)


def _rationals_from_json(value):
    if isinstance(value, dict):
        return {key: _rationals_from_json(v) for key, v in value.items()}
    if isinstance(value, list):
        return [_rationals_from_json(v) for v in value]
    if not isinstance(value, str):
        raise FixtureError(f"expected a rational string, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise FixtureError(f"not a rational literal: {value!r}") from None


_ENCODERS: Dict[str, Callable[[Any], Any]] = {
    "poly": lambda p: poly_to_document(p).model_dump(),
    "series": lambda f: series_to_document(f).model_dump(),
    "rationals": _rationals_to_json,
}

_DECODERS: Dict[str, Callable[[Any], Any]] = {
    "poly": lambda doc: poly_from_document(PolyDocument.model_validate(doc)),
    "series": lambda doc: series_from_document(SeriesDocument.model_validate(doc)),
    "rationals": _rationals_from_json,
}


# Computations

@lru_cache(maxsize=None)
def _symbolic_involution() -> Series:
    # indeterminates a_1..a_4 stand in for the even coefficients
    return involution_from_even_seeds(symbolic_even_seeds(4), 9)


@lru_cache(maxsize=None)
def _exp_sin() -> Series:
    return eval_text("exp(sin(x))-1", SEQUENCE_ORDER)


def _lah_first_column(args: Sequence[Fraction]) -> List[Fraction]:
    return [lah_eval(n, 1, args) for n in range(1, SEQUENCE_ORDER + 1)]


def _powers(c: Fraction) -> List[Fraction]:
    return [c ** j for j in range(1, SEQUENCE_ORDER + 1)]


def _odd_coefficient(n: int) -> Callable[[], Any]:
    return lambda: _symbolic_involution()[n]


def _lah_member(n: int) -> Callable[[], Any]:
    return lambda: lah_poly(n, 1)


def _build_items() -> Dict[str, ReproductionItem]:
    items = [
        ReproductionItem(f"f{n}", f"odd coefficient f_{n} of the involution generated by a_1..a_4",
                         "poly", _odd_coefficient(n))
        for n in (1, 3, 5, 7, 9)
    ]
    items += [
        ReproductionItem(f"L{n}", f"Lah polynomial L_{{{n},1}}", "poly", _lah_member(n))
        for n in range(1, 7)
    ]
    items += [
        ReproductionItem("exp_sin_sequence", "coefficients of exp(sin(x)) - 1 up to order 10",
                         "series", _exp_sin),
        ReproductionItem("mobius_involution", "coefficients of -x/(1+x) up to order 10",
                         "series", lambda: eval_text("-x/(1+x)", SEQUENCE_ORDER)),
        ReproductionItem("lah_all_ones", "L_{n,1}(1, 1, ...) for n <= 10",
                         "rationals", lambda: _lah_first_column([Fraction(1)] * SEQUENCE_ORDER)),
        ReproductionItem("lah_powers", "L_{n,1}(c, c^2, ...) for c in 2, 3, -1/2 and n <= 10",
                         "rationals", lambda: {str(c): _lah_first_column(_powers(c)) for c in LAH_POWER_BASES}),
        ReproductionItem("lah_exp_sin", "L_{n,1} at the coefficients of exp(sin(x)) - 1 for n <= 10",
                         "rationals", lambda: _lah_first_column(_exp_sin().coeffs[1:])),
        ReproductionItem("lah_numbers", "signed Lah numbers L_{n,k}(1, ..., 1) for n <= 6",
                         "rationals", lambda: [[lah_eval(n, k, [Fraction(1)] * n) for k in range(1, n + 1)]
                                               for n in range(1, 7)]),
    ]
    return {item.name: item for item in items}


ITEMS: Dict[str, ReproductionItem] = _build_items()


# Fixtures

def fixture_path(fixtures_dir: Union[str, Path], name: str) -> Path:
    return Path(fixtures_dir) / f"{name}.json"


def load_fixture(fixtures_dir: Union[str, Path], name: str) -> Dict[str, Any]:
    """
    Raises:
        FixtureError: fixture missing, unreadable or not shaped like {"item", "kind", "value"}
    """
    path = fixture_path(fixtures_dir, name)
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise FixtureError(f"cannot read fixture {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise FixtureError(f"fixture {path} is not valid JSON: {e.msg} (line {e.lineno})") from None
    if not isinstance(document, dict) or "value" not in document or document.get("kind") not in _DECODERS:
        raise FixtureError(f"fixture {path} lacks a known kind or a value")
    return document


def _canonical_json(kind: str, value: Any) -> List[str]:
    return json.dumps(_ENCODERS[kind](value), indent=2, sort_keys=True).splitlines()


def reproduce_item(item: ReproductionItem, fixtures_dir: Union[str, Path]) -> ReproductionOutcome:
    fixture = load_fixture(fixtures_dir, item.name)
    if fixture["kind"] != item.kind:
        raise FixtureError(f"fixture {item.name} has kind {fixture['kind']}, expected {item.kind}")
    try:
        expected = _DECODERS[item.kind](fixture["value"])
    except ValidationError as e:
        raise FixtureError(f"fixture {item.name} is malformed: {e.errors()[0]['msg']}") from None

    actual = item.compute()
    if actual == expected:
        logger.info(f"reproduced {item.name}")
        return ReproductionOutcome(item.name, item.description, passed=True)

    diff = "\n".join(difflib.unified_diff(
        _canonical_json(item.kind, expected),
        _canonical_json(item.kind, actual),
        fromfile=f"fixtures/{item.name}.json",
        tofile=f"computed/{item.name}",
        lineterm="",
    ))
    logger.warning(f"{item.name} differs from its fixture")
    return ReproductionOutcome(item.name, item.description, passed=False, diff=diff)


def reproduce(selection: Optional[Sequence[str]], fixtures_dir: Union[str, Path]) -> List[ReproductionOutcome]:
    """
    Reproduce the selected items (all when selection is empty) in registry order.

    Raises:
        FixtureError: unknown item name, or a missing or malformed fixture
    """
    names = list(selection or ITEMS)
    unknown = [name for name in names if name not in ITEMS]
    if unknown:
        raise FixtureError(f"unknown item(s): {', '.join(unknown)}; known: {', '.join(ITEMS)}")
    return [reproduce_item(ITEMS[name], fixtures_dir) for name in ITEMS if name in names]
