"""
Stirling and Lah Polynomial Tools
=================================
Multivariate Stirling polynomials of the first kind A_{n,k} (the ortho-inverse
companions of B_{n,k}) and multivariable Lah polynomials
L_{n,k} = sum_{j=k}^n (-1)^j A_{n,j} B_{j,k}, with their defining identities
exposed as checks.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple
import logging

from lahseries.models.data_models import CheckFailure, CheckMode, CheckReport, Family
from lahseries.models.errors import ArityError, RangeError, ZeroAtPole
from lahseries.tools.bell import TriangleTable, bell_eval, bell_poly
from lahseries.tools.laurent import LaurentPoly, poly_eval, poly_substitute, to_rational
from lahseries.tools.series import Series, generic_series, series_inverse

logger = logging.getLogger(__name__)


def _check_range(n: int, k: int) -> None:
    if not (1 <= k <= n):
        raise RangeError(f"index (n={n}, k={k}) outside 1 <= k <= n")


def _delta(n: int, k: int) -> int:
    return 1 if n == k else 0


# Multivariate Stirling polynomials of the first kind

def _build_stirling_first(n: int, k: int) -> LaurentPoly:
    # descending-k solve of sum_{j=k}^n A_{n,j} B_{j,k} = delta_{n,k}
    if k == n:
        return LaurentPoly.variable(1, -n)
    acc = LaurentPoly.zero()
    for j in range(k + 1, n + 1):
        acc = acc + STIRLING_TABLE.get(n, j) * bell_poly(j, k)
    return -acc * LaurentPoly.variable(1, -k)


STIRLING_TABLE = TriangleTable(Family.STIRLING_FIRST, _build_stirling_first)


def stirling_first_poly(n: int, k: int) -> LaurentPoly:
    """
    A_{n,k} as a Laurent polynomial in X_1^{-1}, X_2, ..., X_{n-k+1}.

    Raises:
        RangeError: unless 1 <= k <= n
    """
    _check_range(n, k)
    return STIRLING_TABLE.get(n, k)


@lru_cache(maxsize=None)
def _generic_inverse(order: int) -> Series:
    return series_inverse(generic_series(order))


def stirling_first_via_inverse(n: int, k: int) -> LaurentPoly:
    """
    A_{n,k} = B_{n,k}(A_{1,1}, ..., A_{n-k+1,1}), the A_{j,1} read off the
    symbolic inverse of the generic series sum X_n x^n/n!.

    Independent of stirling_first_poly; used to cross-check it.
    """
    _check_range(n, k)
    inverse = _generic_inverse(n)
    firsts = [inverse[j] for j in range(1, n - k + 2)]
    return poly_substitute(bell_poly(n, k), firsts)


def stirling_first_eval(n: int, k: int, args: Sequence) -> Fraction:
    _check_range(n, k)
    return poly_eval(stirling_first_poly(n, k), args)


# Multivariable Lah polynomials

def _build_lah(n: int, k: int) -> LaurentPoly:
    acc = LaurentPoly.zero()
    for j in range(k, n + 1):
        term = STIRLING_TABLE.get(n, j) * bell_poly(j, k)
        acc = acc - term if j % 2 else acc + term
    return acc


LAH_TABLE = TriangleTable(Family.LAH, _build_lah)


def lah_poly(n: int, k: int) -> LaurentPoly:
    """
    L_{n,k} = sum_{j=k}^n (-1)^j A_{n,j} B_{j,k}.

    Raises:
        RangeError: unless 1 <= k <= n
    """
    _check_range(n, k)
    return LAH_TABLE.get(n, k)


def lah_eval(n: int, k: int, args: Sequence) -> Fraction:
    """
    Exact value of L_{n,k} at X_j = args[j-1].

    Raises:
        ZeroAtPole: args[0] == 0
        RangeError: unless 1 <= k <= n
    """
    _check_range(n, k)
    if not args or args[0] == 0:
        raise ZeroAtPole("Lah polynomials need X_1 != 0")
    return poly_eval(lah_poly(n, k), args)


def lah_parity_support_check(n: int) -> bool:
    """L_{n,1} involves only X_1..X_{2[n/2]}; in particular no X_n for odd n"""
    if n < 1:
        raise RangeError(f"n must be positive, got {n}")
    limit = 2 * (n // 2)
    poly = lah_poly(n, 1)
    return not any(poly.contains_variable(j) for j in range(limit + 1, n + 1))


# Streamed numeric values at a point

@dataclass
class FamilyValues:
    """
    B, A and L evaluated at one point g = (g_1, g_2, ...) without the symbolic tables.

    A_{n,k}(g) is taken as B_{n,k} of the inverse series' coefficients, and
    L_{n,k}(g) is streamed from those via its defining sum.
    """
    point: Tuple[Fraction, ...]
    max_n: int
    b: Dict[Tuple[int, int], Fraction] = field(default_factory=dict)
    a: Dict[Tuple[int, int], Fraction] = field(default_factory=dict)
    l: Dict[Tuple[int, int], Fraction] = field(default_factory=dict)


def evaluate_families(point: Sequence, max_n: int) -> FamilyValues:
    if len(point) < max_n:
        raise ArityError(f"point needs {max_n} coordinates, got {len(point)}")
    values = tuple(to_rational(v) for v in point[:max_n])
    if values[0] == 0:
        raise ZeroAtPole("point has g_1 = 0")
    inverse = series_inverse(Series((0,) + values))
    inverse_coeffs = inverse.coeffs[1:]
    result = FamilyValues(values, max_n)
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            result.b[(n, k)] = bell_eval(n, k, values)
            result.a[(n, k)] = bell_eval(n, k, inverse_coeffs)
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            result.l[(n, k)] = sum(
                ((-1) ** j * result.a[(n, j)] * result.b[(j, k)] for j in range(k, n + 1)),
                Fraction(0),
            )
    return result


# Identity checks

Cell = Tuple[int, Optional[int]]


def _triangle(max_n: int) -> List[Cell]:
    return [(n, k) for n in range(1, max_n + 1) for k in range(1, n + 1)]


def _run_check(
    name: str,
    max_n: int,
    cells: Iterable[Cell],
    symbolic: Callable[[int, Optional[int]], Tuple[LaurentPoly, LaurentPoly]],
    numeric: Callable[[FamilyValues, int, Optional[int]], Tuple[Fraction, Fraction]],
    points: Optional[Sequence[Sequence]] = None,
) -> CheckReport:
    cells = list(cells)
    if points is None:
        report = CheckReport(name=name, max_n=max_n, mode=CheckMode.SYMBOLIC)
        for n, k in cells:
            lhs, rhs = symbolic(n, k)
            report.checked += 1
            if lhs != rhs:
                report.failures.append(CheckFailure(n, k, f"{lhs} != {rhs}"))
    else:
        report = CheckReport(name=name, max_n=max_n, mode=CheckMode.NUMERIC)
        for index, point in enumerate(points):
            values = evaluate_families(point, max_n)
            for n, k in cells:
                lhs, rhs = numeric(values, n, k)
                report.checked += 1
                if lhs != rhs:
                    report.failures.append(CheckFailure(n, k, f"point #{index}: {lhs} != {rhs}"))
    if report.passed:
        logger.info(f"{name}: {report.checked} {report.mode.value} instances hold (n <= {max_n})")
    else:
        logger.warning(f"{name}: {len(report.failures)} of {report.checked} instances fail")
    return report


def check_ortho_inversion(max_n: int, points: Optional[Sequence[Sequence]] = None) -> CheckReport:
    """sum_{j=k}^n A_{n,j} B_{j,k} = delta_{n,k}"""

    def symbolic(n, k):
        lhs = LaurentPoly.zero()
        for j in range(k, n + 1):
            lhs = lhs + stirling_first_poly(n, j) * bell_poly(j, k)
        return lhs, LaurentPoly.constant(_delta(n, k))

    def numeric(v, n, k):
        return sum((v.a[(n, j)] * v.b[(j, k)] for j in range(k, n + 1)), Fraction(0)), _delta(n, k)

    return _run_check("ortho", max_n, _triangle(max_n), symbolic, numeric, points)


def check_lah_selfinverse(max_n: int, points: Optional[Sequence[Sequence]] = None) -> CheckReport:
    """sum_{j=k}^n L_{n,j} L_{j,k} = delta_{n,k}"""

    def symbolic(n, k):
        lhs = LaurentPoly.zero()
        for j in range(k, n + 1):
            lhs = lhs + lah_poly(n, j) * lah_poly(j, k)
        return lhs, LaurentPoly.constant(_delta(n, k))

    def numeric(v, n, k):
        return sum((v.l[(n, j)] * v.l[(j, k)] for j in range(k, n + 1)), Fraction(0)), _delta(n, k)

    return _run_check("selfinv", max_n, _triangle(max_n), symbolic, numeric, points)


def _lah_firsts(width: int) -> List[LaurentPoly]:
    return [lah_poly(j, 1) for j in range(1, width + 1)]


def check_lah_bell_representability(max_n: int, points: Optional[Sequence[Sequence]] = None) -> CheckReport:
    """L_{n,k} = B_{n,k}(L_{1,1}, ..., L_{n-k+1,1})"""

    def symbolic(n, k):
        return lah_poly(n, k), poly_substitute(bell_poly(n, k), _lah_firsts(n - k + 1))

    def numeric(v, n, k):
        firsts = [v.l[(j, 1)] for j in range(1, n - k + 2)]
        return v.l[(n, k)], bell_eval(n, k, firsts)

    return _run_check("bellrep", max_n, _triangle(max_n), symbolic, numeric, points)


def check_lah_lemma(max_n: int, points: Optional[Sequence[Sequence]] = None) -> CheckReport:
    """sum_{k=2}^{n-1} L_{k,1} B_{n,k}(L_{1,1}, ...) = (1 + (-1)^{n+1}) L_{n,1} for n >= 2"""

    def symbolic(n, _):
        lhs = LaurentPoly.zero()
        for k in range(2, n):
            lhs = lhs + lah_poly(k, 1) * poly_substitute(bell_poly(n, k), _lah_firsts(n - k + 1))
        return lhs, lah_poly(n, 1) * (1 + (-1) ** (n + 1))

    def numeric(v, n, _):
        firsts = [v.l[(j, 1)] for j in range(1, n + 1)]
        lhs = sum((v.l[(k, 1)] * bell_eval(n, k, firsts) for k in range(2, n)), Fraction(0))
        return lhs, v.l[(n, 1)] * (1 + (-1) ** (n + 1))

    return _run_check("lemma", max_n, [(n, None) for n in range(2, max_n + 1)], symbolic, numeric, points)


def check_inversion_of_sequences(max_n: int, points: Optional[Sequence[Sequence]] = None) -> CheckReport:
    """sum_{k=1}^n L_{k,1} B_{n,k} = (-1)^n X_n"""

    def symbolic(n, _):
        lhs = LaurentPoly.zero()
        for k in range(1, n + 1):
            lhs = lhs + lah_poly(k, 1) * bell_poly(n, k)
        return lhs, LaurentPoly.variable(n) * (-1) ** n

    def numeric(v, n, _):
        lhs = sum((v.l[(k, 1)] * v.b[(n, k)] for k in range(1, n + 1)), Fraction(0))
        return lhs, v.point[n - 1] * (-1) ** n

    return _run_check("seqinv", max_n, [(n, None) for n in range(1, max_n + 1)], symbolic, numeric, points)
