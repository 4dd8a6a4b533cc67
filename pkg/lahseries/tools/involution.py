"""
Involution Tools
================
Generation of involutory series from free even-index seeds, their
representation through the Lah subfamily L_{n,1}, constructive extraction of a
conjugator g with f = g o (-id) o inverse(g), and the odd-transfer test that
decides when two conjugators give the same involution.
"""

from fractions import Fraction
from typing import List, Optional
import logging

from lahseries.models.data_models import (
    InvolutionReport, OddTransferResult, SeedKind, SeedSpec
)
from lahseries.models.errors import (
    InconsistentTransfer, InsufficientSeeds, NotInvertible, NotInvolution,
    RangeError, TrivialInvolution
)
from lahseries.tools.bell import bell_eval
from lahseries.tools.laurent import LaurentPoly, poly_substitute
from lahseries.tools.series import (
    Series, is_involution, is_odd, series_compose, series_inverse
)
from lahseries.tools.stirling_lah import lah_eval, lah_poly

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def symbolic_even_seeds(count: int) -> SeedSpec:
    """Even seeds a_1..a_count as the indeterminates X_1..X_count"""
    return SeedSpec.even(LaurentPoly.variable(k) for k in range(1, count + 1))


def involution_from_even_seeds(seeds: SeedSpec, order: int) -> Series:
    """
    Build the involution with f_1 = -1, f_{2k} = a_k and
    f_n = 1/2 sum_{k=2}^{n-1} f_k B_{n,k}(-1, f_2, ..., f_{n-k+1}) for odd n >= 3.

    Args:
        seeds: EVEN seeds a_1, a_2, ... (rationals or LaurentPoly indeterminates)
        order: truncation order N >= 1

    Returns:
        The involution truncated at order N

    Raises:
        InsufficientSeeds: fewer than N // 2 seeds
    """
    if seeds.kind is not SeedKind.EVEN:
        raise ValueError("involution generation takes EVEN seeds")
    if order < 1:
        raise RangeError(f"order must be at least 1, got {order}")
    needed = order // 2
    if len(seeds.values) < needed:
        raise InsufficientSeeds(f"order {order} needs {needed} even seeds, got {len(seeds.values)}")

    f: List = [Fraction(0), Fraction(-1)]
    for n in range(2, order + 1):
        if n % 2 == 0:
            f.append(seeds.values[n // 2 - 1])
            continue
        args = [Fraction(-1)] + f[2:n]
        acc = Fraction(0)
        for k in range(2, n):
            if f[k] != 0:
                acc = acc + f[k] * bell_eval(n, k, args)
        f.append(acc * HALF)
    logger.debug(f"generated involution of order {order} from {needed} seeds")
    return Series(tuple(f))


def involution_check_report(f: Series) -> InvolutionReport:
    """
    Check sum_{k=1}^n f_k B_{n,k}(f_1, ..., f_{n-k+1}) = delta_{n,1} order by order.

    Raises:
        NotInvertible: f is not invertible
    """
    if not f.is_invertible():
        raise NotInvertible("involution check needs an invertible series")
    report = InvolutionReport(order=f.order)
    args = f.coeffs[1:]
    for n in range(1, f.order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if f[k] != 0:
                acc = acc + f[k] * bell_eval(n, k, args)
        if acc != (1 if n == 1 else 0):
            report.failing_orders.append(n)
    if f[1] == 1 and not f.is_identity():
        report.notes.append("f_1 = 1 forces f = id; a nontrivial involution has f_1 = -1")
    if not report.passed:
        logger.info(f"not an involution: first failure at n={report.first_failure}")
    return report


def involution_from_conjugator(g: Series) -> Series:
    """
    The involution g o (-id) o inverse(g), read off coefficientwise as
    f_n = L_{n,1}(g_1, ..., g_{2[n/2]}).

    Raises:
        NotInvertible: g is not invertible
    """
    if not g.is_invertible():
        raise NotInvertible("conjugator must be invertible")
    args = g.coeffs[1:]
    if g.symbolic:
        values = [poly_substitute(lah_poly(n, 1), args) for n in range(1, g.order + 1)]
    else:
        values = [lah_eval(n, 1, args) for n in range(1, g.order + 1)]
    return Series((0,) + tuple(values))


def conjugate_negative_identity(g: Series) -> Series:
    """Direct composition chain g o (-id) o inverse(g)"""
    inner = series_compose(Series.negative_identity(g.order), series_inverse(g))
    return series_compose(g, inner)


def conjugator_from_involution(f: Series, odd_seeds: Optional[SeedSpec] = None) -> Series:
    """
    Construct g with f = g o (-id) o inverse(g).

    Odd-index coefficients come from the seeds (missing ones are 0); even ones
    follow g_n = 1/2 sum_{k=2}^n f_k B_{n,k}(g_1, ..., g_{n-k+1}).

    Raises:
        TrivialInvolution: f is the identity
        NotInvolution: f is not an invertible involution
    """
    if odd_seeds is None:
        odd_seeds = SeedSpec.odd([1])
    if odd_seeds.kind is not SeedKind.ODD:
        raise ValueError("conjugator construction takes ODD seeds")
    if f.order >= 1 and f.is_identity():
        raise TrivialInvolution("the identity is not conjugate to -id")
    if not f.is_invertible() or not is_involution(f):
        raise NotInvolution("series is not an involution")

    slots = (f.order + 1) // 2
    odd = list(odd_seeds.values[:slots]) + [Fraction(0)] * (slots - len(odd_seeds.values))
    g: List = [Fraction(0), odd[0]]
    for n in range(2, f.order + 1):
        if n % 2:
            g.append(odd[(n - 1) // 2])
            continue
        acc = Fraction(0)
        for k in range(2, n + 1):
            if f[k] != 0:
                acc = acc + f[k] * bell_eval(n, k, g[1:])
        g.append(acc * HALF)
    return Series(tuple(g))


def same_involution_iff_odd_transfer(g: Series, h: Series) -> OddTransferResult:
    """
    Compare the involutions generated by g and h together with the transfer
    psi = inverse(g) o h; they coincide exactly when psi is odd.

    Raises:
        NotInvertible: g or h is not invertible
        InconsistentTransfer: the equivalence fails (never for valid input)
    """
    if not (g.is_invertible() and h.is_invertible()):
        raise NotInvertible("both conjugators must be invertible")
    transfer = series_compose(series_inverse(g), h)
    equal = involution_from_conjugator(g) == involution_from_conjugator(h)
    transfer_is_odd = is_odd(transfer)
    if equal != transfer_is_odd:
        raise InconsistentTransfer(f"involutions equal={equal} but transfer odd={transfer_is_odd}")
    return OddTransferResult(equal=equal, transfer=transfer, transfer_is_odd=transfer_is_odd)


def conjugator_family_member(g: Series, psi: Series) -> Series:
    """
    Another conjugator h = g o psi of the same involution.

    Raises:
        InconsistentTransfer: psi is not an odd invertible series
    """
    if not psi.is_invertible() or not is_odd(psi):
        raise InconsistentTransfer("transfer must be an odd invertible series")
    return series_compose(g, psi)


def coefficient_form_check(f: Series) -> Optional[Series]:
    """
    Witness g with f_n = L_{n,1}(g_1, ...) for every n, or None when f is not a
    nontrivial involution. Uses the canonical odd seeds (-f_1, 0, 0, ...).
    """
    if not f.is_invertible() or f.is_identity():
        return None
    if not is_involution(f):
        return None
    return conjugator_from_involution(f, SeedSpec.odd([-f[1]]))
