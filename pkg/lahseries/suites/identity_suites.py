"""
Identity Suites
===============
Named verification suites over the Bell, Stirling and Lah families, the series
operations and the involution constructions. Each suite is independent and
pure; run_suites is the only join point.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence
import logging
import time

from lahseries.models.data_models import CheckReport, SeedSpec, SuiteResult
from lahseries.models.errors import LahseriesError
from lahseries.suites.sampling import Sampler
from lahseries.tools.bell import bell_eval, bell_homogeneity_check, bell_matrix, factorial
from lahseries.tools.involution import (
    conjugate_negative_identity, conjugator_family_member, conjugator_from_involution,
    involution_check_report, involution_from_conjugator, involution_from_even_seeds,
    same_involution_iff_odd_transfer
)
from lahseries.tools.number_triangles import (
    signed_lah_number, signed_stirling1_number, stirling2_number
)
from lahseries.tools.series import (
    Series, is_involution, series_add, series_compose, series_inverse, series_mul,
    series_scale
)
from lahseries.tools.stirling_lah import (
    check_inversion_of_sequences, check_lah_bell_representability, check_lah_lemma,
    check_lah_selfinverse, check_ortho_inversion, lah_eval, lah_parity_support_check,
    stirling_first_eval, stirling_first_poly, stirling_first_via_inverse
)

logger = logging.getLogger(__name__)

# both constructions of A are compared up to this n
CROSS_CHECK_MAX_N = 10


@dataclass(frozen=True)
class SuiteContext:
    """Shared parameters of one verification run"""
    rng_seed: int
    max_n: int
    trials: int
    symbolic_max_n: int = 8
    numeric_max_n: int = 12

    @property
    def symbolic_n(self) -> int:
        return min(self.max_n, self.symbolic_max_n)

    @property
    def numeric_n(self) -> int:
        """Numeric checks reach numeric_max_n once the symbolic range is exhausted"""
        if self.max_n < self.symbolic_max_n:
            return self.max_n
        return max(self.max_n, self.numeric_max_n)

    def sampler(self, name: str) -> Sampler:
        return Sampler(self.rng_seed, name)


class _Tally:
    """Accumulates instance counts and failure messages for one suite"""

    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.failures: List[str] = []

    def expect(self, condition: bool, message: str) -> None:
        self.checked += 1
        if not condition:
            self.failures.append(message)

    def absorb(self, report: CheckReport) -> None:
        self.checked += report.checked
        for failure in report.failures:
            where = f"n={failure.n}" if failure.k is None else f"n={failure.n}, k={failure.k}"
            self.failures.append(f"{report.name} ({report.mode.value}) {where}: {failure.detail}")

    def result(self) -> SuiteResult:
        return SuiteResult(self.name, passed=not self.failures, checked=self.checked, failures=self.failures)


# Identity checks from stirling_lah, symbolic then numeric

def _identity_suite(name: str, check: Callable[..., CheckReport]) -> Callable[[SuiteContext], SuiteResult]:
    def run(ctx: SuiteContext) -> SuiteResult:
        tally = _Tally(name)
        sampler = ctx.sampler(name)
        tally.absorb(check(ctx.symbolic_n))
        points = [sampler.point(ctx.numeric_n) for _ in range(ctx.trials)]
        tally.absorb(check(ctx.numeric_n, points))
        return tally.result()
    run.__doc__ = check.__doc__
    return run


def suite_ortho(ctx: SuiteContext) -> SuiteResult:
    """Orthogonality of A and B, and agreement of both constructions of A"""
    tally = _Tally("ortho")
    sampler = ctx.sampler("ortho")
    tally.absorb(check_ortho_inversion(ctx.symbolic_n))
    points = [sampler.point(ctx.numeric_n) for _ in range(ctx.trials)]
    tally.absorb(check_ortho_inversion(ctx.numeric_n, points))
    for n in range(1, min(ctx.numeric_n, CROSS_CHECK_MAX_N) + 1):
        for k in range(1, n + 1):
            tally.expect(stirling_first_poly(n, k) == stirling_first_via_inverse(n, k),
                         f"A[{n},{k}] differs between triangular solve and symbolic inverse")
    return tally.result()


def suite_parity(ctx: SuiteContext) -> SuiteResult:
    """L_{n,1} never involves X_j for j > 2[n/2]"""
    tally = _Tally("parity")
    for n in range(1, ctx.symbolic_n + 1):
        tally.expect(lah_parity_support_check(n), f"L[{n},1] involves an index above {2 * (n // 2)}")
    return tally.result()


# Series-level cross validation

def _power_oracle_compose(f: Series, g: Series) -> Series:
    # sum_k f_k g^k / k! with plain series products
    total = Series.constant(f[0], f.order)
    power = Series.constant(1, f.order)
    for k in range(1, f.order + 1):
        power = series_mul(power, g)
        if f[k] != 0:
            total = series_add(total, series_scale(power, f[k] * Fraction(1, factorial(k))))
    return total


def suite_faadibruno(ctx: SuiteContext) -> SuiteResult:
    """Composition against products of powers, Bell values against g^k/k!, and inversion"""
    tally = _Tally("faadibruno")
    sampler = ctx.sampler("faadibruno")
    order = ctx.numeric_n
    for trial in range(ctx.trials):
        f = sampler.series(order)
        g = sampler.invertible_series(order)
        tally.expect(series_compose(f, g) == _power_oracle_compose(f, g),
                     f"trial {trial}: composition disagrees with the power-sum oracle")
        power = Series.constant(1, order)
        for k in range(1, order + 1):
            power = series_scale(series_mul(power, g), Fraction(1, k))
            mismatched = [n for n in range(k, order + 1) if bell_eval(n, k, g.coeffs[1:]) != power[n]]
            tally.expect(not mismatched, f"trial {trial}: B[n,{k}](g) differs from g^{k}/{k}! at n={mismatched}")
        inverse = series_inverse(g)
        identity = Series.identity(order)
        tally.expect(series_compose(g, inverse) == identity, f"trial {trial}: g o inverse(g) != id")
        tally.expect(series_compose(inverse, g) == identity, f"trial {trial}: inverse(g) o g != id")
    return tally.result()


def suite_dual(ctx: SuiteContext) -> SuiteResult:
    """f o inverse(g) against sum f_k A_{n,k}(g); (-id) o inverse(g) against -A_{n,1}(g)"""
    tally = _Tally("dual")
    sampler = ctx.sampler("dual")
    order = ctx.numeric_n
    for trial in range(ctx.trials):
        f = sampler.series(order)
        g = sampler.invertible_series(order)
        args = g.coeffs[1:]
        composed = series_compose(f, series_inverse(g))
        for n in range(1, order + 1):
            expected = sum((f[k] * stirling_first_eval(n, k, args) for k in range(1, n + 1)), Fraction(0))
            tally.expect(composed[n] == expected, f"trial {trial}: coefficient {n} of f o inverse(g)")
        reflected = series_compose(Series.negative_identity(order), series_inverse(g))
        for n in range(1, order + 1):
            tally.expect(reflected[n] == -stirling_first_eval(n, 1, args),
                         f"trial {trial}: coefficient {n} of (-id) o inverse(g)")
    return tally.result()


def _matmul(left: Sequence[Sequence[Fraction]], right: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    size = len(left)
    return [
        [sum((left[i][j] * right[j][k] for j in range(size)), Fraction(0)) for k in range(size)]
        for i in range(size)
    ]


def suite_jabotinsky(ctx: SuiteContext) -> SuiteResult:
    """Bell matrix of v o u equals bell_matrix(u) . bell_matrix(v)"""
    tally = _Tally("jabotinsky")
    sampler = ctx.sampler("jabotinsky")
    order = ctx.numeric_n
    for trial in range(ctx.trials):
        u = sampler.invertible_series(order)
        v = sampler.invertible_series(order)
        composed = series_compose(v, u)
        lhs = bell_matrix(composed.coeffs[1:], order)
        rhs = _matmul(bell_matrix(u.coeffs[1:], order), bell_matrix(v.coeffs[1:], order))
        tally.expect(lhs == rhs, f"trial {trial}: composition rule fails")
    return tally.result()


def suite_homogeneity(ctx: SuiteContext) -> SuiteResult:
    """B_{n,k}(lam * args) = lam^k B_{n,k}(args)"""
    tally = _Tally("homogeneity")
    sampler = ctx.sampler("homogeneity")
    for trial in range(ctx.trials):
        n = sampler.index(1, ctx.numeric_n)
        k = sampler.index(1, n)
        lam = sampler.rational(nonzero=True)
        args = sampler.rationals(n - k + 1)
        tally.expect(bell_homogeneity_check(n, k, lam, args), f"trial {trial}: B[{n},{k}] at lambda={lam}")
    return tally.result()


def suite_triangles(ctx: SuiteContext) -> SuiteResult:
    """Coefficient sums of B, A and L against the integer recurrences"""
    tally = _Tally("triangles")
    ones = [Fraction(1)] * ctx.numeric_n
    for n in range(1, ctx.numeric_n + 1):
        for k in range(1, n + 1):
            tally.expect(bell_eval(n, k, ones) == stirling2_number(n, k), f"B[{n},{k}](1,...,1)")
            tally.expect(stirling_first_eval(n, k, ones) == signed_stirling1_number(n, k), f"A[{n},{k}](1,...,1)")
            tally.expect(lah_eval(n, k, ones) == signed_lah_number(n, k), f"L[{n},{k}](1,...,1)")
    return tally.result()


# Involutions

def _involution_order(ctx: SuiteContext) -> int:
    return max(ctx.numeric_n - 1, 2)


def suite_involution(ctx: SuiteContext) -> SuiteResult:
    """Generator soundness, seed freedom, conjugate soundness and the decomposition round trip"""
    tally = _Tally("involution")
    sampler = ctx.sampler("involution")
    order = _involution_order(ctx)
    for trial in range(ctx.trials):
        seeds = sampler.even_seeds(order // 2)
        f = involution_from_even_seeds(seeds, order)
        tally.expect(is_involution(f), f"trial {trial}: generated series is not an involution")

        slot = sampler.index(1, order // 2)
        bumped = list(seeds.values)
        bumped[slot - 1] += 1
        f_bumped = involution_from_even_seeds(SeedSpec.even(bumped), order)
        tally.expect(f_bumped.coeffs[:2 * slot] == f.coeffs[:2 * slot] and f_bumped[2 * slot] != f[2 * slot],
                     f"trial {trial}: changing a_{slot} leaked below f_{2 * slot}")

        g = conjugator_from_involution(f, sampler.odd_seeds((order + 1) // 2))
        tally.expect(involution_from_conjugator(g) == f, f"trial {trial}: decomposition round trip")
        tally.expect(conjugate_negative_identity(g) == f, f"trial {trial}: direct composition chain")

    controls = [
        ("e^x - 1", Series((0,) + (1,) * order)),
        ("f_1 = 1, f != id", Series((0, 1, 1) + (0,) * (order - 2))),
    ]
    for label, series in controls:
        tally.expect(not involution_check_report(series).passed, f"negative control {label} accepted")
    return tally.result()


def suite_centralizer(ctx: SuiteContext) -> SuiteResult:
    """Conjugators agree exactly when their transfer is odd"""
    tally = _Tally("centralizer")
    sampler = ctx.sampler("centralizer")
    order = _involution_order(ctx)
    for trial in range(ctx.trials):
        g = sampler.invertible_series(order)
        h = conjugator_family_member(g, sampler.odd_series(order))
        related = same_involution_iff_odd_transfer(g, h)
        tally.expect(related.equal and related.transfer_is_odd, f"trial {trial}: odd transfer not recognised")

        unrelated = same_involution_iff_odd_transfer(g, series_compose(g, sampler.non_odd_series(order)))
        tally.expect(not unrelated.equal and not unrelated.transfer_is_odd,
                     f"trial {trial}: non-odd transfer gave the same involution")
    return tally.result()


SUITES: Dict[str, Callable[[SuiteContext], SuiteResult]] = {
    "ortho": suite_ortho,
    "selfinv": _identity_suite("selfinv", check_lah_selfinverse),
    "bellrep": _identity_suite("bellrep", check_lah_bell_representability),
    "lemma": _identity_suite("lemma", check_lah_lemma),
    "seqinv": _identity_suite("seqinv", check_inversion_of_sequences),
    "parity": suite_parity,
    "faadibruno": suite_faadibruno,
    "dual": suite_dual,
    "jabotinsky": suite_jabotinsky,
    "homogeneity": suite_homogeneity,
    "triangles": suite_triangles,
    "involution": suite_involution,
    "centralizer": suite_centralizer,
}


def _timed(name: str, ctx: SuiteContext) -> SuiteResult:
    started = time.perf_counter()
    try:
        result = SUITES[name](ctx)
    except LahseriesError as e:
        logger.error(f"suite {name} raised {type(e).__name__}: {e}")
        result = SuiteResult(name, passed=False, failures=[f"{type(e).__name__}: {e}"])
    result.seconds = time.perf_counter() - started
    logger.info(f"suite {name}: {'pass' if result.passed else 'FAIL'} "
                f"({result.checked} checks, {result.seconds:.2f}s)")
    return result


def resolve_suites(selection: Optional[Iterable[str]]) -> List[str]:
    """Suite names in registry order; None or 'all' selects everything"""
    wanted = list(selection or ["all"])
    if "all" in wanted:
        return list(SUITES)
    unknown = [name for name in wanted if name not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    return [name for name in SUITES if name in wanted]


def run_suites(
    names: Sequence[str],
    ctx: SuiteContext,
    parallel: bool = True,
    max_workers: int = 4,
) -> List[SuiteResult]:
    """Run suites, in a thread pool when parallel; results come back in the given order"""
    if parallel and len(names) > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(lambda name: _timed(name, ctx), names))
    return [_timed(name, ctx) for name in names]
