"""
Suite Sampling
==============
Reproducible random rationals, points, series and seeds for the verification
suites. Every suite owns a sampler seeded by (rng-seed, suite name), so draws
never depend on how suites are scheduled.
"""

from fractions import Fraction
from typing import List
import random

from lahseries.config.settings import SamplingPolicy, policy as default_policy
from lahseries.models.data_models import SeedSpec
from lahseries.tools.series import Series


class Sampler:
    """Random exact values drawn under a SamplingPolicy"""

    def __init__(self, rng_seed: int, name: str, policy: SamplingPolicy = default_policy):
        self.name = name
        self.policy = policy
        self._rng = random.Random(f"{rng_seed}:{name}")

    def rational(self, nonzero: bool = False) -> Fraction:
        """p/q with p, q in the policy ranges; redrawn until nonzero if asked"""
        while True:
            value = Fraction(self._rng.randint(*self.policy.numerator_range),
                             self._rng.randint(*self.policy.denominator_range))
            if value or not nonzero:
                return value

    def index(self, low: int, high: int) -> int:
        return self._rng.randint(low, high)

    def rationals(self, count: int) -> List[Fraction]:
        return [self.rational() for _ in range(count)]

    def point(self, width: int) -> List[Fraction]:
        """(g_1, ..., g_width) with g_1 != 0"""
        return [self.rational(nonzero=True)] + self.rationals(width - 1)

    def series(self, order: int) -> Series:
        """Arbitrary series, constant term included"""
        return Series(tuple(self.rationals(order + 1)))

    def invertible_series(self, order: int) -> Series:
        return Series((0,) + tuple(self.point(order)))

    def odd_series(self, order: int) -> Series:
        coeffs = [Fraction(0)] * (order + 1)
        coeffs[1] = self.rational(nonzero=True)
        for n in range(3, order + 1, 2):
            coeffs[n] = self.rational()
        return Series(tuple(coeffs))

    def non_odd_series(self, order: int) -> Series:
        """Invertible series with a nonzero second coefficient (order >= 2)"""
        coeffs = list(self.invertible_series(order).coeffs)
        coeffs[2] = self.rational(nonzero=True)
        return Series(tuple(coeffs))

    def even_seeds(self, count: int) -> SeedSpec:
        return SeedSpec.even(self.rationals(count))

    def odd_seeds(self, count: int) -> SeedSpec:
        return SeedSpec.odd(self.point(count))
