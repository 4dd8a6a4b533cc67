"""
Partial Bell Polynomial Tools
=============================
Integer-partition enumeration, the symbolic partial Bell polynomials B_{n,k}
and their direct (streamed) evaluation.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Sequence, Tuple
import logging
import math
import threading

from lahseries.models.data_models import Family, PartitionMultiplicity
from lahseries.models.errors import ArityError, RangeError
from lahseries.tools.laurent import LaurentPoly

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    return math.factorial(n)


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    return math.comb(n, k)


class TriangleTable:
    """
    Memoized (n, k) -> LaurentPoly store for one polynomial family.

    Entries are immutable once stored. Reads of filled entries take no lock;
    fills are serialised so concurrent readers never build an entry twice.
    """

    def __init__(self, family: Family, builder: Callable[[int, int], LaurentPoly]):
        self.family = family
        self._builder = builder
        self._entries: Dict[Tuple[int, int], LaurentPoly] = {}
        self._lock = threading.RLock()

    def get(self, n: int, k: int) -> LaurentPoly:
        entry = self._entries.get((n, k))
        if entry is not None:
            return entry
        with self._lock:
            entry = self._entries.get((n, k))
            if entry is None:
                entry = self._builder(n, k)
                self._entries[(n, k)] = entry
                logger.debug(f"{self.family.value}[{n},{k}] filled ({len(entry.items())} terms)")
        return entry

    def rows(self, max_n: int) -> Iterator[Tuple[int, int, LaurentPoly]]:
        """All entries 1 <= k <= n <= max_n, row by row"""
        for n in range(1, max_n + 1):
            for k in range(1, n + 1):
                yield n, k, self.get(n, k)

    def __len__(self):
        return len(self._entries)

    def __contains__(self, key):
        return key in self._entries


def _check_range(n: int, k: int, lowest_k: int = 0) -> None:
    if not (lowest_k <= k <= n):
        raise RangeError(f"index (n={n}, k={k}) outside {lowest_k} <= k <= n")


def _descend(j: int, largest: int, k_left: int, n_left: int, prefix: Tuple[int, ...]):
    if j == largest:
        if n_left == largest * k_left:
            yield prefix + (k_left,)
        return
    for c in range(k_left + 1):
        rest_k, rest_n = k_left - c, n_left - j * c
        if rest_n < 0:
            break
        # parts j+1..largest must be able to absorb what is left
        if (j + 1) * rest_k <= rest_n <= largest * rest_k:
            yield from _descend(j + 1, largest, rest_k, rest_n, prefix + (c,))


def enumerate_partitions(n: int, k: int) -> List[PartitionMultiplicity]:
    """
    Multiplicity vectors (c_1..c_{n-k+1}) with sum c_j = k and sum j*c_j = n.

    Emitted in ascending lexicographic order of the vectors.

    Raises:
        RangeError: unless 1 <= k <= n
    """
    _check_range(n, k, lowest_k=1)
    return list(_partitions(n, k))


@lru_cache(maxsize=None)
def _partitions(n: int, k: int) -> Tuple[PartitionMultiplicity, ...]:
    return tuple(PartitionMultiplicity(counts) for counts in _descend(1, n - k + 1, k, n, ()))


@lru_cache(maxsize=None)
def partition_coefficient(n: int, counts: Tuple[int, ...]) -> int:
    """n! / prod(c_j! * (j!)^c_j)"""
    denominator = 1
    for j, c in enumerate(counts, start=1):
        if c:
            denominator *= factorial(c) * factorial(j) ** c
    return factorial(n) // denominator


def _build_bell(n: int, k: int) -> LaurentPoly:
    if k == 0:
        return LaurentPoly.one() if n == 0 else LaurentPoly.zero()
    return LaurentPoly(
        (part.counts, partition_coefficient(n, part.counts))
        for part in enumerate_partitions(n, k)
    )


BELL_TABLE = TriangleTable(Family.BELL, _build_bell)


def bell_poly(n: int, k: int) -> LaurentPoly:
    """
    Symbolic partial Bell polynomial B_{n,k} in X_1..X_{n-k+1}.

    Raises:
        RangeError: unless 0 <= k <= n
    """
    _check_range(n, k)
    return BELL_TABLE.get(n, k)


def bell_eval(n: int, k: int, args: Sequence):
    """
    B_{n,k}(args) by streaming the partition sum.

    Works over any coefficient ring whose elements multiply with ints
    (Fraction, LaurentPoly); the symbolic polynomial is never built.

    Raises:
        RangeError: unless 0 <= k <= n
        ArityError: args shorter than n-k+1
    """
    _check_range(n, k)
    if k == 0:
        return Fraction(1 if n == 0 else 0)
    width = n - k + 1
    if len(args) < width:
        raise ArityError(f"B[{n},{k}] needs {width} arguments, got {len(args)}")
    total = Fraction(0)
    for part in _partitions(n, k):
        term = partition_coefficient(n, part.counts)
        for a, c in zip(args, part.counts):
            if c:
                term = term * a ** c
        total = total + term
    return total


def bell_homogeneity_check(n: int, k: int, lam, args: Sequence) -> bool:
    """B_{n,k}(lam * args) == lam^k * B_{n,k}(args)"""
    scaled = [lam * a for a in args]
    return bell_eval(n, k, scaled) == lam ** k * bell_eval(n, k, args)


def bell_matrix(coefficients: Sequence, size: int) -> List[List]:
    """
    Jabotinsky matrix [B_{n,k}(g_1, g_2, ...)] for 1 <= k <= n <= size.

    Entries above the diagonal are zero. For series u, v the second composition
    rule reads bell_matrix(v o u) = bell_matrix(u) . bell_matrix(v).
    """
    return [
        [bell_eval(n, k, coefficients) if k <= n else Fraction(0) for k in range(1, size + 1)]
        for n in range(1, size + 1)
    ]
