"""
Power Series Tools
==================
Truncated formal power series in the exponential convention: coeffs[n] holds
f_n = D^n(f)(0), so f = sum f_n x^n / n!. Coefficients are exact rationals or
LaurentPoly values (for symbolic work); a series never mixes the two.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, List, Sequence, Tuple
import logging

from lahseries.models.errors import (
    DivisionByNonUnit, InnerConstantTerm, NonInvertibleSubstitution,
    NotInvertible, OrderMismatch, RangeError
)
from lahseries.tools.bell import bell_eval, binomial, factorial
from lahseries.tools.laurent import LaurentPoly, to_rational

logger = logging.getLogger(__name__)


def _normalise(value, symbolic: bool):
    if isinstance(value, LaurentPoly):
        return value
    value = to_rational(value)
    return LaurentPoly.constant(value) if symbolic else value


def _ring_zero(symbolic: bool):
    return LaurentPoly.zero() if symbolic else Fraction(0)


def _ring_one(symbolic: bool):
    return LaurentPoly.one() if symbolic else Fraction(1)


def _reciprocal(value):
    if isinstance(value, LaurentPoly):
        return value.inverse()
    return 1 / value


@dataclass(frozen=True)
class Series:
    """Truncated series f_0..f_N (order N) in the exponential convention"""
    coeffs: Tuple[Any, ...]

    def __post_init__(self):
        raw = tuple(self.coeffs)
        if not raw:
            raise OrderMismatch("a series needs at least its constant coefficient")
        symbolic = any(isinstance(c, LaurentPoly) for c in raw)
        object.__setattr__(self, "coeffs", tuple(_normalise(c, symbolic) for c in raw))

    # Constructors
    @classmethod
    def zero(cls, order: int) -> 'Series':
        return cls((0,) * (order + 1))

    @classmethod
    def constant(cls, value, order: int) -> 'Series':
        return cls((value,) + (0,) * order)

    @classmethod
    def identity(cls, order: int) -> 'Series':
        return cls.from_ordinary([0, 1], order)

    @classmethod
    def negative_identity(cls, order: int) -> 'Series':
        return cls.from_ordinary([0, -1], order)

    @classmethod
    def from_ordinary(cls, coeffs: Sequence, order: int = None) -> 'Series':
        """Build from ordinary coefficients a_n (f = sum a_n x^n), padded/truncated to order"""
        if order is None:
            order = len(coeffs) - 1
        padded = list(coeffs[:order + 1]) + [0] * (order + 1 - len(coeffs))
        return cls(tuple(_normalise(a, isinstance(a, LaurentPoly)) * factorial(n)
                         for n, a in enumerate(padded)))

    # Inspection
    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def symbolic(self) -> bool:
        return isinstance(self.coeffs[0], LaurentPoly)

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def is_invertible(self) -> bool:
        return self.order >= 1 and self.coeffs[0] == 0 and self.coeffs[1] != 0

    def is_identity(self) -> bool:
        return self == Series.identity(self.order)

    # Operators
    def __add__(self, other: 'Series') -> 'Series':
        return series_add(self, other)

    def __sub__(self, other: 'Series') -> 'Series':
        return series_add(self, series_scale(other, -1))

    def __neg__(self) -> 'Series':
        return series_scale(self, -1)

    def __mul__(self, other: 'Series') -> 'Series':
        return series_mul(self, other)

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"


def _require_same_order(f: Series, g: Series) -> None:
    if f.order != g.order:
        raise OrderMismatch(f"orders differ: {f.order} vs {g.order}")


# Operations

def series_add(f: Series, g: Series) -> Series:
    _require_same_order(f, g)
    return Series(tuple(a + b for a, b in zip(f.coeffs, g.coeffs)))


def series_scale(f: Series, scalar) -> Series:
    return Series(tuple(c * scalar for c in f.coeffs))


def series_mul(f: Series, g: Series) -> Series:
    """(fg)_n = sum_k C(n,k) f_k g_{n-k}"""
    _require_same_order(f, g)
    symbolic = f.symbolic or g.symbolic
    out = []
    for n in range(f.order + 1):
        acc = _ring_zero(symbolic)
        for k in range(n + 1):
            a, b = f.coeffs[k], g.coeffs[n - k]
            if a != 0 and b != 0:
                acc = acc + a * b * binomial(n, k)
        out.append(acc)
    return Series(tuple(out))


def series_derivative(f: Series) -> Series:
    """(Df)_n = f_{n+1}; the result has order N-1"""
    if f.order < 1:
        raise OrderMismatch("cannot differentiate an order-0 series")
    return Series(f.coeffs[1:])


def series_truncate(f: Series, order: int) -> Series:
    if order > f.order or order < 0:
        raise OrderMismatch(f"cannot truncate order {f.order} to {order}")
    return Series(f.coeffs[:order + 1])


def series_compose(f: Series, g: Series) -> Series:
    """
    f o g by Faa di Bruno: h_n = sum_{k=0}^n f_k B_{n,k}(g_1, ..., g_{n-k+1}).

    Raises:
        InnerConstantTerm: g_0 != 0
        OrderMismatch: orders differ
    """
    _require_same_order(f, g)
    if g.coeffs[0] != 0:
        raise InnerConstantTerm(f"inner series has constant term {g.coeffs[0]}")
    symbolic = f.symbolic or g.symbolic
    inner = g.coeffs[1:]
    out = [f.coeffs[0]]
    for n in range(1, f.order + 1):
        acc = _ring_zero(symbolic)
        for k in range(1, n + 1):
            if f.coeffs[k] != 0:
                acc = acc + f.coeffs[k] * bell_eval(n, k, inner)
        out.append(acc)
    return Series(tuple(out))


def series_inverse(g: Series) -> Series:
    """
    Compositional inverse by order-by-order triangular solve of
    sum_k g_k B_{n,k}(inv_1, ...) = delta_{n,1}.

    Raises:
        NotInvertible: g_0 != 0 or g_1 == 0 (or a symbolic g_1 that is not a monomial)
    """
    if not g.is_invertible():
        raise NotInvertible(f"series with g_0={g.coeffs[0]}, g_1={g.coeffs[1] if g.order else '-'}")
    try:
        lead = _reciprocal(g.coeffs[1])
    except NonInvertibleSubstitution as e:
        raise NotInvertible(str(e)) from None
    symbolic = g.symbolic
    inv: List[Any] = [_ring_zero(symbolic), lead]
    for n in range(2, g.order + 1):
        acc = _ring_zero(symbolic)
        for k in range(2, n + 1):
            if g.coeffs[k] != 0:
                acc = acc + g.coeffs[k] * bell_eval(n, k, inv[1:])
        inv.append(-acc * lead)
    logger.debug(f"inverted series of order {g.order}")
    return Series(tuple(inv[:g.order + 1]))


def series_negate_argument(f: Series) -> Series:
    """f(-x): coefficient n becomes (-1)^n f_n"""
    return Series(tuple(-c if n % 2 else c for n, c in enumerate(f.coeffs)))


def series_power_over_factorial(g: Series, k: int) -> Series:
    """g^k / k!; its n-th coefficient is B_{n,k}(g_1, ...)"""
    if k < 0:
        raise RangeError(f"power must be non-negative, got {k}")
    if g.coeffs[0] != 0:
        raise InnerConstantTerm(f"series has constant term {g.coeffs[0]}")
    result = Series.constant(_ring_one(g.symbolic), g.order)
    for _ in range(k):
        result = series_mul(result, g)
    return series_scale(result, Fraction(1, factorial(k)))


def series_reciprocal(f: Series) -> Series:
    """
    Multiplicative inverse 1/f.

    Raises:
        DivisionByNonUnit: f_0 == 0
    """
    if f.coeffs[0] == 0:
        raise DivisionByNonUnit("division by a series with zero constant term")
    lead = _reciprocal(f.coeffs[0])
    out = [lead]
    for n in range(1, f.order + 1):
        acc = _ring_zero(f.symbolic)
        for k in range(1, n + 1):
            if f.coeffs[k] != 0:
                acc = acc + f.coeffs[k] * out[n - k] * binomial(n, k)
        out.append(-acc * lead)
    return Series(tuple(out))


def series_power(f: Series, exponent: int) -> Series:
    if exponent < 0:
        raise RangeError(f"power must be non-negative, got {exponent}")
    result = Series.constant(_ring_one(f.symbolic), f.order)
    base = f
    while exponent:
        if exponent & 1:
            result = series_mul(result, base)
        exponent >>= 1
        if exponent:
            base = series_mul(base, base)
    return result


def is_involution(f: Series) -> bool:
    """
    True iff f o f == id up to the truncation order.

    Raises:
        NotInvertible: f is not invertible
    """
    if not f.is_invertible():
        raise NotInvertible("involution test needs an invertible series")
    return series_compose(f, f).is_identity()


def is_odd(f: Series) -> bool:
    return all(c == 0 for c in f.coeffs[0::2])


def series_to_ordinary(f: Series) -> List:
    """Ordinary coefficients f_n / n! (display only)"""
    return [c * Fraction(1, factorial(n)) for n, c in enumerate(f.coeffs)]


def series_from_ordinary(coeffs: Iterable, order: int = None) -> Series:
    return Series.from_ordinary(list(coeffs), order)


def generic_series(order: int) -> Series:
    """sum_{n>=1} X_n x^n / n! over LaurentPoly"""
    return Series((LaurentPoly.zero(),) + tuple(LaurentPoly.variable(n) for n in range(1, order + 1)))
