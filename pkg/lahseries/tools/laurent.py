"""
Laurent Polynomial Tools
========================
Exact multivariate Laurent polynomials in X_1, X_2, ... with rational
coefficients. Only X_1 may appear with a negative exponent, which is all the
Stirling and Lah families ever need.
"""

from fractions import Fraction
from itertools import zip_longest
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union
import logging

from lahseries.models.errors import (
    ArityError, ExponentError, NonInvertibleSubstitution, ZeroAtPole
)

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class Monomial(tuple):
    """Exponent vector: entry j is the power of X_{j+1}; trailing zeros trimmed"""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int] = ()):
        exps = list(exponents)
        while exps and exps[-1] == 0:
            exps.pop()
        if any(e < 0 for e in exps[1:]):
            raise ExponentError(f"only X_1 may carry a negative exponent, got {tuple(exps)}")
        return super().__new__(cls, exps)

    @property
    def degree(self) -> int:
        return sum(self)

    def times(self, other: Sequence[int]) -> 'Monomial':
        return Monomial(a + b for a, b in zip_longest(self, other, fillvalue=0))

    def padded(self, width: int) -> Tuple[int, ...]:
        return tuple(self) + (0,) * (width - len(self))


def to_rational(value) -> Fraction:
    """Coerce int/str/Fraction input to an exact Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def _canonical(acc: Dict[Monomial, Fraction]) -> Dict[Monomial, Fraction]:
    """Drop zero coefficients and order terms graded-lexicographically"""
    live = [(m, c) for m, c in acc.items() if c != 0]
    width = max((len(m) for m, _ in live), default=0)
    live.sort(key=lambda item: (-item[0].degree, item[0].padded(width)))
    return {m: Fraction(c) for m, c in live}


class LaurentPoly:
    """
    Immutable Laurent polynomial in X_1^{+-1}, X_2, X_3, ...

    Terms are kept in canonical order: total degree descending, then exponent
    vectors ascending lexicographically. Two polynomials are equal iff their
    term maps are identical.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping, Iterable[Tuple[Sequence[int], Scalar]]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Monomial, Fraction] = {}
        for exps, coef in items:
            m = exps if isinstance(exps, Monomial) else Monomial(exps)
            acc[m] = acc.get(m, 0) + to_rational(coef)
        self._terms = _canonical(acc)

    # Constructors
    @classmethod
    def zero(cls) -> 'LaurentPoly':
        return cls()

    @classmethod
    def one(cls) -> 'LaurentPoly':
        return cls.constant(1)

    @classmethod
    def constant(cls, value: Scalar) -> 'LaurentPoly':
        return cls([((), value)])

    @classmethod
    def variable(cls, index: int, power: int = 1) -> 'LaurentPoly':
        """X_index ** power (index is 1-based)"""
        if index < 1:
            raise ArityError(f"variables are numbered from 1, got X_{index}")
        exps = [0] * index
        exps[index - 1] = power
        return cls([(exps, 1)])

    @classmethod
    def monomial(cls, exponents: Sequence[int], coef: Scalar = 1) -> 'LaurentPoly':
        return cls([(exponents, coef)])

    # Inspection
    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Monomial, Fraction]]:
        return list(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(len(m) == 0 for m in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_value(self) -> Fraction:
        return self._terms.get(Monomial(), Fraction(0))

    @property
    def variables(self) -> int:
        """Index of the highest variable appearing"""
        return max((len(m) for m in self._terms), default=0)

    def has_pole(self) -> bool:
        return any(m and m[0] < 0 for m in self._terms)

    def contains_variable(self, index: int) -> bool:
        return any(len(m) >= index and m[index - 1] != 0 for m in self._terms)

    # Arithmetic
    @staticmethod
    def _lift(other) -> 'LaurentPoly':
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({m: c * other for m, c in self._terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        acc: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1.times(m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def inverse(self) -> 'LaurentPoly':
        """Multiplicative inverse; defined for monomials in X_1 only"""
        if not self.is_monomial():
            raise NonInvertibleSubstitution(f"cannot invert non-monomial {self}")
        (m, c), = self._terms.items()
        try:
            return LaurentPoly([(tuple(-e for e in m), 1 / c)])
        except ExponentError:
            raise NonInvertibleSubstitution(f"inverse of {self} leaves the Laurent ring") from None

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, LaurentPoly):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = LaurentPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash(frozenset(self._terms.items()))

    # Evaluation
    def evaluate(self, args: Sequence[Scalar]) -> Fraction:
        """Exact value at X_j = args[j-1]"""
        if len(args) < self.variables:
            raise ArityError(f"need {self.variables} arguments, got {len(args)}")
        values = [to_rational(a) for a in args[:self.variables]]
        if self.has_pole() and values[0] == 0:
            raise ZeroAtPole(f"X_1 = 0 at a pole of {self}")
        total = Fraction(0)
        for m, c in self._terms.items():
            term = c
            for a, e in zip(values, m):
                if e:
                    term *= a ** e
            total += term
        return total

    def substitute(self, subs: Sequence[Union['LaurentPoly', Scalar]]) -> 'LaurentPoly':
        """Replace X_j by subs[j-1] and renormalise"""
        if len(subs) < self.variables:
            raise ArityError(f"need {self.variables} substitutions, got {len(subs)}")
        images = [LaurentPoly._lift(s) for s in subs[:self.variables]]
        powers: Dict[Tuple[int, int], LaurentPoly] = {}
        result = LaurentPoly.zero()
        for m, c in self._terms.items():
            term = LaurentPoly.constant(c)
            for j, e in enumerate(m):
                if not e:
                    continue
                key = (j, e)
                if key not in powers:
                    if e < 0 and not images[j].is_monomial():
                        raise NonInvertibleSubstitution(
                            f"X_{j + 1}^{e} needs the inverse of non-monomial {images[j]}"
                        )
                    powers[key] = images[j] ** e
                term = term * powers[key]
            result = result + term
        return result

    # Rendering
    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self._terms.items():
            text = _format_term(m, c)
            if not pieces:
                pieces.append(text)
            elif text.startswith("-"):
                pieces.append(f"- {text[1:]}")
            else:
                pieces.append(f"+ {text}")
        return " ".join(pieces)

    def __repr__(self):
        return f"LaurentPoly({self})"


def _format_term(m: Monomial, c: Fraction) -> str:
    factors = [f"X_{j}" if e == 1 else f"X_{j}^{e}" for j, e in enumerate(m, start=1) if e]
    if not factors:
        return str(c)
    body = "*".join(factors)
    if c == 1:
        return body
    if c == -1:
        return f"-{body}"
    return f"{c}*{body}"


# Operations

def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def poly_eval(p: LaurentPoly, args: Sequence[Scalar]) -> Fraction:
    """
    Evaluate p exactly.

    Raises:
        ZeroAtPole: args[0] == 0 while p has a negative X_1 power
        ArityError: args does not cover every variable of p
    """
    return p.evaluate(args)


def poly_substitute(p: LaurentPoly, subs: Sequence[Union[LaurentPoly, Scalar]]) -> LaurentPoly:
    """
    Compose p with the images subs (X_j -> subs[j-1]).

    Raises:
        NonInvertibleSubstitution: a negative power of a non-monomial image is needed
        ArityError: an appearing variable has no image
    """
    return p.substitute(subs)
