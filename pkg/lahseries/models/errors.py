"""
Lahseries Errors
================
Exception hierarchy shared by every module. All errors derive from
``ValueError`` so callers that only guard against bad input keep working.
"""


class LahseriesError(ValueError):
    """Base class for all library errors"""


# exact-algebra
class ZeroAtPole(LahseriesError):
    """Evaluation at X_1 = 0 of a polynomial with a negative X_1 power"""


class ArityError(LahseriesError):
    """Too few arguments for the variables present"""


class NonInvertibleSubstitution(LahseriesError):
    """A negative power of a non-monomial image would be required"""


class ExponentError(LahseriesError):
    """Negative exponent outside X_1"""


# power-series
class OrderMismatch(LahseriesError):
    """Binary series operation on different truncation orders"""


class InnerConstantTerm(LahseriesError):
    """Inner series of a composition has a nonzero constant term"""


class NotInvertible(LahseriesError):
    """Series is not compositionally invertible (f_0 != 0 or f_1 == 0)"""


# bell-partitions / stirling-lah
class RangeError(LahseriesError):
    """Triangle index outside its domain"""


# involution-lab
class InsufficientSeeds(LahseriesError):
    """Not enough free parameters for the requested order"""


class NotInvolution(LahseriesError):
    """Series is not an involution"""


class TrivialInvolution(LahseriesError):
    """The identity has no conjugate form with -id"""


class ZeroLeadingSeed(LahseriesError):
    """Odd seed list starts with g_1 = 0"""


class InconsistentTransfer(LahseriesError):
    """Odd-transfer characterisation violated, or a non-odd transfer given"""


# series-expr
class ExprSyntaxError(LahseriesError):
    """Expression text does not match the grammar; offset counts UTF-8 bytes"""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class DivisionByNonUnit(LahseriesError):
    """Division by a series with zero constant term"""


class TranscendentalAtNonzeroConstant(LahseriesError):
    """exp/sin/cos at a nonzero constant term, or log away from 1"""


# wire formats
class DocumentError(LahseriesError):
    """JSON document does not match the polynomial or series wire format"""


# cli
class FixtureError(LahseriesError):
    """Committed fixture missing or malformed"""
