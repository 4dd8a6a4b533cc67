"""
Lahseries Data Models
=====================
Core records shared by the algebra tools, the verification suites and the CLI.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from lahseries.models.errors import ZeroLeadingSeed

# Enums
class Family(Enum):
    BELL = "B"
    STIRLING_FIRST = "A"
    LAH = "L"

class SeedKind(Enum):
    EVEN = "even"
    ODD = "odd"

class Convention(Enum):
    EXPONENTIAL = "exponential"
    ORDINARY = "ordinary"

class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"

class CheckMode(Enum):
    SYMBOLIC = "symbolic"
    NUMERIC = "numeric"

# Data Models
@dataclass(frozen=True)
class PartitionMultiplicity:
    """Multiplicities c_1..c_m of an integer partition (c_j = number of parts equal to j)"""
    counts: Tuple[int, ...]

    @property
    def blocks(self) -> int:
        return sum(self.counts)

    @property
    def total(self) -> int:
        return sum(j * c for j, c in enumerate(self.counts, start=1))

@dataclass(frozen=True)
class SeedSpec:
    """Free parameters for involution generation (EVEN) or conjugator construction (ODD)"""
    kind: SeedKind
    values: Tuple[Any, ...] = ()

    def __post_init__(self):
        values = tuple(Fraction(v) if isinstance(v, (int, str)) else v for v in self.values)
        object.__setattr__(self, "values", values)
        if self.kind is SeedKind.ODD and (not values or values[0] == 0):
            raise ZeroLeadingSeed("odd seeds must start with a nonzero g_1")

    @classmethod
    def even(cls, values) -> 'SeedSpec':
        return cls(SeedKind.EVEN, tuple(values))

    @classmethod
    def odd(cls, values) -> 'SeedSpec':
        return cls(SeedKind.ODD, tuple(values))

@dataclass
class CheckFailure:
    """A single violated identity instance"""
    n: int
    k: Optional[int] = None
    detail: str = ""

@dataclass
class CheckReport:
    """Outcome of an identity check over a triangle range"""
    name: str
    max_n: int
    mode: CheckMode = CheckMode.SYMBOLIC
    checked: int = 0
    failures: List[CheckFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

@dataclass
class InvolutionReport:
    """Per-order check of sum_k f_k B_{n,k}(f) = delta_{n,1}"""
    order: int
    failing_orders: List[int] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def first_failure(self) -> Optional[int]:
        return self.failing_orders[0] if self.failing_orders else None

    @property
    def passed(self) -> bool:
        return not self.failing_orders

@dataclass
class OddTransferResult:
    """Comparison of the involutions generated by two conjugators"""
    equal: bool
    transfer: Any  # the series psi = inverse(g) o h
    transfer_is_odd: bool

@dataclass
class SuiteResult:
    """Verification suite outcome"""
    name: str
    passed: bool
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    seconds: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": list(self.failures),
        }

@dataclass
class ReproductionOutcome:
    """One reproduced published value compared against its committed fixture"""
    item: str
    description: str
    passed: bool
    diff: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "item": self.item,
            "description": self.description,
            "passed": self.passed,
            "diff": self.diff,
        }
