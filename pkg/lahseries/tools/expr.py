"""
Series Expression Tools
=======================
A small closed-form language for generating truncated series:

    expr   := term (('+'|'-') term)*
    term   := signed (('*'|'/') signed)*
    signed := '-' signed | factor
    factor := atom ('^' uint)?
    atom   := uint | 'x' | '(' expr ')' | func '(' expr ')'
    func   := exp | sin | cos | log

Operators are left-associative; unary minus is sugar for 0 - operand and
Const/Const folds into a single rational literal while parsing.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union
import logging

from pyparsing import (
    Forward, Keyword, MatchFirst, Optional, ParseBaseException, Suppress,
    Word, ZeroOrMore, nums, one_of
)

from lahseries.models.errors import (
    DivisionByNonUnit, ExprSyntaxError, TranscendentalAtNonzeroConstant
)
from lahseries.tools.bell import factorial
from lahseries.tools.series import (
    Series, series_add, series_compose, series_mul, series_power,
    series_reciprocal, series_scale
)

logger = logging.getLogger(__name__)

FUNCTIONS = ("exp", "sin", "cos", "log")


# AST
@dataclass(frozen=True)
class Const:
    value: Fraction


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Add:
    left: 'ExprNode'
    right: 'ExprNode'


@dataclass(frozen=True)
class Sub:
    left: 'ExprNode'
    right: 'ExprNode'


@dataclass(frozen=True)
class Mul:
    left: 'ExprNode'
    right: 'ExprNode'


@dataclass(frozen=True)
class Div:
    left: 'ExprNode'
    right: 'ExprNode'


@dataclass(frozen=True)
class Pow:
    base: 'ExprNode'
    exponent: int


@dataclass(frozen=True)
class Apply:
    func: str
    arg: 'ExprNode'


ExprNode = Union[Const, Var, Add, Sub, Mul, Div, Pow, Apply]

_BINARY = {"+": Add, "-": Sub, "*": Mul, "/": Div}


def _fold(tokens):
    items = list(tokens)
    node = items[0]
    for op, right in zip(items[1::2], items[2::2]):
        if op == "/" and isinstance(node, Const) and isinstance(right, Const) and right.value != 0:
            node = Const(node.value / right.value)
        else:
            node = _BINARY[op](node, right)
    return node


def _build_grammar():
    lpar, rpar = Suppress("("), Suppress(")")
    uint = Word(nums)

    expr = Forward()
    signed = Forward()

    number = uint.copy().set_parse_action(lambda t: Const(Fraction(int(t[0]))))
    var = Keyword("x").set_parse_action(lambda t: Var())
    func = MatchFirst([Keyword(name) for name in FUNCTIONS])
    call = (func + lpar + expr + rpar).set_parse_action(lambda t: Apply(t[0], t[1]))
    atom = number | call | var | (lpar + expr + rpar)

    factor = (atom + Optional(Suppress("^") + uint)).set_parse_action(
        lambda t: Pow(t[0], int(t[1])) if len(t) > 1 else t[0]
    )
    signed <<= (Suppress("-") + signed).set_parse_action(lambda t: Sub(Const(Fraction(0)), t[0])) | factor
    term = (signed + ZeroOrMore(one_of("* /") + signed)).set_parse_action(_fold)
    expr <<= (term + ZeroOrMore(one_of("+ -") + term)).set_parse_action(_fold)
    return expr


GRAMMAR = _build_grammar()

# deeper nesting exhausts the interpreter stack inside pyparsing
MAX_NESTING = 32


def _byte_offset(text: str, loc: int) -> int:
    return len(text[:loc].encode("utf-8"))


def _check_nesting(text: str) -> None:
    depth = 0
    negations = 0
    for loc, char in enumerate(text):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
        if char == "-":
            negations += 1
        elif not char.isspace():
            negations = 0
        if depth > MAX_NESTING or negations > MAX_NESTING:
            raise ExprSyntaxError(f"expression nested too deeply (limit {MAX_NESTING})",
                                  _byte_offset(text, loc))


def parse(text: str) -> ExprNode:
    """
    Parse an expression into its AST.

    Parentheses and runs of unary minus may nest at most MAX_NESTING deep.

    Raises:
        ExprSyntaxError: text is not in the grammar (byte offset of the failure attached)
    """
    _check_nesting(text)
    try:
        return GRAMMAR.parse_string(text, parse_all=True)[0]
    except ParseBaseException as e:
        raise ExprSyntaxError(e.msg, _byte_offset(text, e.loc)) from None
    except RecursionError:
        raise ExprSyntaxError("expression nested too deeply", 0) from None


def format_expr(node: ExprNode) -> str:
    """Fully parenthesised rendering that parses back to the same AST"""
    if isinstance(node, Const):
        if node.value.denominator == 1 and node.value >= 0:
            return str(node.value.numerator)
        return f"({node.value})"
    if isinstance(node, Var):
        return "x"
    if isinstance(node, Pow):
        return f"({format_expr(node.base)}^{node.exponent})"
    if isinstance(node, Apply):
        return f"{node.func}({format_expr(node.arg)})"
    symbol = {Add: "+", Sub: "-", Mul: "*", Div: "/"}[type(node)]
    return f"({format_expr(node.left)} {symbol} {format_expr(node.right)})"


# Taylor coefficients in the exponential convention

def _exp_series(order: int) -> Series:
    return Series((1,) * (order + 1))


def _sin_series(order: int) -> Series:
    return Series(tuple(0 if n % 2 == 0 else (-1) ** ((n - 1) // 2) for n in range(order + 1)))


def _cos_series(order: int) -> Series:
    return Series(tuple((-1) ** (n // 2) if n % 2 == 0 else 0 for n in range(order + 1)))


def _log1p_series(order: int) -> Series:
    return Series((0,) + tuple((-1) ** (n - 1) * factorial(n - 1) for n in range(1, order + 1)))


_OUTER = {"exp": _exp_series, "sin": _sin_series, "cos": _cos_series}


def eval_series(node: ExprNode, order: int) -> Series:
    """
    Truncated series of an expression at the given order.

    Raises:
        DivisionByNonUnit: a denominator has zero constant term
        TranscendentalAtNonzeroConstant: exp/sin/cos of a series with nonzero
            constant term, or log of one whose constant term is not 1
    """
    if isinstance(node, Const):
        return Series.constant(node.value, order)
    if isinstance(node, Var):
        return Series.identity(order)
    if isinstance(node, Add):
        return series_add(eval_series(node.left, order), eval_series(node.right, order))
    if isinstance(node, Sub):
        return series_add(eval_series(node.left, order), series_scale(eval_series(node.right, order), -1))
    if isinstance(node, Mul):
        return series_mul(eval_series(node.left, order), eval_series(node.right, order))
    if isinstance(node, Div):
        denominator = eval_series(node.right, order)
        if denominator[0] == 0:
            raise DivisionByNonUnit(f"denominator {format_expr(node.right)} vanishes at 0")
        return series_mul(eval_series(node.left, order), series_reciprocal(denominator))
    if isinstance(node, Pow):
        return series_power(eval_series(node.base, order), node.exponent)
    if isinstance(node, Apply):
        return _apply(node, eval_series(node.arg, order), order)
    raise TypeError(f"not an expression node: {node!r}")


def _apply(node: Apply, arg: Series, order: int) -> Series:
    if node.func == "log":
        if arg[0] != 1:
            raise TranscendentalAtNonzeroConstant(
                f"log needs constant term 1, {format_expr(node.arg)} has {arg[0]}"
            )
        shifted = series_add(arg, Series.constant(-1, order))
        return series_compose(_log1p_series(order), shifted)
    if arg[0] != 0:
        raise TranscendentalAtNonzeroConstant(
            f"{node.func} needs constant term 0, {format_expr(node.arg)} has {arg[0]}"
        )
    return series_compose(_OUTER[node.func](order), arg)


def eval_text(text: str, order: int) -> Series:
    """parse + eval_series"""
    series = eval_series(parse(text), order)
    logger.debug(f"evaluated {text!r} to order {order}")
    return series
