"""
Expression grammar of the command line (see docs/grammar.ebnf).

Text is tokenized, parsed by recursive descent into a small AST, and the AST is
evaluated into a RatFunc, a LinDiffOp (symbol D) or a SkewPoly (symbol S).
Juxtaposition is multiplication; for operators multiplication is composition.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Iterable, List, Union

import sympy

from sigmadep.algebra.fields import SYMBOLS, BaseField
from sigmadep.algebra.ratfunc import RatFunc
from sigmadep.calculus.context import DeltaSigmaContext
from sigmadep.core.errors import DivisionByZeroError, ExpressionSyntaxError, WrongSymbolForContextError
from sigmadep.groups.skew import SkewPoly
from sigmadep.ode.operators import LinDiffOp

logger = logging.getLogger(__name__)

SYMBOL_NAMES = ("x", "q", "t", "s", "D", "S")
_PUNCTUATION = "+-*/^()"
_FACTOR_START = ("number", "symbol", "(")


# --- AST ---


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Num, Sym, Neg, BinOp, Pow]


# --- tokenizer ---


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    """Splits text into numbers, one-letter symbols and punctuation."""
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(Token("number", text[start:i], start))
            continue
        if c in SYMBOL_NAMES:
            tokens.append(Token("symbol", c, i))
        elif c in _PUNCTUATION:
            tokens.append(Token(c, c, i))
        else:
            raise ExpressionSyntaxError(
                f"unexpected character {c!r}", i, ("number", "(", *SYMBOL_NAMES, *_PUNCTUATION)
            )
        i += 1
    tokens.append(Token("end", "", len(text)))
    return tokens


# --- parser ---


class Parser:
    """
    Recursive descent over the grammar

        expr  := term (("+" | "-") term)*
        term  := unary (("*" | "/") unary | unary)*
        unary := "-" unary | power
        power := atom ("^" ["-"] number)?
        atom  := number | symbol | "(" expr ")"
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def _expect(self, kind: str, expected: Iterable[str]) -> Token:
        if self.current.kind != kind:
            found = self.current.text or "end of input"
            raise ExpressionSyntaxError(f"unexpected {found!r}", self.current.position, expected)
        return self._advance()

    def parse(self) -> Node:
        node = self._expr()
        self._expect("end", ("+", "-", "*", "/", "^", ")", "end of input"))
        return node

    def _expr(self) -> Node:
        node = self._term()
        while self.current.kind in ("+", "-"):
            op = self._advance().kind
            node = BinOp(op, node, self._term())
        return node

    def _term(self) -> Node:
        node = self._unary()
        while True:
            kind = self.current.kind
            if kind in ("*", "/"):
                self._advance()
                node = BinOp(kind, node, self._unary())
            elif kind in _FACTOR_START:
                node = BinOp("*", node, self._unary())
            else:
                return node

    def _unary(self) -> Node:
        if self.current.kind == "-":
            self._advance()
            return Neg(self._unary())
        return self._power()

    def _power(self) -> Node:
        base = self._atom()
        if self.current.kind != "^":
            return base
        self._advance()
        sign = 1
        if self.current.kind == "-":
            self._advance()
            sign = -1
        exponent = self._expect("number", ("number", "-"))
        return Pow(base, sign * int(exponent.text))

    def _atom(self) -> Node:
        token = self.current
        if token.kind == "number":
            self._advance()
            return Num(int(token.text))
        if token.kind == "symbol":
            self._advance()
            return Sym(token.text)
        if token.kind == "(":
            self._advance()
            node = self._expr()
            self._expect(")", (")", "+", "-", "*", "/"))
            return node
        found = token.text or "end of input"
        raise ExpressionSyntaxError(f"unexpected {found!r}", token.position, ("number", "symbol", "(", "-"))


def parse(text: str) -> Node:
    """
    Raises:
        ExpressionSyntaxError: with the position of the offending token.
    """
    return Parser(text).parse()


def symbols(node: Node) -> frozenset:
    """Names of the symbols an AST mentions."""
    if isinstance(node, Sym):
        return frozenset({node.name})
    if isinstance(node, Num):
        return frozenset()
    if isinstance(node, (Neg, Pow)):
        return symbols(node.operand if isinstance(node, Neg) else node.base)
    return symbols(node.left) | symbols(node.right)


def unparse(node: Node) -> str:
    """Prints an AST with the fewest parentheses that parse back to the same tree."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Pow):
        base = unparse(node.base)
        if not isinstance(node.base, (Num, Sym)):
            base = f"({base})"
        return f"{base}^{node.exponent}"
    if isinstance(node, Neg):
        inner = unparse(node.operand)
        if isinstance(node.operand, BinOp):
            inner = f"({inner})"
        return f"-{inner}"
    left, right = unparse(node.left), unparse(node.right)
    if node.op in ("*", "/"):
        if isinstance(node.left, BinOp) and node.left.op in ("+", "-"):
            left = f"({left})"
        if isinstance(node.right, BinOp):
            right = f"({right})"
        return f"{left}{node.op}{right}"
    if isinstance(node.right, BinOp) and node.right.op in ("+", "-"):
        right = f"({right})"
    return f"{left} {node.op} {right}"


# --- evaluation ---


@dataclass(frozen=True)
class _Ring:
    """How AST leaves and operations map into one target ring."""

    constant: Callable
    symbol: Callable
    reciprocal: Callable


def _evaluate(node: Node, ring: _Ring):
    if isinstance(node, Num):
        return ring.constant(node.value)
    if isinstance(node, Sym):
        return ring.symbol(node.name)
    if isinstance(node, Neg):
        return -_evaluate(node.operand, ring)
    if isinstance(node, Pow):
        base = _evaluate(node.base, ring)
        if node.exponent < 0:
            base = ring.reciprocal(base)
        result = ring.constant(1)
        for _ in range(abs(node.exponent)):
            result = result * base
        return result
    left, right = _evaluate(node.left, ring), _evaluate(node.right, ring)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    return left * ring.reciprocal(right)


def _wrong_symbol(name: str, where: str) -> WrongSymbolForContextError:
    return WrongSymbolForContextError(f"symbol {name!r} is not available in {where}")


def _scalar_symbol(name: str, field: BaseField):
    """A field symbol as a domain element."""
    if name not in field.symbol_names:
        raise _wrong_symbol(name, field.describe())
    return field.convert(SYMBOLS[name])


def _ratfunc_ring(field: BaseField) -> _Ring:
    def symbol(name: str) -> RatFunc:
        if name == "x":
            return RatFunc.x(field)
        return RatFunc.constant(_scalar_symbol(name, field), field)

    def reciprocal(value: RatFunc) -> RatFunc:
        return RatFunc.one(field) / value

    return _Ring(constant=lambda v: RatFunc.constant(v, field), symbol=symbol, reciprocal=reciprocal)


def parse_ratfunc(text: str, field: BaseField) -> RatFunc:
    """
    Raises:
        ExpressionSyntaxError: for text outside the grammar.
        WrongSymbolForContextError: for D, S or a symbol foreign to the field.
        DivisionByZeroError: when the expression divides by zero.
    """
    return _evaluate(parse(text), _ratfunc_ring(field))


def parse_operator(text: str, ctx: DeltaSigmaContext) -> LinDiffOp:
    """A linear differential operator in D (the derivation of the context) over K(x)."""
    field, derivation = ctx.field, ctx.derivation
    scalars = _ratfunc_ring(field)

    def lift(value: RatFunc) -> LinDiffOp:
        return LinDiffOp((value,), field, derivation)

    def symbol(name: str) -> LinDiffOp:
        if name == "D":
            return LinDiffOp.delta_power(1, field, derivation)
        if name == "S":
            raise _wrong_symbol(name, "a differential operator")
        return lift(scalars.symbol(name))

    def reciprocal(value: LinDiffOp) -> LinDiffOp:
        if value.order > 0:
            raise DivisionByZeroError(f"cannot divide by the operator {value}")
        if value.is_zero:
            raise DivisionByZeroError("division by zero")
        return lift(scalars.reciprocal(value.coefficient(0)))

    return _evaluate(parse(text), _Ring(lambda v: lift(scalars.constant(v)), symbol, reciprocal))


def parse_skew(text: str, field: BaseField) -> SkewPoly:
    """A skew polynomial in S with coefficients in Q or Q(t); x is not allowed."""
    domain = field.domain

    def lift(value) -> SkewPoly:
        return SkewPoly((value,), field)

    def symbol(name: str) -> SkewPoly:
        if name == "S":
            return SkewPoly.sigma_power(1, field)
        if name in ("x", "D"):
            raise _wrong_symbol(name, "a skew polynomial")
        return lift(_scalar_symbol(name, field))

    def reciprocal(value: SkewPoly) -> SkewPoly:
        if value.order > 0:
            raise DivisionByZeroError(f"cannot divide by the skew polynomial {value}")
        if value.is_zero:
            raise DivisionByZeroError("division by zero")
        return lift(domain.quo(domain.one, value.coefficient(0)))

    return _evaluate(parse(text), _Ring(lambda v: lift(domain.convert(v)), symbol, reciprocal))


def parse_rational(text: str) -> sympy.Rational:
    """A rational constant such as ``-3/4``."""
    value = parse_ratfunc(text, BaseField.rationals())
    if not value.is_constant:
        raise WrongSymbolForContextError(f"{text!r} is not a rational constant")
    return BaseField.rationals().to_sympy(value.constant_value())
