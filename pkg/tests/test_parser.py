import random

import pytest
from sympy import Rational

from sigmadep.algebra import X, BaseField, RatFunc
from sigmadep.calculus import DeltaSigmaContext, Derivation
from sigmadep.cli.parser import (
    BinOp,
    Neg,
    Num,
    Pow,
    Sym,
    parse,
    parse_operator,
    parse_ratfunc,
    parse_rational,
    parse_skew,
    symbols,
    tokenize,
    unparse,
)
from sigmadep.core.errors import DivisionByZeroError, ExpressionSyntaxError, WrongSymbolForContextError
from sigmadep.groups import SkewPoly
from sigmadep.ode import LinDiffOp

x = X
Q = BaseField.rationals()
QT = BaseField.parameter_t()
t = QT.symbol


def random_ast(rng: random.Random, depth: int):
    if depth == 0 or rng.random() < 0.25:
        return Num(rng.randint(0, 9)) if rng.random() < 0.4 else Sym(rng.choice("xt"))
    kind = rng.choice(["+", "-", "*", "/", "neg", "pow"])
    if kind == "neg":
        return Neg(random_ast(rng, depth - 1))
    if kind == "pow":
        return Pow(random_ast(rng, depth - 1), rng.choice([-2, -1, 2, 3]))
    return BinOp(kind, random_ast(rng, depth - 1), random_ast(rng, depth - 1))


def random_coefficient(rng: random.Random, var):
    num = sum(Rational(rng.randint(-4, 4), rng.randint(1, 3)) * var**k for k in range(rng.randint(0, 2)))
    return num / (var + rng.randint(1, 3)) ** rng.randint(0, 1)


class TestTokenize:
    def test_tokens(self):
        kinds = [(tok.kind, tok.text, tok.position) for tok in tokenize("12x^2")]
        assert kinds == [("number", "12", 0), ("symbol", "x", 2), ("^", "^", 3), ("number", "2", 4), ("end", "", 5)]

    def test_unknown_character(self):
        with pytest.raises(ExpressionSyntaxError) as info:
            tokenize("x $ 1")
        assert info.value.position == 2
        assert info.value.code == "syntax_error"


class TestParse:
    def test_precedence(self):
        assert parse("2x^2 + 1") == BinOp("+", BinOp("*", Num(2), Pow(Sym("x"), 2)), Num(1))
        assert parse("-x^2") == Neg(Pow(Sym("x"), 2))
        assert parse("x - 1 - x") == BinOp("-", BinOp("-", Sym("x"), Num(1)), Sym("x"))

    def test_juxtaposition(self):
        assert parse("x(x + 1)") == parse("x*(x + 1)")
        assert parse("D x") == BinOp("*", Sym("D"), Sym("x"))

    def test_negative_exponent(self):
        assert parse("x^-3") == Pow(Sym("x"), -3)

    @pytest.mark.parametrize(
        "text,position",
        [("1/(x", 4), ("x + * 2", 4), ("x^y", 2), ("(x))", 3), ("", 0)],
    )
    def test_error_positions(self, text, position):
        with pytest.raises(ExpressionSyntaxError) as info:
            parse(text)
        assert info.value.position == position
        assert info.value.expected

    def test_unparse_round_trip(self):
        rng = random.Random(2024)
        for _ in range(200):
            node = random_ast(rng, 4)
            assert parse(unparse(node)) == node

    def test_symbols(self):
        assert symbols(parse("t*S^2 - (t + 1)/t")) == frozenset({"t", "S"})
        assert symbols(parse("-S^3 + 2")) == frozenset({"S"})
        assert symbols(parse("12")) == frozenset()

    def test_unparse_minimal(self):
        assert unparse(parse("(x + 1)*(x - 1)")) == "(x + 1)*(x - 1)"
        assert unparse(parse("(x*2) + (3)")) == "x*2 + 3"
        assert unparse(parse("x - (1 - x)")) == "x - (1 - x)"


class TestEvaluate:
    def test_ratfunc(self):
        assert parse_ratfunc("1/(x^2 - 1)", Q) == RatFunc.from_expr(1 / (x**2 - 1), Q)
        assert parse_ratfunc("(t + 1)/x", QT) == RatFunc.from_expr((t + 1) / x, QT)
        assert parse_ratfunc("x^-2", Q) == RatFunc.from_expr(x**-2, Q)

    def test_value_round_trip(self):
        rng = random.Random(9)
        for _ in range(1000):
            num = sum(Rational(rng.randint(-5, 5), rng.randint(1, 3)) * x**k for k in range(rng.randint(1, 4)))
            den = x ** rng.randint(0, 2) * (x + rng.randint(-2, 2)) ** rng.randint(0, 2)
            f = RatFunc.from_expr(num / den, Q)
            assert parse_ratfunc(str(f), Q) == f

    def test_parameter_round_trip(self):
        f = RatFunc.from_expr((t**2 + 1) / (t * x - 2) + 1 / (t + 1), QT)
        assert parse_ratfunc(str(f), QT) == f

    def test_wrong_symbols(self):
        with pytest.raises(WrongSymbolForContextError):
            parse_ratfunc("t*x", Q)
        with pytest.raises(WrongSymbolForContextError):
            parse_ratfunc("D", Q)
        with pytest.raises(WrongSymbolForContextError):
            parse_ratfunc("q", QT)

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZeroError):
            parse_ratfunc("1/(x - x)", Q)

    def test_rational(self):
        assert parse_rational("-3/4") == Rational(-3, 4)
        with pytest.raises(WrongSymbolForContextError):
            parse_rational("x")


class TestOperators:
    def test_operator(self):
        shift = DeltaSigmaContext.shift()
        assert parse_operator("D^2 - x", shift) == LinDiffOp.from_coefficients([-x, 0, 1], Q)
        assert parse_operator("D x", shift) == LinDiffOp.from_coefficients([1, x], Q)
        assert parse_operator("x D", shift) == LinDiffOp.from_coefficients([0, x], Q)
        assert parse_operator("(D - 1/x)/2", shift) == LinDiffOp.from_coefficients([-1 / (2 * x), Rational(1, 2)], Q)

    def test_euler_derivation(self):
        op = parse_operator("D - 2", DeltaSigmaContext.qdiff_euler())
        assert op.derivation is Derivation.EULER

    def test_operator_round_trip(self):
        shift = DeltaSigmaContext.shift()
        for text in ["D^2 - 2/x^2", "x^2*D^3 + (x + 1)/x*D - 1", "-1/2*D + x"]:
            op = parse_operator(text, shift)
            assert parse_operator(str(op), shift) == op

    def test_random_operator_round_trip(self):
        rng = random.Random(10)
        shift = DeltaSigmaContext.shift()
        for _ in range(500):
            order = rng.randint(0, 3)
            values = [random_coefficient(rng, x) for _ in range(order)]
            values.append(rng.choice([1, -1, Rational(1, 2), x, x**2 - 1, 1 / (x + 2)]))
            op = LinDiffOp.from_coefficients(values, Q)
            assert parse_operator(str(op), shift) == op

    def test_random_skew_round_trip(self):
        rng = random.Random(11)
        for _ in range(500):
            order = rng.randint(0, 3)
            values = [random_coefficient(rng, t) for _ in range(order)]
            values.append(rng.choice([1, -1, Rational(3, 2), t, t + 1]))
            op = SkewPoly.from_values(values, QT)
            assert parse_skew(str(op), QT) == op

    def test_operator_errors(self):
        shift = DeltaSigmaContext.shift()
        with pytest.raises(DivisionByZeroError):
            parse_operator("1/D", shift)
        with pytest.raises(WrongSymbolForContextError):
            parse_operator("S + 1", shift)

    def test_skew(self):
        assert parse_skew("S^2 - 1", Q) == SkewPoly.from_values([-1, 0, 1], Q)
        assert parse_skew("S t", QT) == SkewPoly.from_values([0, t + 1], QT)
        assert parse_skew("t S", QT) == SkewPoly.from_values([0, t], QT)
        op = parse_skew("t*S^2 - (t + 1)/t", QT)
        assert parse_skew(str(op), QT) == op

    def test_skew_errors(self):
        with pytest.raises(WrongSymbolForContextError):
            parse_skew("x*S", QT)
        with pytest.raises(WrongSymbolForContextError):
            parse_skew("D", Q)
        with pytest.raises(DivisionByZeroError):
            parse_skew("1/S", Q)
