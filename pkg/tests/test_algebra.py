import pickle
import random

import pytest
import sympy
from sympy import Poly, QQ, Rational

from sigmadep.algebra import (
    X,
    BaseField,
    RatFunc,
    clear_denominators,
    determinant,
    format_operator,
    format_rational,
    format_scalar,
    fraction_free_echelon,
    integer_roots,
    linear_relations,
    nullspace,
    ratfunc_nullspace,
    rational_roots,
    resultant,
    solve_left,
    solve_right,
    squarefree_decompose,
)
from sigmadep.algebra.polys import gcdex_diophantine, poly_from_expr
from sigmadep.core.errors import DivisionByZeroError, InvalidQValueError, SingularPointError, ZeroPolynomialError

x = X
q, t, s = sympy.symbols("q t s")


@pytest.fixture
def Q():
    return BaseField.rationals()


def rf(expr, field):
    return RatFunc.from_expr(expr, field)


def random_ratfunc(rng: random.Random, field: BaseField) -> RatFunc:
    num = sum(rng.randint(-3, 3) * x**k for k in range(rng.randint(0, 3)))
    den = 1 + sum(rng.randint(-2, 2) * x**k for k in range(1, rng.randint(1, 3)))
    return rf(num / den, field)


class TestBaseField:
    def test_domains(self):
        assert BaseField.rationals().domain == QQ
        assert BaseField.q_algebraic(2).domain == QQ
        assert BaseField.q_transcendental().symbol == q
        assert BaseField.parameter_t().symbol_names == frozenset({"t"})

    def test_invalid_q(self):
        for value in (0, 1, -1):
            with pytest.raises(InvalidQValueError):
                BaseField.q_algebraic(value)

    def test_q_element(self):
        assert BaseField.q_algebraic(Rational(1, 2)).q == QQ(1, 2)
        field = BaseField.q_transcendental()
        assert field.to_sympy(field.q) == q

    def test_algebraic_q_substitutes(self):
        field = BaseField.q_algebraic(3)
        assert field.convert(q + 1) == QQ(4)

    def test_rationality(self):
        field = BaseField.parameter_t()
        assert field.is_rational(field.convert(Rational(3, 4)))
        assert not field.is_rational(field.convert(t))
        assert field.as_rational(field.convert(Rational(-2, 5))) == Rational(-2, 5)


class TestPolys:
    def test_squarefree_decompose(self, Q):
        p = poly_from_expr(3 * (x - 1) ** 2 * (x + 2) ** 3 * x, Q)
        decomposition = squarefree_decompose(p)
        assert [k for _, k in decomposition.factors] == [1, 2, 3]
        assert decomposition.expand() == p
        with pytest.raises(ZeroPolynomialError):
            squarefree_decompose(poly_from_expr(0, Q))

    def test_resultant(self, Q):
        a = poly_from_expr(x**2 - 2, Q)
        b = poly_from_expr(x - 1, Q)
        assert resultant(a, b) == QQ(-1)
        with pytest.raises(ZeroPolynomialError):
            resultant(a, poly_from_expr(0, Q))

    def test_resultant_vanishes_exactly_on_common_factors(self, Q):
        rng = random.Random(500)

        def random_poly(degree):
            return poly_from_expr(x**degree + sum(rng.randint(-4, 4) * x**k for k in range(degree)), Q)

        shared = 0
        for _ in range(500):
            a, b = random_poly(rng.randint(1, 4)), random_poly(rng.randint(1, 4))
            if rng.random() < 0.3:
                common = random_poly(rng.randint(1, 2))
                a, b = a * common, b * common
            has_common_factor = a.gcd(b).degree() >= 1
            shared += has_common_factor
            assert (resultant(a, b) == 0) == has_common_factor
        assert shared >= 100

    def test_rational_roots_over_q(self, Q):
        p = poly_from_expr((x - Rational(1, 2)) ** 2 * (x + 3) * (x**2 + 1), Q)
        assert rational_roots(p, Q) == [(Rational(-3), 1), (Rational(1, 2), 2)]
        assert integer_roots(p, Q) == [-3]

    def test_rational_roots_over_function_field(self):
        field = BaseField.parameter_t()
        p = poly_from_expr((x - 2) * (x - t), field)
        assert rational_roots(p, field) == [(Rational(2), 1)]

    def test_gcdex_diophantine(self, Q):
        a, b, c = (poly_from_expr(e, Q) for e in (x + 1, x**2 + 1, x**3))
        u, v = gcdex_diophantine(a, b, c)
        assert u * a + v * b == c
        assert u.degree() < b.degree()


class TestRatFunc:
    def test_canonical_form(self, Q):
        f = rf((2 * x**2 - 2) / (4 * x - 4), Q)
        assert f == rf((x + 1) / 2, Q)
        assert f.den.is_monic or f.den.degree() == 0

    def test_division_by_zero(self, Q):
        with pytest.raises(DivisionByZeroError):
            RatFunc.one(Q) / RatFunc.zero(Q)
        with pytest.raises(DivisionByZeroError):
            RatFunc.zero(Q) ** -1

    def test_field_axioms_on_random_values(self, Q):
        rng = random.Random(7)
        for _ in range(25):
            f, g, h = (random_ratfunc(rng, Q) for _ in range(3))
            assert (f + g) * h == f * h + g * h
            assert f - f == 0
            if not g.is_zero:
                assert (f / g) * g == f

    def test_calculus(self, Q):
        f = rf(1 / (x - 1), Q)
        assert f.diff() == rf(-1 / (x - 1) ** 2, Q)
        assert f.euler() == rf(-x / (x - 1) ** 2, Q)
        assert f.shift(1) == rf(1 / x, Q)
        assert f.dilate(QQ(2)) == rf(1 / (2 * x - 1), Q)

    def test_parameter_shift_of_coefficients(self):
        field = BaseField.parameter_t()
        f = rf(t / (x + 1), field)
        moved = f.map_coefficients(lambda c: field.convert(field.to_sympy(c).subs(t, t + 1)))
        assert moved == rf((t + 1) / (x + 1), field)

    def test_valuations(self, Q):
        f = rf((x - 1) ** 2 / x**3, Q)
        assert f.pole_order_at_zero() == 3
        assert f.order_at(poly_from_expr(x - 1, Q)) == 2
        assert f.degree() == -1

    def test_evaluate(self, Q):
        f = rf((x + 1) / (x - 2), Q)
        assert f.evaluate(3) == QQ(4)
        with pytest.raises(SingularPointError):
            f.evaluate(2)

    def test_pickles(self):
        field = BaseField.parameter_s()
        f = rf((s * x + 1) / (x**2 - s), field)
        assert pickle.loads(pickle.dumps(f)) == f

    def test_polynomial_and_proper_parts(self, Q):
        f = rf((x**3 + 1) / (x - 1), Q)
        assert RatFunc.from_poly(f.polynomial_part(), Q) + f.proper_part() == f


class TestLinearAlgebra:
    def test_nullspace_normalized(self):
        rows = [[QQ(1), QQ(2), QQ(3)], [QQ(2), QQ(4), QQ(6)]]
        basis = nullspace(rows, 3, QQ)
        assert len(basis) == 2
        assert all(next(v for v in vector if v) == 1 for vector in basis)

    def test_linear_relations(self, Q):
        terms = [rf(1 / x, Q), rf(1 / (x + 1), Q), rf(1 / (x * (x + 1)), Q)]
        relations = linear_relations(terms, Q)
        assert relations == [[QQ(1), QQ(-1), QQ(-1)]]

    def test_no_relations(self, Q):
        assert linear_relations([rf(1 / x, Q), rf(x, Q)], Q) == []

    def test_determinant_over_rational_functions(self, Q):
        rows = [[rf(1 / x, Q), rf(x, Q)], [rf(1, Q), rf(x**2 / (x + 1), Q)]]
        assert determinant(rows, Q) == rf(x / (x + 1) - x, Q)
        assert determinant([[rf(x, Q), rf(1, Q)], [rf(x**2, Q), rf(x, Q)]], Q).is_zero

    def test_determinant_matches_sympy(self, Q):
        rng = random.Random(43)
        for n in (1, 2, 3, 4):
            rows = [[random_ratfunc(rng, Q) for _ in range(n)] for _ in range(n)]
            expected = sympy.Matrix([[f.as_expr() for f in row] for row in rows]).det()
            assert determinant(rows, Q) == rf(sympy.cancel(expected), Q)

    def test_solve_left_and_right(self, Q):
        rng = random.Random(44)
        for _ in range(10):
            rows = [[random_ratfunc(rng, Q) for _ in range(3)] for _ in range(3)]
            if determinant(rows, Q).is_zero:
                continue
            target = [random_ratfunc(rng, Q) for _ in range(3)]
            y = solve_right(rows, target, Q)
            assert [sum((a * b for a, b in zip(row, y)), RatFunc.zero(Q)) for row in rows] == target
            beta = solve_left(rows, target, Q)
            assert [sum((beta[i] * rows[i][j] for i in range(3)), RatFunc.zero(Q)) for j in range(3)] == target

    def test_singular_solve(self, Q):
        rows = [[rf(x, Q), rf(1, Q)], [rf(x**2, Q), rf(x, Q)]]
        with pytest.raises(ValueError):
            solve_right(rows, [rf(1, Q), rf(0, Q)], Q)

    def test_ratfunc_nullspace(self, Q):
        rows = [[rf(1, Q), rf(x, Q), rf(1 / x, Q)], [rf(x, Q), rf(x**2, Q), rf(1, Q)]]
        basis = ratfunc_nullspace(rows, 3, Q)
        assert len(basis) == 2
        for vector in basis:
            for row in rows:
                assert sum((a * b for a, b in zip(row, vector)), RatFunc.zero(Q)).is_zero

    def test_fraction_free_echelon_rank(self, Q):
        rows = [[rf(x, Q), rf(1, Q), rf(2, Q)], [rf(2 * x, Q), rf(2, Q), rf(4, Q)], [rf(0, Q), rf(x, Q), rf(1, Q)]]
        _, pivots, _ = fraction_free_echelon(clear_denominators(rows, Q), Q)
        assert pivots == [0, 1]


class TestPrinting:
    def test_rationals(self):
        assert format_rational(Rational(-3, 4)) == "-3/4"
        assert format_rational(5) == "5"

    def test_ratfunc(self, Q):
        assert str(rf((3 * x**2 + 1) / ((x - 1) ** 2 * (x + 2)), Q)) == "(3*x^2 + 1)/(x^3 - 3*x + 2)"
        assert str(rf(-x / 2, Q)) == "-1/2*x"
        assert str(rf(-1 / (2 * x**2), Q)) == "-1/(2*x^2)"
        assert str(rf((x + 1) / (6 * x - 6), Q)) == "(x + 1)/(6*(x - 1))"
        assert str(rf((x / 2 + Rational(1, 3)) / x, Q)) == "(3*x + 2)/(6*x)"
        assert str(RatFunc.zero(Q)) == "0"

    def test_scalar_over_t(self):
        field = BaseField.parameter_t()
        assert format_scalar(field.convert((2 * t + 2) / (2 * t)), field) == "(t + 1)/t"

    def test_operator(self):
        assert format_operator(["-x", "0", "1"], "D") == "D^2 - x"
        assert format_operator(["1", "(t + 1)/t"], "S") == "((t + 1)/t)*S + 1"
