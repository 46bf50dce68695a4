import random

import pytest
import sympy
from sympy import QQ, Rational

from sigmadep.algebra import X, BaseField, RatFunc
from sigmadep.calculus import (
    ContextCase,
    DeltaSigmaContext,
    Derivation,
    hermite_reduce,
    is_derivative,
    logderivative_decompose,
    residue_analysis,
    split_pole_at_zero,
)
from sigmadep.core.errors import InvalidQValueError, UnsupportedContextError

x = X
Q = BaseField.rationals()


def rf(expr, field=Q):
    return RatFunc.from_expr(expr, field)


def random_denominator(rng: random.Random):
    factors = [x - rng.randint(-3, 3), x**2 + rng.randint(1, 3), x**2 - rng.choice([2, 3, 5])]
    den = 1
    for factor in rng.sample(factors, rng.randint(1, 3)):
        den *= factor ** rng.randint(1, 3)
    return den


def random_ratfunc_expr(rng: random.Random):
    num = sum(rng.randint(-5, 5) * x**k for k in range(rng.randint(1, 4)))
    degree = rng.randint(1, 3)
    den = x**degree + sum(rng.randint(-3, 3) * x**k for k in range(degree))
    return sympy.sympify(num) / den


class TestContexts:
    def test_commutation(self):
        rng = random.Random(7)
        samples = [(x**2 + 1) / (x - 3)] + [random_ratfunc_expr(rng) for _ in range(99)]
        contexts = [
            DeltaSigmaContext.shift(),
            DeltaSigmaContext.qdiff_ddx(),
            DeltaSigmaContext.qdiff_ddx(2),
            DeltaSigmaContext.qdiff_euler(),
            DeltaSigmaContext.qdiff_euler(Rational(1, 3)),
        ]
        for ctx in contexts:
            for expr in samples:
                assert ctx.commutes_on(RatFunc.from_expr(expr, ctx.field)), (ctx.describe(), expr)

    def test_param_shift_moves_t_only(self):
        ctx = DeltaSigmaContext.param_shift()
        t = sympy.Symbol("t")
        f = rf(t / (x + 1), ctx.field)
        assert ctx.sigma(f) == rf((t + 1) / (x + 1), ctx.field)
        assert ctx.commutes_on(f)

    def test_hbar(self):
        assert DeltaSigmaContext.qdiff_ddx(3).hbar_d(2) == QQ(9)
        assert DeltaSigmaContext.qdiff_euler(3).hbar_d(2) == QQ(1)
        assert DeltaSigmaContext.shift().hbar() == QQ(1)

    def test_from_name(self):
        ctx = DeltaSigmaContext.from_name("qdiff-euler", "2")
        assert ctx.case is ContextCase.QDIFF_EULER
        assert ctx.derivation is Derivation.EULER
        assert ctx.q_is_algebraic
        with pytest.raises(UnsupportedContextError):
            DeltaSigmaContext.from_name("dilation")
        with pytest.raises(InvalidQValueError):
            DeltaSigmaContext.from_name("qdiff-ddx", "1")
        with pytest.raises(InvalidQValueError):
            DeltaSigmaContext.from_name("qdiff-ddx", "two")

    def test_field_must_match_case(self):
        with pytest.raises(UnsupportedContextError):
            DeltaSigmaContext(ContextCase.SHIFT, BaseField.parameter_t())


class TestHermiteReduce:
    def test_double_pole(self):
        decomposition = hermite_reduce(rf(1 / x**2))
        assert decomposition.g == rf(-1 / x)
        assert decomposition.h.is_zero
        assert decomposition.p.is_zero

    def test_polynomial_part(self):
        decomposition = hermite_reduce(rf((x**3 + 1) / x))
        assert decomposition.g.is_zero
        assert decomposition.h == rf(1 / x)
        assert decomposition.p.as_expr() == x**2

    def test_random_reconstruction(self):
        """f = g' + h + p with a squarefree denominator of h, on random inputs."""
        rng = random.Random(20240917)
        for _ in range(300):
            num = sympy.sympify(sum(rng.randint(-4, 4) * x**k for k in range(rng.randint(1, 6))))
            f = rf(num / random_denominator(rng))
            decomposition = hermite_reduce(f)
            assert decomposition.reconstruct() == f
            h = decomposition.h
            if not h.is_zero:
                assert h.den.gcd(h.den.diff(X)).degree() == 0
                assert h.num.degree() < h.den.degree()

    def test_is_derivative(self):
        ok, g = is_derivative(rf(-2 * x / (x**2 + 1) ** 2 + 3 * x**2))
        assert ok
        assert g.diff() == rf(-2 * x / (x**2 + 1) ** 2 + 3 * x**2)
        assert is_derivative(rf(1 / x)) == (False, None)


class TestResidueAnalysis:
    def test_all_rational(self):
        data = residue_analysis(rf(2 * x / (x**2 - 2)))
        assert data.all_residues_rational
        assert [rho for rho, _ in data.rational_residues] == [1]
        assert data.rational_residues[0][1].as_expr() == x**2 - 2

    def test_irrational_residues(self):
        data = residue_analysis(rf(1 / (x**2 - 2)))
        assert not data.all_residues_rational
        assert data.rational_residues == ()

    def test_flags(self):
        data = residue_analysis(rf(x + 1 / x**3 + 1 / x))
        assert data.pole_at_zero == (True, 3)
        assert data.has_polynomial_part
        assert not data.all_poles_simple

    def test_split_denominators_match_partial_fractions(self):
        """Residues of N / prod(x - r_i) are N(r_i) / D'(r_i)."""
        rng = random.Random(11)
        for _ in range(20):
            roots = rng.sample(range(-5, 6), rng.randint(1, 4))
            den = sympy.prod([x - r for r in roots])
            num = sympy.sympify(sum(rng.randint(-3, 3) * x**k for k in range(len(roots))))
            if num == 0:
                continue
            expected = {}
            for r in roots:
                value = Rational(num.subs(x, r)) / Rational(sympy.diff(den, x).subs(x, r))
                if value:
                    expected.setdefault(value, []).append(r)
            data = residue_analysis(rf(num / den))
            assert data.all_residues_rational
            found = {
                rho: sorted(int(root) for root in sympy.Poly(factor.as_expr(), x).ground_roots())
                for rho, factor in data.rational_residues
            }
            assert found == {rho: sorted(rs) for rho, rs in expected.items()}


class TestSplitPoleAtZero:
    def test_split(self):
        f = rf((x + 2) / (x**2 * (x - 1)))
        laurent, rest = split_pole_at_zero(f)
        assert laurent + rest == f
        assert laurent.den.as_expr() == x**2
        assert rest.pole_order_at_zero() == 0


class TestLogDerivativeDecompose:
    def test_shift_half_residue(self):
        certificate = logderivative_decompose(rf(1 / (2 * x)), DeltaSigmaContext.shift())
        assert certificate.N == 2
        assert certificate.f == rf(x)
        assert certificate.P.is_zero
        assert certificate.check()

    def test_shift_polynomial_part_relation(self):
        certificate = logderivative_decompose(rf(x + 1 / (x - 1)), DeltaSigmaContext.shift())
        assert certificate.relation == (1, -2, 1)
        assert certificate.check()

    def test_not_a_log_derivative(self):
        assert logderivative_decompose(rf(1 / x**2), DeltaSigmaContext.shift()) is None
        assert logderivative_decompose(rf(1 / (x**2 - 2)), DeltaSigmaContext.shift()) is None

    def test_q_transcendental_constant_only(self):
        ctx = DeltaSigmaContext.qdiff_ddx()
        assert logderivative_decompose(RatFunc.one(ctx.field), ctx) is None
        certificate = logderivative_decompose(RatFunc.from_expr(sympy.Rational(1, 3) / x, ctx.field), ctx)
        assert certificate.relation == (-1, 1)
        assert certificate.check()

    def test_q_algebraic_relation(self):
        ctx = DeltaSigmaContext.qdiff_ddx(2)
        certificate = logderivative_decompose(RatFunc.one(ctx.field), ctx)
        assert certificate.relation == (-2, 1)
        assert certificate.check()

    def test_euler_absorbs_integer_residue(self):
        ctx = DeltaSigmaContext.qdiff_euler()
        certificate = logderivative_decompose(RatFunc.constant(2, ctx.field), ctx)
        assert certificate.f == RatFunc.from_expr(x**2, ctx.field)
        assert not certificate.c
        assert certificate.check()

    def test_param_shift_unsupported(self):
        ctx = DeltaSigmaContext.param_shift()
        with pytest.raises(UnsupportedContextError):
            logderivative_decompose(RatFunc.one(ctx.field), ctx)
