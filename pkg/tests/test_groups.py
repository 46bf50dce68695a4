import random

import pytest
import sympy

from sigmadep.algebra import X, BaseField, RatFunc
from sigmadep.calculus import DeltaSigmaContext
from sigmadep.core import Outcome
from sigmadep.core.errors import (
    BothZeroError,
    DivisionByZeroError,
    FieldNotLinearlySigmaClosed,
    InvalidLeadingExponentError,
    NonMonicError,
    ZeroOperatorError,
    ZeroPolynomialError,
)
from sigmadep.criteria import additive_dependence_multi
from sigmadep.groups import (
    GaSubgroup,
    MupRelation,
    SkewPoly,
    classify_gagm,
    ga_membership,
    mup_period,
    realize_ga_subgroup,
    recurrence_rational_solutions,
    skew_left_lcm,
    skew_right_divide,
    skew_right_gcd,
    twist,
)

Q = BaseField.rationals()
QT = BaseField.parameter_t()
t = QT.symbol


def sk(*values, field=QT):
    return SkewPoly.from_values(values, field)


def random_skew(rng: random.Random, max_order: int = 3) -> SkewPoly:
    order = rng.randint(0, max_order)
    values = [rng.randint(-3, 3) + rng.randint(-2, 2) * t for _ in range(order)]
    values.append(rng.choice([1, 2, t, t + 1]))
    return sk(*values)


class TestSkewPoly:
    def test_commutation_rule(self):
        sigma = SkewPoly.sigma_power(1, QT)
        assert sigma * sk(t) == sk(0, t + 1)
        assert sk(t) * sigma == sk(0, t)

    def test_trivial_twist_over_q(self):
        assert twist(Q.convert(3), 2, Q) == Q.convert(3)
        assert sk(2, 1, field=Q) * sk(-1, 1, field=Q) == sk(-2, 1, 1, field=Q)

    def test_inspection(self):
        p = sk(0, 0, 3, 0)
        assert p.order == 2
        assert p.support == (2,)
        assert not p.is_monic()
        assert p.monic() == SkewPoly.sigma_power(2, QT)
        assert SkewPoly.zero(QT).order == -1
        with pytest.raises(ZeroPolynomialError):
            SkewPoly.zero(QT).leading

    def test_apply(self):
        difference = sk(-1, 1)
        assert difference.apply(QT.convert(t**2)) == QT.convert(2 * t + 1)
        y = RatFunc.from_expr(t / X, QT)
        assert difference.apply(y) == RatFunc.from_expr(1 / X, QT)

    def test_str(self):
        assert str(sk(-1, 1, field=Q)) == "S - 1"

    def test_unsupported_field(self):
        with pytest.raises(ValueError):
            SkewPoly.from_values([1], BaseField.parameter_s())

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZeroError):
            skew_right_divide(sk(1, 1), SkewPoly.zero(QT))

    def test_both_zero(self):
        with pytest.raises(BothZeroError):
            skew_right_gcd(SkewPoly.zero(QT), SkewPoly.zero(QT))
        with pytest.raises(BothZeroError):
            skew_left_lcm(SkewPoly.zero(QT), SkewPoly.zero(QT))


class TestSkewEuclid:
    def test_right_division(self):
        rng = random.Random(31)
        for _ in range(500):
            a, b = random_skew(rng, 4), random_skew(rng, 2)
            q, r = skew_right_divide(a, b)
            assert q * b + r == a
            assert r.order < b.order

    def test_gcd_and_lcm(self):
        rng = random.Random(32)
        for _ in range(500):
            common = random_skew(rng, 1)
            a = random_skew(rng, 2) * common
            b = random_skew(rng, 2) * common
            g = skew_right_gcd(a, b)
            assert g.is_monic()
            assert skew_right_divide(a, g)[1].is_zero
            assert skew_right_divide(b, g)[1].is_zero
            assert skew_right_divide(g, common)[1].is_zero
            lcm = skew_left_lcm(a, b)
            assert lcm.is_monic()
            assert skew_right_divide(lcm, a)[1].is_zero
            assert skew_right_divide(lcm, b)[1].is_zero
            assert lcm.order == a.order + b.order - g.order

    def test_gcd_with_zero(self):
        p = sk(t, 2)
        assert skew_right_gcd(p, SkewPoly.zero(QT)) == p.monic()
        assert skew_left_lcm(p, SkewPoly.zero(QT)).is_zero


class TestGaSubgroups:
    def test_lattice(self):
        minus, plus = GaSubgroup(sk(-1, 1, field=Q)), GaSubgroup(sk(1, 1, field=Q))
        assert minus.meet(plus).generator == sk(1, field=Q)
        join = minus.join(plus)
        assert join.generator == sk(-1, 0, 1, field=Q)
        assert join.contains_subgroup(minus)
        assert join.contains_subgroup(plus)
        assert not minus.contains_subgroup(join)

    def test_membership(self):
        group = GaSubgroup(sk(-1, 1, field=Q))
        assert ga_membership(sk(-1, 0, 1, field=Q), group)
        assert not ga_membership(sk(1, 1, field=Q), group)
        assert group.contains(SkewPoly.zero(Q))

    def test_whole_group(self):
        whole = GaSubgroup(SkewPoly.zero(QT))
        assert whole.contains_subgroup(GaSubgroup(sk(-1, 1)))
        assert not whole.contains(sk(-1, 1))
        assert whole.meet(whole) == whole

    def test_flags(self):
        assert GaSubgroup(sk(-1, 1)).sigma_integral
        assert GaSubgroup(sk(-1, 1)).perfectly_sigma_reduced
        assert not GaSubgroup(sk(0, 1)).sigma_integral

    def test_generator_is_monic(self):
        assert GaSubgroup(sk(2, 2 * t)).generator == sk(1 / t, 1)

    def test_classify(self):
        assert classify_gagm(sk(0, 0, 0, 1, field=Q)).case == "i"
        case = classify_gagm(sk(0, -2, 0, 1, field=Q))
        assert (case.case, case.n, case.m) == ("ii", 3, 1)
        with pytest.raises(ZeroPolynomialError):
            classify_gagm(SkewPoly.zero(Q))


def period_by_matrix_powers(p: int, exponents) -> tuple:
    """Least (m, d) with M^(m+d) == M^m for the companion matrix M of sigma on F_p^l."""
    l = len(exponents) - 1
    if l == 0:
        return 0, 1
    inv = pow(exponents[-1] % p, -1, p)
    beta = [(-a * inv) % p for a in exponents[:-1]]
    m = [[0] * l for _ in range(l)]
    for i in range(l - 1):
        m[i + 1][i] = 1
    for i in range(l):
        m[i][l - 1] = beta[i]

    def mul(a, b):
        return tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(l)) % p for j in range(l)) for i in range(l)
        )

    power = tuple(tuple(int(i == j) for j in range(l)) for i in range(l))
    seen = {}
    k = 0
    while power not in seen:
        seen[power] = k
        power = mul(power, m)
        k += 1
    return seen[power], k - seen[power]


class TestMupPeriod:
    @pytest.mark.parametrize(
        "p,exponents,expected",
        [
            (5, (2, 1), (0, 4)),
            (7, (1, 3), (0, 3)),
            (2, (1, 1), (0, 1)),
            (5, (0, 1), (1, 1)),
            (3, (0, 0, 1), (2, 1)),
            (11, (4,), (0, 1)),
        ],
    )
    def test_examples(self, p, exponents, expected):
        assert mup_period(MupRelation(p, exponents)) == expected

    def test_against_matrix_powers(self):
        rng = random.Random(5)
        primes = [2, 3, 5, 7, 11, 13, 17, 19, 23]
        checked = 0
        while checked < 40:
            p = rng.choice(primes)
            l = rng.randint(1, 3)
            if p**l > 2000:
                continue
            exponents = [rng.randrange(p) for _ in range(l)] + [rng.randrange(1, p)]
            assert mup_period(MupRelation(p, tuple(exponents))) == period_by_matrix_powers(p, exponents)
            checked += 1

    def test_validation(self):
        with pytest.raises(ValueError):
            MupRelation(4, (1, 1))
        with pytest.raises(ValueError):
            MupRelation(5, ())
        with pytest.raises(InvalidLeadingExponentError):
            MupRelation(5, (1, 5))
        assert MupRelation(5, (7, -1)).exponents == (2, 4)


class TestRecurrenceSolutions:
    @pytest.mark.parametrize(
        "values,dimension",
        [((-(t + 1), t), 1), ((-1, 1), 1), ((-t, 1), 0), ((-1, 0, 1), 1), ((1, -2, 1), 2)],
    )
    def test_dimensions(self, values, dimension):
        op = sk(*values)
        space = recurrence_rational_solutions(op)
        assert space.dimension == dimension
        assert all(not op.apply(y) for y in space.basis)

    def test_rational_solution(self):
        (y,) = recurrence_rational_solutions(sk(-(t + 1), t)).basis
        assert QT.to_sympy(y) / t == QT.to_sympy(y).subs(t, 1)

    def test_pole(self):
        (y,) = recurrence_rational_solutions(sk(-t, t + 1)).basis
        assert sk(-t, t + 1).apply(y) == QT.domain.zero
        assert sympy.simplify(QT.to_sympy(y) * t).is_number

    def test_zero_operator(self):
        with pytest.raises(ZeroOperatorError):
            recurrence_rational_solutions(SkewPoly.zero(QT))


class TestRealization:
    def test_difference_operator(self):
        realization = realize_ga_subgroup(sk(-1, 1))
        (c,) = realization.solutions
        assert realization.b == RatFunc.from_expr(QT.to_sympy(c) / (X + 1), QT)
        assert realization.to_payload()["checks"] == {"solutions_annihilated": True, "b_annihilated": True}

    def test_first_order(self):
        op = sk(-(t + 1) / t, 1)
        realization = realize_ga_subgroup(op)
        assert all(realization.checks.values())
        (c,) = realization.solutions
        expected = RatFunc.from_expr(QT.to_sympy(c) / (X + 1), QT)
        assert realization.b == expected
        assert realization.to_payload()["verdict"] == "Realized"

    def test_round_trip_through_additive_criterion(self):
        op = sk(-(t + 1) / t, 1)
        realization = realize_ga_subgroup(op)
        ctx = DeltaSigmaContext.param_shift()
        verdict = additive_dependence_multi([realization.b], ctx, 2).verify()
        assert verdict.outcome is Outcome.DEPENDENT
        relation = SkewPoly.from_values(list(verdict.certificate.coefficients[0]), QT)
        assert ga_membership(relation, GaSubgroup(op))

    def test_second_order(self):
        realization = realize_ga_subgroup(sk(1, -2, 1))
        assert len(realization.solutions) == 2
        assert all(realization.checks.values())

    def test_not_enough_solutions(self):
        with pytest.raises(FieldNotLinearlySigmaClosed):
            realize_ga_subgroup(sk(-1, 0, 1))

    def test_non_monic(self):
        with pytest.raises(NonMonicError):
            realize_ga_subgroup(sk(-1, 2))
        with pytest.raises(NonMonicError):
            realize_ga_subgroup(sk(0, 1))
