import random

import pytest

from sigmadep.algebra import X, BaseField, RatFunc
from sigmadep.calculus import DeltaSigmaContext
from sigmadep.core import Outcome
from sigmadep.core.errors import NonSquareError, UnsupportedOrderError
from sigmadep.integrability import (
    IntegrabilityCertificate,
    airy_obstruction,
    airy_sweep,
    find_invertible,
    integrability_sweep,
    integrability_system,
    is_sigma_d_integrable,
    order2_integrability,
    run_sweep,
    sln_dichotomy_report,
)
from sigmadep.ode import LinDiffOp, companion, symmetric_power

x = X
Q = BaseField.rationals()


@pytest.fixture
def shift():
    return DeltaSigmaContext.shift()


def rf(expr):
    return RatFunc.from_expr(expr, Q)


def matrix(*rows):
    return tuple(tuple(rf(e) for e in row) for row in rows)


class TestIsSigmaDIntegrable:
    def test_constant_matrix_has_identity_witness(self, shift):
        verdict = is_sigma_d_integrable(matrix((0, 1), (0, 0)), 1, shift).verify()
        assert verdict.outcome is Outcome.INTEGRABLE
        assert verdict.certificate.check()

    def test_scalar_witness(self, shift):
        verdict = is_sigma_d_integrable(matrix((1 / x,)), 2, shift).verify()
        assert verdict.outcome is Outcome.INTEGRABLE
        b = verdict.certificate.b[0][0]
        assert (b / rf((x + 2) / x)).is_constant

    def test_exponential_has_no_rational_witness(self, shift):
        verdict = is_sigma_d_integrable(matrix((x,)), 1, shift)
        assert verdict.outcome is Outcome.NO_RATIONAL_WITNESS
        assert verdict.certificate is None
        assert verdict.dimensions == ((1, 0),)

    def test_q_dilation(self):
        ctx = DeltaSigmaContext.qdiff_ddx(2)
        a = ((RatFunc.from_expr(1 / x, ctx.field),),)
        verdict = is_sigma_d_integrable(a, 1, ctx).verify()
        assert verdict.outcome is Outcome.INTEGRABLE

    def test_forged_certificate(self, shift):
        a = matrix((x,))
        forged = IntegrabilityCertificate(context=shift, a=a, d=1, b=matrix((1,)))
        assert not forged.check()
        singular = IntegrabilityCertificate(context=shift, a=a, d=1, b=matrix((0,)))
        assert not singular.check()

    def test_non_square(self, shift):
        with pytest.raises(NonSquareError):
            integrability_system(matrix((0, 1)), 1, shift)


class TestIntegrabilitySweep:
    def test_first_integrable_d(self, shift):
        summary, per_d = integrability_sweep(matrix((0, 1), (0, 0)), 2, shift)
        assert summary.outcome is Outcome.INTEGRABLE
        assert summary.d == 1
        assert [v.d for v in per_d] == [1, 2]

    def test_no_witness_up_to(self, shift):
        summary, per_d = integrability_sweep(matrix((x,)), 2, shift)
        assert summary.outcome is Outcome.NO_RATIONAL_WITNESS_UP_TO
        assert summary.to_payload() == {
            "verdict": "NoRationalWitnessUpTo",
            "d": 2,
            "solution_space_dims": {"1": 0, "2": 0},
        }
        assert all(v.outcome is Outcome.NO_RATIONAL_WITNESS for v in per_d)

    def test_run_sweep_keeps_order(self):
        assert run_sweep(abs, [-3, 1, -2]) == [3, 1, 2]
        assert run_sweep(abs, [-3, 1, -2], workers=2) == [3, 1, 2]


class TestFindInvertible:
    def test_combination_of_singular_matrices(self):
        basis = [matrix((1, 0), (0, 0)), matrix((0, 0), (0, 1))]
        assert find_invertible(basis, 2, Q) == matrix((1, 0), (0, 1))

    def test_none(self):
        assert find_invertible([], 2, Q) is None
        assert find_invertible([matrix((1, x), (1, x))], 2, Q) is None


class TestOrder2:
    def test_sanity_mode(self, shift):
        verdict = order2_integrability(rf(x), 0, shift).verify()
        assert verdict.outcome is Outcome.INTEGRABLE
        assert verdict.d == 0

    def test_airy_has_no_witness(self, shift):
        verdict = order2_integrability(rf(x), 1, shift)
        assert verdict.outcome is Outcome.NO_RATIONAL_WITNESS
        assert verdict.notes == ("companion path agrees",)

    def test_constant_potential_is_integrable(self, shift):
        verdict = order2_integrability(rf(1), 1, shift).verify()
        assert verdict.outcome is Outcome.INTEGRABLE

    def test_random_potentials_agree_with_companion_path(self, shift):
        rng = random.Random(31)
        shapes = (
            lambda: rng.randint(-3, 3),
            lambda: rng.choice((-2, -1, 1, 2)) * x + rng.randint(-2, 2),
            lambda: rng.choice((-2, 2, 6)) / (x + rng.randint(0, 3)) ** 2,
        )
        for i in range(20):
            r = rf(shapes[i % 3]())
            verdict = order2_integrability(r, rng.randint(1, 2), shift)
            assert verdict.notes == ("companion path agrees",)
            if verdict.outcome is Outcome.INTEGRABLE:
                verdict.verify()


class TestAiry:
    def test_integer_s(self):
        report = airy_obstruction(1)
        assert report.elimination_matches
        assert report.solution_space_dim == 0
        assert report.trace == ()

    def test_symbolic_s(self):
        report = airy_obstruction("s")
        assert report.s == "s"
        assert report.elimination_matches
        assert report.solution_space_dim == 0
        assert report.trace

    def test_sweep(self):
        reports = airy_sweep([1, 2], include_symbolic=False)
        assert [r.s for r in reports] == ["1", "2"]
        assert all(r.to_payload()["elimination_matches"] for r in reports)


class TestDichotomy:
    def test_airy_without_witness(self, shift):
        airy = LinDiffOp.from_coefficients([-x, 0, 1], Q)
        report = sln_dichotomy_report(airy, 1, shift, symmetric_d_max=0)
        assert report.all_without_witness
        assert "transformally independent" in report.conclusion
        assert report.symmetric_verdicts == ()

    def test_without_sl2_assertion(self, shift):
        airy = LinDiffOp.from_coefficients([-x, 0, 1], Q)
        report = sln_dichotomy_report(airy, 1, shift, assert_sl2=False, symmetric_d_max=0)
        assert "no transformal independence is concluded" in report.conclusion

    def test_sanity_check_refuses(self, shift):
        op = LinDiffOp.from_coefficients([0, 0, 1], Q)
        report = sln_dichotomy_report(op, 1, shift, sanity_check=True, symmetric_d_max=0)
        assert report.sl2_refused
        assert report.companion_verdicts[0].outcome is Outcome.INTEGRABLE
        assert report.to_payload()["sl2_refused"] is True

    def test_order_checked(self, shift):
        with pytest.raises(UnsupportedOrderError):
            sln_dichotomy_report(LinDiffOp.from_coefficients([x, 1], Q), 1, shift)

    def test_symmetric_square_sweep_with_rational_solutions(self, shift):
        # solutions x^2 and 1/x; the symmetric square has x^4, x, 1/x^2
        op = LinDiffOp.from_coefficients([-2 / x**2, 0, 1], Q)
        report = sln_dichotomy_report(op, 1, shift, sanity_check=True)
        assert report.sl2_refused
        assert len(report.symmetric_verdicts) == 1
        for verdict in report.companion_verdicts + report.symmetric_verdicts:
            assert verdict.outcome is Outcome.INTEGRABLE
            verdict.verify()
        assert "found for d = 1" in report.conclusion

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_airy_symmetric_square_has_no_witness(self, shift, d):
        airy = LinDiffOp.from_coefficients([-x, 0, 1], Q)
        square = companion(symmetric_power(airy, 2)).matrix
        verdict = is_sigma_d_integrable(square, d, shift)
        assert verdict.outcome is Outcome.NO_RATIONAL_WITNESS
