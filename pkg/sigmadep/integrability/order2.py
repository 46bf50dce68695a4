"""
sigma^s-integrability of delta^2(y) = r*y and the Airy obstruction.

Writing B = [[hbar*d - delta(b), b], [hbar*sigma^s(r)*b - delta(d), d]], the
integrability equation for the companion matrix [[0, 1], [r, 0]] is equivalent to the
4-dimensional first-order system in (b, delta(b), d, delta(d)) built here.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple, Union

from sigmadep.algebra.fields import BaseField
from sigmadep.algebra.ratfunc import RatFunc
from sigmadep.calculus.context import DeltaSigmaContext
from sigmadep.core.core_interfaces import Outcome
from sigmadep.core.errors import CertificateVerificationError
from sigmadep.integrability.engine import (
    IntegrabilityCertificate,
    IntegrabilityVerdict,
    find_invertible,
    is_sigma_d_integrable,
    run_sweep,
)
from sigmadep.ode.cyclic import cyclic_vector, system_rational_solutions
from sigmadep.ode.operators import LinDiffOp, LinDiffSystem
from sigmadep.ode.solvers import degree_bound, rational_solutions, universal_denominator

logger = logging.getLogger(__name__)


def order2_system(r: RatFunc, s, ctx: DeltaSigmaContext) -> LinDiffSystem:
    """The system delta(b, b', d, d') equivalent to the integrability equation of delta^2 - r."""
    field_ = ctx.field
    hbar = ctx.hbar_d(s) if isinstance(s, int) else field_.domain.one
    shifted = ctx.sigma_pow(r, s)
    zero, one = RatFunc.zero(field_), RatFunc.one(field_)
    diagonal = r - shifted.scale(hbar * hbar)
    rows = (
        (zero, one, zero, zero),
        (diagonal, zero, zero, RatFunc.constant(2 * hbar, field_)),
        (zero, zero, zero, one),
        (ctx.delta(shifted).scale(hbar), shifted.scale(2 * hbar), diagonal, zero),
    )
    return LinDiffSystem(rows, field_, ctx.derivation)


def witness_matrix(r: RatFunc, s, ctx: DeltaSigmaContext, b: RatFunc, d: RatFunc):
    hbar = ctx.hbar_d(s) if isinstance(s, int) else ctx.field.domain.one
    shifted = ctx.sigma_pow(r, s)
    return (
        (d.scale(hbar) - ctx.delta(b), b),
        (shifted * b.scale(hbar) - ctx.delta(d), d),
    )


def order2_integrability(
    r: RatFunc, s: int, ctx: DeltaSigmaContext, attempts: int = 8, seed: int = 20240917
) -> IntegrabilityVerdict:
    """
    sigma^s-integrability of delta^2(y) = r*y through the 4-dimensional system, cross-checked
    against the generic engine on the companion matrix.

    s = 0 is a sanity mode returning the identity witness.

    Raises:
        CertificateVerificationError: if the two paths disagree.
    """
    field_ = ctx.field
    zero, one = RatFunc.zero(field_), RatFunc.one(field_)
    a = ((zero, one), (r, zero))
    if s == 0:
        identity = ((one, zero), (zero, one))
        certificate = IntegrabilityCertificate(context=ctx, a=a, d=0, b=identity)
        return IntegrabilityVerdict(
            Outcome.INTEGRABLE, d=0, certificate=certificate, notes=("sanity mode: s = 0 always admits B = identity",)
        )
    space = system_rational_solutions(order2_system(r, s, ctx), attempts=attempts, seed=seed)
    matrices = [witness_matrix(r, s, ctx, v[0], v[2]) for v in space.basis]
    b = find_invertible(matrices, 2, field_)
    dims = ((s, space.dimension),)
    if b is None:
        verdict = IntegrabilityVerdict(Outcome.NO_RATIONAL_WITNESS, d=s, dimensions=dims)
    else:
        certificate = IntegrabilityCertificate(context=ctx, a=a, d=s, b=b)
        verdict = IntegrabilityVerdict(Outcome.INTEGRABLE, d=s, certificate=certificate, dimensions=dims)
    generic = is_sigma_d_integrable(a, s, ctx, attempts=attempts, seed=seed)
    if generic.outcome is not verdict.outcome or generic.dimensions != dims:
        raise CertificateVerificationError(
            f"order-2 system ({verdict.outcome.value}, dim {space.dimension}) and companion path "
            f"({generic.outcome.value}, {generic.dimensions}) disagree for s = {s}"
        )
    return IntegrabilityVerdict(
        verdict.outcome, d=s, certificate=verdict.certificate, dimensions=dims, notes=("companion path agrees",)
    )


def expected_airy_operator(field_: BaseField, s) -> LinDiffOp:
    """delta^4 - (4x + 2s) delta^2 - 6 delta + s^2 for s an integer or the domain element s."""
    s_value = RatFunc.constant(s, field_)
    x = RatFunc.x(field_)
    zero, one = RatFunc.zero(field_), RatFunc.one(field_)
    return LinDiffOp((s_value * s_value, RatFunc.constant(-6, field_), -(x * 4 + s_value * 2), zero, one), field_)


@dataclass(frozen=True)
class AiryReport:
    s: str
    operator: str
    expected: str
    elimination_matches: bool
    solution_space_dim: int
    trace: Tuple[str, ...] = field(default_factory=tuple)

    def to_payload(self) -> Dict[str, Any]:
        return {
            "s": self.s,
            "operator": self.operator,
            "expected_operator": self.expected,
            "elimination_matches": self.elimination_matches,
            "solution_space_dim": self.solution_space_dim,
            "trace": list(self.trace),
        }


def airy_obstruction(s: Union[int, str] = "s", attempts: int = 8, seed: int = 20240917) -> AiryReport:
    """
    Eliminates d from the order-2 integrability system of delta^2 - x and solves the resulting
    order-4 equation for b.

    ``s`` is a positive integer, or the string "s" for the symbolic run over Q(s)(x).
    """
    symbolic = not isinstance(s, int)
    field_ = BaseField.parameter_s() if symbolic else BaseField.rationals()
    ctx = DeltaSigmaContext.shift(field_)
    shift = field_.convert(field_.symbol) if symbolic else s
    r = RatFunc.x(field_)
    reduction = cyclic_vector(order2_system(r, shift, ctx), attempts=attempts, seed=seed)
    op = reduction.op.monic()
    expected = expected_airy_operator(field_, shift)
    matches = op == expected
    space = rational_solutions(op)
    trace = []
    if symbolic:
        denominator = universal_denominator(op)
        bound = degree_bound(op)
        if denominator.degree() == 0:
            trace.append("leading coefficient is 1, so every rational solution is a polynomial")
        if bound is None:
            trace.append("indicial polynomial at infinity is s^2 with no integer root, so b = 0")
        trace.append("a specialization of s may in principle gain solutions; integer values are checked separately")
    label = "s" if symbolic else str(s)
    logger.info(f"airy s = {label}: eliminated operator {op}, solution space of dimension {space.dimension}")
    return AiryReport(
        s=label,
        operator=str(op),
        expected=str(expected),
        elimination_matches=matches,
        solution_space_dim=space.dimension,
        trace=tuple(trace),
    )


@dataclass(frozen=True)
class _AiryJob:
    attempts: int
    seed: int

    def __call__(self, s) -> AiryReport:
        return airy_obstruction(s, attempts=self.attempts, seed=self.seed)


def airy_sweep(
    s_values: Sequence[int], include_symbolic: bool = True, workers: int = 1, attempts: int = 8, seed: int = 20240917
) -> List[AiryReport]:
    """Airy reports for every integer s, followed by the symbolic run."""
    params: List[Any] = list(s_values) + (["s"] if include_symbolic else [])
    return run_sweep(_AiryJob(attempts, seed), params, workers)
