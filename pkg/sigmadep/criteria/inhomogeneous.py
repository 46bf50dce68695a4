"""
Inhomogeneous first-order equations delta(z) = a*z + b.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Tuple

from sigmadep.algebra.printing import format_ratfunc, format_scalar
from sigmadep.algebra.ratfunc import RatFunc
from sigmadep.calculus.context import ContextCase, DeltaSigmaContext
from sigmadep.calculus.reduction import LogDerivativeCertificate
from sigmadep.core.core_interfaces import Certificate, Outcome, Verdict
from sigmadep.criteria.additive import _require
from sigmadep.criteria.multiplicative import multiplicative_dependence
from sigmadep.ode.operators import LinDiffOp
from sigmadep.ode.solvers import parametric_rational_solutions, rational_solutions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RationalWitnessCertificate(Certificate):
    """b == delta(h) - a*h: z - h solves the homogeneous equation."""

    context: DeltaSigmaContext
    a: RatFunc
    b: RatFunc
    h: RatFunc

    kind = "inhomogeneous_witness"

    def check(self) -> bool:
        return self.context.delta(self.h) - self.a * self.h == self.b

    def to_payload(self) -> Dict[str, Any]:
        return {"kind": self.kind, "case": "ii", "h": format_ratfunc(self.h)}


@dataclass(frozen=True)
class SigmaRelationCertificate(Certificate):
    """
    a == c + delta(f)/f and sum_j lambda_j hbar_j sigma^j(b/f) == delta(h) - c*h.
    """

    context: DeltaSigmaContext
    a: RatFunc
    b: RatFunc
    f: RatFunc
    c: Any
    coefficients: Tuple[Any, ...]
    h: RatFunc

    kind = "inhomogeneous_relation"

    def check(self) -> bool:
        ctx = self.context
        constant = RatFunc.constant(self.c, ctx.field)
        if self.a != constant + ctx.delta(self.f) / self.f:
            return False
        quotient = self.b / self.f
        total = RatFunc.zero(ctx.field)
        for j, lam in enumerate(self.coefficients):
            if lam:
                total = total + ctx.sigma_pow(quotient, j).scale(ctx.hbar_d(j) * lam)
        return total == ctx.delta(self.h) - constant * self.h

    def to_payload(self) -> Dict[str, Any]:
        field = self.context.field
        return {
            "kind": self.kind,
            "case": "i",
            "lambda": [format_scalar(v, field) for v in self.coefficients],
            "f": format_ratfunc(self.f),
            "c": format_scalar(self.c, field),
            "h": format_ratfunc(self.h),
        }


def _constant_twist(certificate: LogDerivativeCertificate):
    """The constant c when a = c + delta(f)/f with f rational, else None."""
    ctx = certificate.context
    if certificate.N != 1:
        return None
    if ctx.case is ContextCase.SHIFT:
        if certificate.P.degree() > 0:
            return None
        return RatFunc.from_poly(certificate.P, ctx.field).constant_value()
    if ctx.case is ContextCase.QDIFF_EULER and certificate.P.is_zero and certificate.Qpart.is_zero:
        return certificate.c
    return None


def inhomogeneous_first_order(a: RatFunc, b: RatFunc, ctx: DeltaSigmaContext, max_order: int) -> Verdict:
    """
    Transformal dependence of a solution z of delta(z) = a*z + b.

    1. If delta(y) = a*y has transformally independent solutions, so does z.
    2. A rational h with b = delta(h) - a*h is searched first and witnesses dependence.
    3. When a = c + delta(f)/f with c constant, dependence means
       sum_j lambda_j sigma^j(b/f) = delta(h) - c*h for some lambda, h; this is
       searched up to order ``max_order``.
    4. Under x*d/dx with transcendental q and no such f, the rational witness of step 2
       decides the question.
    """
    _require(
        ctx, (ContextCase.SHIFT, ContextCase.QDIFF_DDX, ContextCase.QDIFF_EULER), "inhomogeneous_first_order"
    )
    field = ctx.field
    multiplicative = multiplicative_dependence(a, ctx)
    if multiplicative.outcome is Outcome.INDEPENDENT:
        return Verdict(Outcome.INDEPENDENT, notes=("the homogeneous solutions are already transformally independent",))
    certificate = multiplicative.certificate

    op = LinDiffOp((-a, RatFunc.one(field)), field, ctx.derivation)
    witness = rational_solutions(op, b).particular
    if witness is not None:
        return Verdict(
            Outcome.DEPENDENT,
            certificate=RationalWitnessCertificate(context=ctx, a=a, b=b, h=witness),
            notes=("case ii",),
        )

    c = _constant_twist(certificate)
    if c is not None:
        twisted = LinDiffOp((-RatFunc.constant(c, field), RatFunc.one(field)), field, ctx.derivation)
        quotient = b / certificate.f
        for order in range(max_order + 1):
            rhs = [ctx.sigma_pow(quotient, j).scale(ctx.hbar_d(j)) for j in range(order + 1)]
            for pair in parametric_rational_solutions(twisted, rhs):
                if any(pair.weights):
                    relation = SigmaRelationCertificate(
                        context=ctx, a=a, b=b, f=certificate.f, c=c, coefficients=pair.weights, h=pair.solution
                    )
                    return Verdict(Outcome.DEPENDENT, certificate=relation, bound=order, notes=("case i",))
            logger.debug(f"inhomogeneous_first_order: no sigma-relation of order {order}")
        return Verdict(Outcome.UNKNOWN_UP_TO_BOUND, bound=max_order, notes=("case i",))

    if ctx.case is ContextCase.QDIFF_EULER and not ctx.q_is_algebraic:
        return Verdict(Outcome.INDEPENDENT, notes=("case ii",))
    return Verdict(Outcome.UNKNOWN_UP_TO_BOUND, bound=max_order)
