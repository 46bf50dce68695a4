"""
Additive criteria: when are the solutions of delta(y) = b_i transformally dependent?

The simple part of the Hermite reduction is linear in its input, and a combination
sum lambda_ij hbar_j sigma^j(b_i) is a derivative in K exactly when its simple part
vanishes. This turns every dependence question into linear algebra over k.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

from sigmadep.algebra.linalg import linear_relations
from sigmadep.algebra.printing import format_ratfunc, format_scalar
from sigmadep.algebra.ratfunc import RatFunc
from sigmadep.calculus.context import ContextCase, DeltaSigmaContext
from sigmadep.calculus.reduction import hermite_reduce, is_derivative
from sigmadep.core.core_interfaces import Certificate, GroupTag, Outcome, Verdict
from sigmadep.core.errors import EmptyInputError, UnsupportedContextError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AdditiveCertificate(Certificate):
    """sum_ij coefficients[i][j] * hbar_j * sigma^j(inputs[i]) == delta(g)."""

    context: DeltaSigmaContext
    inputs: Tuple[RatFunc, ...]
    coefficients: Tuple[Tuple[Any, ...], ...]
    g: RatFunc

    kind = "additive"

    def combination(self) -> RatFunc:
        ctx = self.context
        total = RatFunc.zero(ctx.field)
        for b, row in zip(self.inputs, self.coefficients):
            for j, lam in enumerate(row):
                if lam:
                    total = total + ctx.sigma_pow(b, j).scale(ctx.hbar_d(j) * lam)
        return total

    def check(self) -> bool:
        return self.combination() == self.context.delta(self.g)

    def relation_text(self) -> str:
        """The linear sigma-polynomial L with L(b) = delta(g), in variables X1..Xn."""
        field = self.context.field
        terms = []
        for i, row in enumerate(self.coefficients, start=1):
            for j, lam in enumerate(row):
                if not lam:
                    continue
                var = f"X{i}" if j == 0 else (f"sigma(X{i})" if j == 1 else f"sigma^{j}(X{i})")
                coef = format_scalar(lam, field)
                if coef == "1":
                    terms.append(f"+ {var}")
                elif coef == "-1":
                    terms.append(f"- {var}")
                elif coef.startswith("-") and " " not in coef:
                    terms.append(f"- {coef[1:]}*{var}")
                else:
                    terms.append(f"+ ({coef})*{var}" if " " in coef else f"+ {coef}*{var}")
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def to_payload(self) -> Dict[str, Any]:
        field = self.context.field
        return {
            "kind": self.kind,
            "lambda": [[format_scalar(v, field) for v in row] for row in self.coefficients],
            "relation": self.relation_text(),
            "g": format_ratfunc(self.g),
        }


def _require(ctx: DeltaSigmaContext, allowed: Sequence[ContextCase], operation: str):
    if ctx.case not in allowed:
        raise UnsupportedContextError(f"{operation} is not defined in the {ctx.case.value} context")


def _simple_part(b: RatFunc) -> RatFunc:
    return hermite_reduce(b).h


def _only_pole_at_zero(h: RatFunc) -> bool:
    return h.den == RatFunc.x(h.field).num


def additive_galois_group(b: RatFunc, ctx: DeltaSigmaContext) -> GroupTag:
    """
    Trivial when b has no simple poles; in the q-dilation case GaSigma when the only
    simple pole is at zero; Ga otherwise.
    """
    _require(ctx, (ContextCase.SHIFT, ContextCase.QDIFF_DDX), "additive_galois_group")
    h = _simple_part(b)
    if h.is_zero:
        return GroupTag.TRIVIAL
    if ctx.case is ContextCase.QDIFF_DDX and _only_pole_at_zero(h):
        return GroupTag.GA_SIGMA
    return GroupTag.GA


def additive_dependence(b: RatFunc, ctx: DeltaSigmaContext) -> Verdict:
    """
    Exact single-input criterion.

    Shift: dependent iff b has no simple poles, witnessed by b = delta(g).
    QDiffDdx: dependent iff the only simple pole is at zero; then q*sigma(b) - b = delta(g).
    """
    group = additive_galois_group(b, ctx)
    if group is GroupTag.GA:
        return Verdict(Outcome.INDEPENDENT, group=group)
    one = ctx.field.domain.one
    if group is GroupTag.TRIVIAL:
        coefficients = ((one,),)
        _, g = is_derivative(b)
    else:
        coefficients = ((-one, one),)
        _, g = is_derivative(ctx.sigma(b).scale(ctx.hbar()) - b)
    certificate = AdditiveCertificate(context=ctx, inputs=(b,), coefficients=coefficients, g=g)
    return Verdict(Outcome.DEPENDENT, certificate=certificate, group=group)


def additive_dependence_multi(bs: Sequence[RatFunc], ctx: DeltaSigmaContext, max_order: int) -> Verdict:
    """
    Bounded search for a nonzero lambda with sum_{i, j<=J} lambda_ij hbar_j sigma^j(b_i) = delta(g).

    Orders J' = 0..max_order are tried in turn and the first relation found is returned.
    A single input falls back to the exact criterion when the search is inconclusive.

    Raises:
        EmptyInputError: for an empty input list.
        UnsupportedContextError: for QDiffEuler.
    """
    _require(
        ctx, (ContextCase.SHIFT, ContextCase.QDIFF_DDX, ContextCase.PARAM_SHIFT), "additive_dependence_multi"
    )
    bs = list(bs)
    if not bs:
        raise EmptyInputError("additive_dependence_multi needs at least one input")
    field = ctx.field
    for order in range(max_order + 1):
        terms = [
            _simple_part(ctx.sigma_pow(b, j).scale(ctx.hbar_d(j))) for b in bs for j in range(order + 1)
        ]
        relations = linear_relations(terms, field)
        logger.debug(f"order {order}: {len(terms)} simple parts, {len(relations)} relations")
        if not relations:
            continue
        vector = relations[0]
        width = order + 1
        coefficients = tuple(tuple(vector[i * width : (i + 1) * width]) for i in range(len(bs)))
        certificate = AdditiveCertificate(context=ctx, inputs=tuple(bs), coefficients=coefficients, g=RatFunc.zero(field))
        ok, g = is_derivative(certificate.combination())
        if not ok:
            continue
        certificate = AdditiveCertificate(context=ctx, inputs=tuple(bs), coefficients=coefficients, g=g)
        return Verdict(Outcome.DEPENDENT, certificate=certificate, bound=order)
    if len(bs) == 1 and ctx.case is not ContextCase.PARAM_SHIFT:
        exact = additive_dependence(bs[0], ctx)
        return Verdict(exact.outcome, certificate=exact.certificate, bound=max_order, group=exact.group)
    return Verdict(Outcome.UNKNOWN_UP_TO_BOUND, bound=max_order)
