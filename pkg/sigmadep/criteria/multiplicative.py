import logging

from sigmadep.algebra.ratfunc import RatFunc
from sigmadep.calculus.context import ContextCase, DeltaSigmaContext
from sigmadep.calculus.reduction import logderivative_decompose
from sigmadep.core.core_interfaces import Outcome, Verdict
from sigmadep.criteria.additive import _require

logger = logging.getLogger(__name__)


def multiplicative_dependence(a: RatFunc, ctx: DeltaSigmaContext) -> Verdict:
    """
    Decides transformal dependence of a nonzero solution of delta(y) = a*y.

    Dependent exactly when a splits as a non-logarithmic part of the shape allowed by
    the context plus (1/N)*delta(f)/f; the certificate carries that split and the
    integer relation r with N * sum_j r_j hbar_j sigma^j(a) = delta(F)/F.
    """
    _require(
        ctx, (ContextCase.SHIFT, ContextCase.QDIFF_DDX, ContextCase.QDIFF_EULER), "multiplicative_dependence"
    )
    certificate = logderivative_decompose(a, ctx)
    if certificate is None:
        logger.debug(f"multiplicative_dependence({a}): no log-derivative decomposition in {ctx.describe()}")
        return Verdict(Outcome.INDEPENDENT)
    return Verdict(Outcome.DEPENDENT, certificate=certificate)
