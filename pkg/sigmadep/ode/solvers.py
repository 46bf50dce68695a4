"""
Rational solutions of linear differential equations L(y) = sum_k lambda_k * r_k.

The method is the classical one: a universal denominator from the indicial equations
at the finite singularities, a degree bound from the indicial equation at infinity,
then a finite linear system over the coefficient domain.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import sympy
from sympy import Poly

from sigmadep.algebra.fields import X
from sigmadep.algebra.linalg import linear_relations
from sigmadep.algebra.polys import (
    coeffs_low_first,
    constant_poly,
    falling_factorial,
    integer_roots,
    irreducible_factors,
    lcm_all,
    leading,
    multiplicity,
)
from sigmadep.algebra.ratfunc import RatFunc
from sigmadep.core.errors import ZeroOperatorError
from sigmadep.ode.operators import LinDiffOp, SolutionSpace

logger = logging.getLogger(__name__)

_ALPHA = sympy.Symbol("alpha")


@dataclass(frozen=True)
class ParametricSolution:
    """A solution y of L(y) = sum_k weights[k] * rhs[k]."""

    weights: Tuple
    solution: RatFunc


def _cleared(op: LinDiffOp, rhs_list: Sequence[RatFunc]):
    """Multiplies L and the right-hand sides by the lcm of the coefficient denominators."""
    field = op.field
    common = lcm_all((c.den for c in op.coefficients), field)
    lifted = RatFunc.from_poly(common, field)
    polys = [(c * lifted).num for c in op.coefficients]
    return polys, [r * lifted for r in rhs_list]


def _indicial_at(factor: Poly, polys: Sequence[Poly], field) -> Tuple[int, list]:
    """
    Returns (mu, integer roots) of the indicial equation at an irreducible factor F.

    mu = min_i(v_F(p_i) - i); the indicial polynomial is sum over the minimizing i of
    (p_i / F^v_i) * F'^i mod F times alpha^(falling i), and only alpha killing all of
    its x-coefficients count.
    """
    valuations = {i: multiplicity(p, factor) for i, p in enumerate(polys) if not p.is_zero}
    mu = min(v - i for i, v in valuations.items())
    support = [i for i, v in valuations.items() if v - i == mu]
    dfactor = factor.diff(X)
    columns = {}
    for i in support:
        hat = polys[i].exquo(factor ** valuations[i])
        _, rem = (hat * dfactor**i).div(factor)
        for k, c in enumerate(coeffs_low_first(rem)):
            if c:
                columns[k] = columns.get(k, 0) + field.to_sympy(c) * falling_factorial(_ALPHA, i)
    polys_alpha = [Poly(expr, _ALPHA, domain=field.domain) for expr in columns.values()]
    polys_alpha = [p for p in polys_alpha if not p.is_zero]
    if not polys_alpha:
        return mu, []
    common = polys_alpha[0]
    for p in polys_alpha[1:]:
        common = common.gcd(p)
    return mu, integer_roots(common, field) if common.degree() > 0 else []


def universal_denominator(op: LinDiffOp, rhs_list: Sequence[RatFunc] = ()) -> Poly:
    """A polynomial U such that every rational solution has the form u/U with u polynomial."""
    field = op.field
    polys, cleared = _cleared(op, rhs_list)
    candidates = polys[-1]
    for r in cleared:
        candidates = candidates * r.den
    denominator = constant_poly(1, field)
    for factor, _ in irreducible_factors(candidates):
        mu, roots = _indicial_at(factor, polys, field)
        forced = [mu - r.order_at(factor) for r in cleared if not r.is_zero]
        bound = max([0] + forced + [-a for a in roots])
        logger.debug(f"pole bound {bound} at {factor.as_expr()} (mu = {mu}, indicial roots {roots})")
        if bound > 0:
            denominator = denominator * factor**bound
    return denominator


def degree_bound(op: LinDiffOp, rhs_list: Sequence[RatFunc] = ()) -> Optional[int]:
    """
    Upper bound for deg(y) = deg(num) - deg(den) of a rational solution; None if no solution can be nonzero.
    """
    field = op.field
    polys, cleared = _cleared(op, rhs_list)
    nu = max(p.degree() - i for i, p in enumerate(polys) if not p.is_zero)
    expr = sum(
        field.to_sympy(leading(p)) * falling_factorial(_ALPHA, i)
        for i, p in enumerate(polys)
        if not p.is_zero and p.degree() - i == nu
    )
    indicial = Poly(expr, _ALPHA, domain=field.domain)
    candidates = integer_roots(indicial, field) if not indicial.is_zero and indicial.degree() > 0 else []
    candidates += [r.degree() - nu for r in cleared if not r.is_zero]
    logger.debug(f"degree bound candidates at infinity: {candidates} (nu = {nu})")
    return max(candidates) if candidates else None


def _echelon(vectors: list, positions: Sequence[int], domain) -> list:
    """Row-reduces the basis on the given coordinates so weights form an echelon with unit pivots."""
    vectors = [list(v) for v in vectors]
    done = []
    for pos in positions:
        pivot = next((v for v in vectors if v[pos]), None)
        if pivot is None:
            continue
        vectors.remove(pivot)
        scale = pivot[pos]
        pivot = [domain.quo(e, scale) for e in pivot]
        vectors = [[a - v[pos] * b for a, b in zip(v, pivot)] for v in vectors]
        done = [[a - v[pos] * b for a, b in zip(v, pivot)] for v in done]
        done.append(pivot)
    return done + vectors


def parametric_rational_solutions(op: LinDiffOp, rhs_list: Sequence[RatFunc] = ()) -> list[ParametricSolution]:
    """
    Basis of the pairs (lambda, y), y rational, with L(y) = sum_k lambda_k * rhs_list[k].

    Pairs with a nonzero lambda come first, with unit pivots on lambda; the remaining
    pairs have lambda = 0 and span the homogeneous solutions.

    Raises:
        ZeroOperatorError: for L = 0.
    """
    if op.is_zero:
        raise ZeroOperatorError("rational solutions of the zero operator")
    field = op.field
    op_ddx = op.to_ddx()
    rhs_list = list(rhs_list)
    k = len(rhs_list)
    bound = degree_bound(op_ddx, rhs_list)
    denominator = universal_denominator(op_ddx, rhs_list)
    zero_weights = tuple(field.domain.zero for _ in range(k))
    if bound is None or denominator.degree() + bound < 0:
        terms = [-r for r in rhs_list]
        top = -1
    else:
        top = denominator.degree() + bound
        den = RatFunc.from_poly(denominator, field)
        terms = [-r for r in rhs_list] + [op.apply(RatFunc.monomial(j, field) / den) for j in range(top + 1)]
    logger.debug(f"solving for {top + 1} numerator coefficients over denominator {denominator.as_expr()}")
    basis = _echelon(linear_relations(terms, field), range(k), field.domain)
    solutions = []
    for vector in basis:
        weights = tuple(vector[:k])
        numerator = Poly.from_list(list(reversed(vector[k:])) or [field.domain.zero], X, domain=field.domain)
        y = RatFunc.from_polys(numerator, denominator, field)
        if y.is_zero and weights == zero_weights:
            continue
        solutions.append(ParametricSolution(weights=weights, solution=y))
    return solutions


def rational_solutions(op: LinDiffOp, rhs: Optional[RatFunc] = None) -> SolutionSpace:
    """
    All rational solutions of L(y) = rhs (rhs = 0 when omitted).

    Returns:
        SolutionSpace with the homogeneous basis and, for an inhomogeneous equation that
        has a rational solution, a particular solution.
    """
    if rhs is None or rhs.is_zero:
        pairs = parametric_rational_solutions(op)
        return SolutionSpace(basis=tuple(p.solution for p in pairs))
    pairs = parametric_rational_solutions(op, [rhs])
    basis = tuple(p.solution for p in pairs if not p.weights[0])
    particular = next((p.solution for p in pairs if p.weights[0]), None)
    return SolutionSpace(basis=basis, particular=particular)
