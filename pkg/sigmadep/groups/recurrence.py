"""
Rational solutions of linear recurrences over Q(t), and realization of a G_a
subgroup as the sigma-Galois group of a parameterized first order equation.
"""
import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Tuple

import sympy
from sympy import Poly, QQ, Symbol

from sigmadep.algebra.fields import SYMBOLS, BaseField, FieldTag
from sigmadep.algebra.linalg import nullspace
from sigmadep.algebra.polys import falling_factorial, integer_roots
from sigmadep.algebra.ratfunc import RatFunc
from sigmadep.calculus.context import DeltaSigmaContext
from sigmadep.core.errors import FieldNotLinearlySigmaClosed, NonMonicError, ZeroOperatorError
from sigmadep.groups.skew import SkewPoly, twist
from sigmadep.ode.operators import SolutionSpace

logger = logging.getLogger(__name__)

T = SYMBOLS["t"]
_H = Symbol("h")
_QOFT = BaseField.parameter_t()


def _lift(op: SkewPoly) -> SkewPoly:
    """The same skew polynomial over Q(t)."""
    if op.field.tag is FieldTag.QOFT:
        return op
    return SkewPoly(tuple(_QOFT.convert(op.field.to_sympy(c)) for c in op.coefficients), _QOFT)


def _polynomial_coefficients(op: SkewPoly) -> list[Poly]:
    """Coefficients a_i(t) in Q[t] after clearing denominators."""
    exprs = [sympy.together(_QOFT.to_sympy(c)) for c in op.coefficients]
    common = sympy.lcm([sympy.denom(e) for e in exprs]) if exprs else 1
    return [Poly(sympy.cancel(e * common), T, domain=QQ) for e in exprs]


def _dispersion_bound(a: Poly, b: Poly) -> int:
    """Largest h >= 0 with gcd(a(t), b(t+h)) nontrivial, or -1."""
    if a.degree() <= 0 or b.degree() <= 0:
        return -1
    pa = Poly(a.as_expr(), T, _H, domain=QQ)
    pb = Poly(b.as_expr().subs(T, T + _H), T, _H, domain=QQ)
    res = Poly(pa.resultant(pb).as_expr(), _H, domain=QQ)
    if res.is_zero:
        raise ValueError("dispersion of polynomials with a common shift-invariant factor")
    roots = [h for h in integer_roots(res, BaseField.rationals()) if h >= 0]
    return max(roots, default=-1)


def universal_denominator(coefficients: list[Poly]) -> Poly:
    """
    A polynomial U such that every rational solution of sum a_i(t) y(t+i) = 0 is u/U
    for a polynomial u.
    """
    n = len(coefficients) - 1
    a = coefficients[n].compose(Poly(T - n, T, domain=QQ))
    b = coefficients[0]
    u = Poly(1, T, domain=QQ)
    for h in range(_dispersion_bound(a, b), -1, -1):
        d = a.gcd(b.compose(Poly(T + h, T, domain=QQ)))
        if d.degree() <= 0:
            continue
        a = a.exquo(d)
        b = b.exquo(d.compose(Poly(T - h, T, domain=QQ)))
        for i in range(h + 1):
            u = u * d.compose(Poly(T - i, T, domain=QQ))
    logger.debug(f"universal denominator {u.as_expr()}")
    return u


def _degree_bound(coefficients: list[Poly]) -> int:
    """Degree bound for polynomial solutions, from the difference-operator form sum_j c_j Delta^j."""
    n = len(coefficients) - 1
    delta_form = []
    for j in range(n + 1):
        c = sum((coefficients[i] * int(sympy.binomial(i, j)) for i in range(j, n + 1)), Poly(0, T, domain=QQ))
        delta_form.append(c)
    weights = [c.degree() - j for j, c in enumerate(delta_form) if not c.is_zero]
    if not weights:
        return -1
    top = max(weights)
    d = Symbol("D")
    indicial = sum(
        c.LC() * falling_factorial(d, j)
        for j, c in enumerate(delta_form)
        if not c.is_zero and c.degree() - j == top
    )
    indicial = Poly(sympy.expand(indicial), d, domain=QQ)
    if indicial.is_zero:
        raise ValueError("degenerate degree bound equation")
    roots = [r for r in integer_roots(indicial, BaseField.rationals()) if r >= 0] if indicial.degree() > 0 else []
    return max(roots, default=-1)


def recurrence_rational_solutions(op: SkewPoly) -> SolutionSpace:
    """
    Basis over Q of the solutions y in Q(t) of sum_i c_i * sigma^i(y) = 0.

    Raises:
        ZeroOperatorError: for the zero skew polynomial.
    """
    if op.is_zero:
        raise ZeroOperatorError("rational solutions of the zero recurrence")
    op = _lift(op)
    a = _polynomial_coefficients(op)
    if op.order == 0:
        return SolutionSpace(basis=())
    u = universal_denominator(a)
    # u(t) y(t+i) with y = w/u: multiply through by prod_i u(t+i)
    shifted = [u.compose(Poly(T + i, T, domain=QQ)) for i in range(len(a))]
    full = Poly(1, T, domain=QQ)
    for s in shifted:
        full = full.lcm(s)
    b = [a[i] * full.exquo(shifted[i]) for i in range(len(a))]
    bound = _degree_bound(b)
    logger.debug(f"recurrence {op}: denominator {u.as_expr()}, degree bound {bound}")
    if bound < 0:
        return SolutionSpace(basis=())
    columns = []
    for j in range(bound + 1):
        total = Poly(0, T, domain=QQ)
        for i, bi in enumerate(b):
            total += bi * Poly((T + i) ** j, T, domain=QQ)
        columns.append(total)
    height = max([0] + [c.degree() + 1 for c in columns if not c.is_zero])
    rows = []
    for k in range(height):
        rows.append([c.coeff_monomial(T**k) for c in columns])
    kernel = nullspace([[QQ.convert(v) for v in row] for row in rows], bound + 1, QQ)
    basis = []
    for vector in kernel:
        numerator = sum(QQ.to_sympy(v) * T**j for j, v in enumerate(vector))
        basis.append(_QOFT.convert(numerator / u.as_expr()))
    return SolutionSpace(basis=tuple(basis))


@dataclass(frozen=True)
class Realization:
    """b = sum_i c_i / (x + i), i = 1..s, over Q(t); its parameterized sigma-Galois group is [op]."""

    op: SkewPoly
    b: RatFunc
    solutions: Tuple[Any, ...]
    checks: dict = dataclass_field(default_factory=dict)

    def to_payload(self) -> dict:
        return {
            "verdict": "Realized",
            "L": str(self.op),
            "b": str(self.b),
            "solutions": [str(_QOFT.to_sympy(c)) for c in self.solutions],
            "checks": dict(self.checks),
        }


def realize_ga_subgroup(op: SkewPoly) -> Realization:
    """
    Builds b in Q(t)(x) whose equation delta(y) = b has [op] as its group, in the
    parameter-shift context.

    Raises:
        NonMonicError: if op is not monic or has a zero constant term.
        FieldNotLinearlySigmaClosed: if op(y) = 0 has fewer than ord(op) solutions in Q(t).
    """
    op = _lift(op)
    if op.is_zero or not op.is_monic() or not op.trailing:
        raise NonMonicError(f"{op} must be monic with a nonzero constant term")
    space = recurrence_rational_solutions(op)
    s = op.order
    if space.dimension < s:
        raise FieldNotLinearlySigmaClosed(
            f"{op} has {space.dimension} rational solutions in Q(t), {s} needed"
        )
    ctx = DeltaSigmaContext.param_shift()
    b = RatFunc.zero(ctx.field)
    for i, c in enumerate(space.basis[:s]):
        b = b + RatFunc.constant(1, ctx.field).scale(c) / RatFunc.x(ctx.field).shift(i + 1)
    checks = {
        "solutions_annihilated": all(not op.apply(c) for c in space.basis[:s]),
        "b_annihilated": op.apply(b).is_zero,
    }
    logger.info(f"realized [{op}] by b = {b}")
    return Realization(op=op, b=b, solutions=space.basis[:s], checks=checks)
