"""
Univariate polynomial plumbing over a base field: dense coefficient access,
squarefree decomposition, resultants, rational roots and the extended-Euclid
helpers of Hermite reduction.
"""
import logging
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional, Sequence

import sympy
from sympy import Poly, QQ, Rational

from sigmadep.algebra.fields import BaseField, X, Z
from sigmadep.core.errors import ZeroPolynomialError

logger = logging.getLogger(__name__)


# --- Dense coefficient access ---


def coeffs(p: Poly) -> list:
    """Coefficients as domain elements, highest degree first; [] for zero."""
    return p.rep.to_list()


def coeffs_low_first(p: Poly, length: Optional[int] = None) -> list:
    """Coefficients as domain elements, constant term first, optionally zero padded."""
    values = list(reversed(coeffs(p)))
    if length is not None:
        values = values[:length] + [p.rep.dom.zero] * max(0, length - len(values))
    return values


def leading(p: Poly):
    """Leading coefficient as a domain element."""
    return p.rep.LC()


def poly_from_coeffs(values: Sequence, field: BaseField, gen=X, low_first: bool = False) -> Poly:
    values = list(values)
    if low_first:
        values.reverse()
    if not values:
        values = [field.domain.zero]
    return Poly.from_list(values, gen, domain=field.domain)


def poly_from_expr(expr, field: BaseField, gen=X) -> Poly:
    expr = sympy.sympify(expr)
    if field.is_algebraic_q:
        expr = expr.subs(sympy.Symbol("q"), field.q_value)
    return Poly(expr, gen, domain=field.domain)


def constant_poly(value, field: BaseField, gen=X) -> Poly:
    return Poly.from_list([field.domain.convert(value)], gen, domain=field.domain)


def multiplicity(p: Poly, factor: Poly) -> int:
    """Largest k with factor^k dividing p (p nonzero, factor non-constant)."""
    if p.is_zero:
        raise ZeroPolynomialError("multiplicity in the zero polynomial")
    k = 0
    while True:
        q, r = p.div(factor)
        if not r.is_zero:
            return k
        p, k = q, k + 1


def falling_factorial(var: sympy.Symbol, i: int) -> sympy.Expr:
    """var*(var-1)*...*(var-i+1); 1 for i = 0."""
    result = sympy.Integer(1)
    for k in range(i):
        result *= var - k
    return result


# --- core-arith operations ---


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """p = leading_coefficient * prod(factor**mult), factors monic and pairwise coprime."""

    leading_coefficient: object
    factors: tuple
    one: Poly

    def expand(self) -> Poly:
        result = self.one.mul_ground(self.leading_coefficient)
        for factor, mult in self.factors:
            result = result * factor**mult
        return result


def squarefree_decompose(p: Poly) -> SquarefreeDecomposition:
    """
    Squarefree decomposition with monic factors and strictly increasing multiplicities.

    Raises:
        ZeroPolynomialError: for p = 0.
    """
    if p.is_zero:
        raise ZeroPolynomialError("squarefree decomposition of the zero polynomial")
    lc = leading(p)
    _, parts = p.monic().sqf_list()
    factors = tuple(sorted(((f.monic(), k) for f, k in parts if f.degree() > 0), key=lambda item: item[1]))
    one = Poly.from_list([p.rep.dom.one], *p.gens, domain=p.get_domain())
    return SquarefreeDecomposition(leading_coefficient=lc, factors=factors, one=one)


def irreducible_factors(p: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors over the coefficient domain with multiplicities."""
    if p.is_zero:
        raise ZeroPolynomialError("factorization of the zero polynomial")
    if p.degree() <= 0:
        return []
    _, parts = p.factor_list()
    return [(f.monic(), k) for f, k in parts if f.degree() > 0]


def resultant(p: Poly, q: Poly):
    """
    Resultant with respect to the first generator (the Sylvester determinant).

    Univariate inputs give a domain element; bivariate inputs give a Poly in the
    remaining generator.

    Raises:
        ZeroPolynomialError: if either input is zero.
    """
    if p.is_zero or q.is_zero:
        raise ZeroPolynomialError("resultant with a zero polynomial")
    result = p.resultant(q)
    if isinstance(result, Poly):
        return result
    return p.rep.dom.from_sympy(result)


def rational_roots(p: Poly, field: BaseField) -> list[tuple[Rational, int]]:
    """
    Roots in Q with multiplicities.

    Over Q(q), Q(t) or Q(s) a rational root is a value that kills p identically in
    the field symbol: it is a common root of the symbol-coefficient polynomials of
    the cleared numerator.

    Raises:
        ZeroPolynomialError: for p = 0.
    """
    if p.is_zero:
        raise ZeroPolynomialError("rational roots of the zero polynomial")
    if p.degree() <= 0:
        return []
    var = p.gen
    if field.symbol is None:
        candidates = Poly(p.as_expr(), var, domain=QQ)
    else:
        numerator = sympy.numer(sympy.together(p.as_expr()))
        parts = Poly(numerator, field.symbol).all_coeffs()
        polys = [Poly(c, var, domain=QQ) for c in parts if c != 0]
        candidates = reduce(lambda a, b: a.gcd(b), polys)
    if candidates.degree() <= 0:
        return []
    roots = []
    for root in sorted(candidates.ground_roots(), key=Rational):
        linear = Poly(var - root, var, domain=p.get_domain())
        roots.append((Rational(root), multiplicity(p, linear)))
    logger.debug(f"rational roots of {p.as_expr()}: {roots}")
    return roots


def integer_roots(p: Poly, field: BaseField) -> list[int]:
    return [int(r) for r, _ in rational_roots(p, field) if r.q == 1]


def gcdex_diophantine(a: Poly, b: Poly, c: Poly) -> tuple[Poly, Poly]:
    """
    Returns (s, t) with s*a + t*b == c and s == 0 or deg(s) < deg(b).

    c must lie in the ideal generated by a and b.
    """
    s, g = a.half_gcdex(b)
    s = s * c.exquo(g)
    if not s.is_zero and s.degree() >= b.degree():
        _, s = s.div(b)
    t = (c - s * a).exquo(b)
    return s, t


def bivariate(expr, field: BaseField, gens=(X, Z)) -> Poly:
    expr = sympy.sympify(expr)
    if field.is_algebraic_q:
        expr = expr.subs(sympy.Symbol("q"), field.q_value)
    return Poly(expr, *gens, domain=field.domain)


def lcm_all(polys: Iterable[Poly], field: BaseField, gen=X) -> Poly:
    return reduce(lambda a, b: a.lcm(b), polys, constant_poly(1, field, gen))
