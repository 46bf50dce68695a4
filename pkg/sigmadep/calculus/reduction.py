"""
Hermite reduction, Rothstein-Trager residue analysis and logarithmic-derivative
decomposition of rational functions.

Residues are never materialized as algebraic numbers: only rational residues are
computed, together with the Lazard-Rioboo-Trager factor gcd(D, N - rho*D') that
carries every pole with residue rho.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import sympy
from sympy import Poly, Rational

from sigmadep.algebra.fields import X, Z
from sigmadep.algebra.polys import (
    bivariate,
    coeffs_low_first,
    gcdex_diophantine,
    rational_roots,
    squarefree_decompose,
)
from sigmadep.algebra.printing import format_poly, format_ratfunc, format_scalar
from sigmadep.algebra.ratfunc import RatFunc
from sigmadep.calculus.context import ContextCase, DeltaSigmaContext
from sigmadep.core.core_interfaces import Certificate
from sigmadep.core.errors import UnsupportedContextError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HermiteDecomposition:
    """f = d/dx(g) + h + p with h proper and squarefree in the denominator."""

    g: RatFunc
    h: RatFunc
    p: Poly

    def reconstruct(self) -> RatFunc:
        return self.g.diff() + self.h + RatFunc.from_poly(self.p, self.g.field)


@dataclass(frozen=True)
class ResidueData:
    rt_resultant: Poly
    rational_residues: Tuple[Tuple[Rational, Poly], ...]
    all_residues_rational: bool
    all_poles_simple: bool
    pole_at_zero: Tuple[bool, int]
    has_polynomial_part: bool
    decomposition: HermiteDecomposition


def hermite_reduce(f: RatFunc) -> HermiteDecomposition:
    """
    Hermite reduction with respect to d/dx.

    For every squarefree factor V of multiplicity i >= 2 of the denominator, the
    numerator is reduced one power of V at a time by solving
    B*U*V' + C*V = -A/j, which moves B/V^j into the rational part.
    """
    field_ = f.field
    p, a = f.num.div(f.den)
    d = f.den
    g = RatFunc.zero(field_)
    if a.is_zero:
        return HermiteDecomposition(g=g, h=RatFunc.zero(field_), p=p)
    for v, i in squarefree_decompose(d).factors:
        if i < 2:
            continue
        u = d.exquo(v**i)
        dv = v.diff(X)
        for j in range(i - 1, 0, -1):
            b, c = gcdex_diophantine(u * dv, v, a.mul_ground(Rational(-1, j)))
            g = g + RatFunc.from_polys(b, v**j, field_)
            a = c.mul_ground(-j) - u * b.diff(X)
        d = u * v
    h = RatFunc.from_polys(a, d, field_)
    logger.debug(f"hermite_reduce({f}): g = {g}, h = {h}, p = {p.as_expr()}")
    return HermiteDecomposition(g=g, h=h, p=p)


def residue_analysis(f: RatFunc) -> ResidueData:
    """
    Rothstein-Trager analysis of the simple-pole part of f.

    The resultant res_x(D, N - z*D') is made monic in z; its rational roots are the
    rational residues and gcd(D, N - rho*D') is the factor carrying residue rho.
    """
    field_ = f.field
    decomposition = hermite_reduce(f)
    h = decomposition.h
    zero_order = f.pole_order_at_zero() if not f.is_zero else 0
    pole_at_zero = (zero_order > 0, zero_order)
    residues = []
    if h.is_zero:
        rt = Poly.from_list([field_.domain.one], Z, domain=field_.domain)
        all_rational = True
    else:
        n, d = h.num, h.den
        dd = d.diff(X)
        rt = _resultant_in_z(d, n, dd, field_)
        total = 0
        for rho, mult in rational_roots(rt, field_):
            factor = d.gcd(n - dd.mul_ground(field_.convert(rho))).monic()
            residues.append((rho, factor))
            total += mult
        all_rational = total == rt.degree()
    data = ResidueData(
        rt_resultant=rt,
        rational_residues=tuple(residues),
        all_residues_rational=all_rational,
        all_poles_simple=decomposition.g.is_zero,
        pole_at_zero=pole_at_zero,
        has_polynomial_part=not decomposition.p.is_zero,
        decomposition=decomposition,
    )
    logger.debug(
        f"residue_analysis({f}): rt = {rt.as_expr()}, rational residues "
        f"{[(r, fac.as_expr()) for r, fac in residues]}, all rational {all_rational}"
    )
    return data


def _resultant_in_z(d: Poly, n: Poly, dd: Poly, field_) -> Poly:
    big_d = bivariate(d.as_expr(), field_)
    big_n = bivariate(n.as_expr() - Z * dd.as_expr(), field_)
    rt = big_d.resultant(big_n)
    expr = rt.as_expr() if isinstance(rt, Poly) else rt
    return Poly(expr, Z, domain=field_.domain).monic()


def is_derivative(f: RatFunc) -> Tuple[bool, Optional[RatFunc]]:
    """Returns (True, g) with d/dx(g) = f when f has a rational antiderivative, else (False, None)."""
    decomposition = hermite_reduce(f)
    if not decomposition.h.is_zero:
        return False, None
    antiderivative = RatFunc.from_poly(decomposition.p.integrate(), f.field)
    return True, decomposition.g + antiderivative


def split_pole_at_zero(f: RatFunc) -> Tuple[RatFunc, RatFunc]:
    """
    Splits a proper f into (L, R) with f = L + R, L a polynomial in 1/x and R without a pole at 0.
    """
    field_ = f.field
    k = f.pole_order_at_zero()
    if k == 0:
        return RatFunc.zero(field_), f
    xk = Poly(X**k, X, domain=field_.domain)
    d0 = f.den.exquo(xk)
    s, t = gcdex_diophantine(d0, xk, f.num)
    return RatFunc.from_polys(s, xk, field_), RatFunc.from_polys(t, d0, field_)


def laurent_terms(f: RatFunc) -> Dict[int, Any]:
    """Exponent -> coefficient for f whose denominator is a power of x."""
    if f.is_zero:
        return {}
    k = f.den.degree()
    if f.den != Poly(X**k, X, domain=f.domain):
        raise ValueError(f"{f} is not a Laurent polynomial")
    return {i - k: c for i, c in enumerate(coeffs_low_first(f.num)) if c}


@dataclass(frozen=True)
class LogDerivativeCertificate(Certificate):
    """
    a = P + Qpart + c * basis + (1/N) * delta(f)/f, with basis 1/x for d/dx and 1 for x*d/dx,
    together with an integer relation r such that
    N * sum_j r_j hbar_j sigma^j(a) = sum_j r_j delta(sigma^j f)/sigma^j f.
    """

    context: DeltaSigmaContext
    a: RatFunc
    P: Poly
    Qpart: RatFunc
    c: Any
    N: int
    f: RatFunc
    relation: Tuple[int, ...] = field(default=(1,))

    kind = "log_derivative"

    @property
    def non_log_part(self) -> RatFunc:
        return RatFunc.from_poly(self.P, self.a.field) + self.Qpart + self.context.log_basis().scale(self.c)

    def shape_holds(self) -> bool:
        ctx, field_ = self.context, self.a.field
        if ctx.case is ContextCase.SHIFT and not (self.Qpart.is_zero and not self.c):
            return False
        if ctx.is_q_case and not ctx.q_is_algebraic and not (self.P.is_zero and self.Qpart.is_zero):
            return False
        log_part = ctx.delta(self.f) / self.f / self.N
        return self.a == self.non_log_part + log_part

    def relation_holds(self) -> bool:
        ctx = self.context
        lhs = RatFunc.zero(self.a.field)
        rhs = RatFunc.zero(self.a.field)
        for j, r in enumerate(self.relation):
            if not r:
                continue
            lhs = lhs + ctx.sigma_pow(self.a, j).scale(ctx.hbar_d(j)) * r
            shifted = ctx.sigma_pow(self.f, j)
            rhs = rhs + ctx.delta(shifted) / shifted * r
        return lhs * self.N == rhs

    def check(self) -> bool:
        return self.shape_holds() and self.relation_holds()

    def to_payload(self) -> Dict[str, Any]:
        field_ = self.a.field
        return {
            "kind": self.kind,
            "P": format_poly(self.P, field_),
            "Qpart": format_ratfunc(self.Qpart),
            "c": format_scalar(self.c, field_),
            "N": self.N,
            "f": format_ratfunc(self.f),
            "relation": list(self.relation),
        }


def logderivative_decompose(a: RatFunc, ctx: DeltaSigmaContext) -> Optional[LogDerivativeCertificate]:
    """
    Writes a as a non-logarithmic part of the shape admitted by ctx plus (1/N)*delta(f)/f.

    Shift: P + (1/N) f'/f. QDiffDdx: c/x + (1/N) f'/f for transcendental q, P + Qpart + c/x +
    (1/N) f'/f for rational q. QDiffEuler is reduced to the d/dx case through a/x, so c/x
    there becomes the constant c. The integer floor of the residue at zero is absorbed into
    a power of x in f.

    Returns:
        The certificate, or None when a has no such decomposition.

    Raises:
        UnsupportedContextError: in the ParamShift context.
    """
    if ctx.case is ContextCase.PARAM_SHIFT:
        raise UnsupportedContextError("log-derivative decomposition needs sigma acting on x")
    field_ = a.field
    euler = ctx.case is ContextCase.QDIFF_EULER
    w = a / RatFunc.x(field_) if euler else a
    polynomial = w.polynomial_part()
    proper = w.proper_part()

    laurent = RatFunc.zero(field_)
    c = field_.domain.zero
    zero_residue = 0
    if ctx.is_q_case:
        laurent, proper = split_pole_at_zero(proper)
        r0 = laurent_terms(laurent).get(-1, field_.domain.zero)
        laurent = laurent - RatFunc.monomial(-1, field_).scale(r0)
        if field_.is_rational(r0):
            rational = field_.as_rational(r0)
            zero_residue = math.floor(rational)
            c = field_.convert(rational - zero_residue)
        else:
            c = r0

    data = residue_analysis(proper)
    if not (data.all_poles_simple and data.all_residues_rational):
        logger.debug(f"logderivative_decompose({a}): simple part is not a rational log-derivative")
        return None

    residues = list(data.rational_residues)
    if zero_residue:
        residues.append((Rational(zero_residue), Poly(X, X, domain=field_.domain)))
    n = math.lcm(*(Rational(rho).q for rho, _ in residues)) if residues else 1
    f = RatFunc.one(field_)
    for rho, factor in residues:
        exponent = int(rho * n)
        if exponent:
            f = f * RatFunc.from_poly(factor, field_) ** exponent

    x = RatFunc.x(field_)
    P, Qpart = polynomial, laurent
    if euler:
        P, Qpart = (RatFunc.from_poly(polynomial, field_) * x).num, laurent * x
    if ctx.is_q_case and not ctx.q_is_algebraic and not (P.is_zero and Qpart.is_zero):
        logger.debug(f"logderivative_decompose({a}): non-constant part survives for transcendental q")
        return None

    certificate = LogDerivativeCertificate(context=ctx, a=a, P=P, Qpart=Qpart, c=c, N=n, f=f, relation=(1,))
    relation = _relation(certificate)
    certificate = LogDerivativeCertificate(context=ctx, a=a, P=P, Qpart=Qpart, c=c, N=n, f=f, relation=relation)
    logger.debug(f"logderivative_decompose({a}): N = {n}, f = {f}, relation {relation}")
    return certificate


def _relation(certificate: LogDerivativeCertificate) -> Tuple[int, ...]:
    """Integer coefficients r_0..r_s of a polynomial killing the non-logarithmic part under hbar_j sigma^j."""
    ctx = certificate.context
    if ctx.case is ContextCase.SHIFT:
        if certificate.P.is_zero:
            return (1,)
        m = certificate.P.degree() + 1
        return tuple(int(sympy.binomial(m, j)) * (-1) ** (m - j) for j in range(m + 1))
    exponents = sorted(laurent_terms(certificate.non_log_part))
    if not exponents:
        return (1,)
    if not ctx.q_is_algebraic:
        return (-1, 1)
    q = ctx.field.q_value
    shift = 1 if ctx.case is ContextCase.QDIFF_DDX else 0
    var = sympy.Symbol("X")
    killer = Poly(sympy.prod([var - q ** (m + shift) for m in exponents]), var, domain="QQ")
    values = killer.all_coeffs()[::-1]
    scale = math.lcm(*(Rational(v).q for v in values))
    return tuple(int(v * scale) for v in values)
