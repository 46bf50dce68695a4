"""
Truncated power-series solutions at an ordinary point, used as an independent
oracle for operator identities.
"""
import logging
from dataclasses import dataclass
from typing import Any, Sequence, Tuple

import sympy

from sigmadep.algebra.fields import X
from sigmadep.algebra.polys import coeffs_low_first, poly_from_coeffs
from sigmadep.algebra.ratfunc import RatFunc
from sigmadep.core.errors import SingularPointError
from sigmadep.ode.operators import LinDiffOp

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TruncatedSeries:
    """sum_k coefficients[k] * (x - point)^k, exact up to the last stored power."""

    point: Any
    coefficients: Tuple

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def as_expr(self, field) -> sympy.Expr:
        shift = X - field.to_sympy(self.point)
        return sum(field.to_sympy(c) * shift**k for k, c in enumerate(self.coefficients))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order) + 1
        a, b = self.coefficients, other.coefficients
        out = [sum((a[i] * b[k - i] for i in range(1, k + 1)), a[0] * b[k]) for k in range(n)]
        return TruncatedSeries(self.point, tuple(out))


def taylor_coefficients(f: RatFunc, order: int) -> list:
    """Taylor coefficients of f at x = 0 up to x^order; f must be regular at 0."""
    domain = f.domain
    den = coeffs_low_first(f.den, order + 1)
    num = coeffs_low_first(f.num, order + 1)
    if not den[0]:
        raise SingularPointError(f"{f} has a pole at the expansion point")
    out = []
    for k in range(order + 1):
        value = num[k]
        for j in range(1, k + 1):
            value -= den[j] * out[k - j]
        out.append(domain.quo(value, den[0]))
    return out


def _shifted(op: LinDiffOp, point) -> LinDiffOp:
    op = op.to_ddx()
    if not point:
        return op
    return LinDiffOp(tuple(c.shift(point) for c in op.coefficients), op.field, op.derivation)


def series_solutions(op: LinDiffOp, point: Any = 0, order: int = 8) -> list[TruncatedSeries]:
    """
    Basis of formal power-series solutions at an ordinary point, truncated at ``order``.

    The j-th basis series has initial data y^(i)(point)/i! = [i == j] for i < ord(L).

    Raises:
        SingularPointError: if a normalized coefficient has a pole at the point.
    """
    field = op.field
    point = field.domain.convert(point) if not isinstance(point, sympy.Basic) else field.convert(point)
    local = _shifted(op, point).monic()
    n = local.order
    domain = field.domain
    try:
        a = [taylor_coefficients(local.coefficient(i), order) for i in range(n)]
    except SingularPointError:
        raise SingularPointError(f"x = {field.to_sympy(point)} is a singular point of {op}") from None

    def falling(m: int, i: int) -> int:
        result = 1
        for k in range(i):
            result *= m - k
        return result

    basis = []
    for j in range(n):
        y = [domain.one if i == j else domain.zero for i in range(n)] + [domain.zero] * max(0, order + 1 - n)
        for k in range(0, order + 1 - n):
            total = domain.zero
            for i in range(n):
                for l in range(k + 1):
                    coeff = a[i][l]
                    if coeff and y[k - l + i]:
                        total += coeff * falling(k - l + i, i) * y[k - l + i]
            y[k + n] = domain.quo(-total, domain.convert(falling(k + n, n)))
        basis.append(TruncatedSeries(point, tuple(y[: order + 1])))
    logger.debug(f"{len(basis)} series solutions of {op} at {field.to_sympy(point)} to order {order}")
    return basis


def series_residual(op: LinDiffOp, series: TruncatedSeries) -> list:
    """
    Taylor coefficients of L(series) at the expansion point, up to the order where the
    truncation still leaves them exact (order - ord(L)).
    """
    field = op.field
    local = _shifted(op, series.point).monic()
    polynomial = RatFunc.from_poly(poly_from_coeffs(series.coefficients, field, low_first=True), field)
    valid = series.order - local.order
    if valid < 0:
        return []
    return taylor_coefficients(local.apply(polynomial), valid)
