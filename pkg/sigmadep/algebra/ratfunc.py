"""
Reduced rational functions in x over a base field.

A RatFunc is always stored canonically: numerator and denominator coprime and
the denominator monic, so structural equality is value equality.
"""
import logging
from dataclasses import dataclass
from typing import Any, Callable, Optional, Union

import sympy
from sympy import Poly

from sigmadep.algebra.fields import BaseField, X
from sigmadep.algebra.polys import (
    coeffs,
    coeffs_low_first,
    constant_poly,
    leading,
    multiplicity,
    poly_from_coeffs,
    poly_from_expr,
)
from sigmadep.core.errors import DivisionByZeroError, SingularPointError

logger = logging.getLogger(__name__)

Scalar = Union[int, sympy.Rational, sympy.Expr]


def _rebuild(field: BaseField, num: str, den: str) -> "RatFunc":
    return RatFunc.from_expr(sympy.sympify(num) / sympy.sympify(den), field)


@dataclass(frozen=True, eq=False)
class RatFunc:
    """An element num/den of K(x), K the coefficient domain of ``field``."""

    num: Poly
    den: Poly
    field: BaseField

    # --- construction ---

    @classmethod
    def from_polys(cls, num: Poly, den: Poly, field: BaseField) -> "RatFunc":
        if den.is_zero:
            raise DivisionByZeroError("zero denominator")
        if num.is_zero:
            return cls(num, constant_poly(1, field), field)
        g = num.gcd(den)
        if g.degree() > 0:
            num, den = num.exquo(g), den.exquo(g)
        lc = leading(den)
        if lc != field.domain.one:
            num, den = num.quo_ground(lc), den.monic()
        return cls(num, den, field)

    @classmethod
    def from_poly(cls, poly: Poly, field: BaseField) -> "RatFunc":
        return cls(poly, constant_poly(1, field), field)

    @classmethod
    def from_expr(cls, expr: Any, field: BaseField) -> "RatFunc":
        """Builds a RatFunc from a sympy expression in x and the field symbol."""
        expr = sympy.together(sympy.sympify(expr))
        num, den = sympy.fraction(expr)
        return cls.from_polys(poly_from_expr(num, field), poly_from_expr(den, field), field)

    @classmethod
    def constant(cls, value: Any, field: BaseField) -> "RatFunc":
        """A constant; ``value`` may be an int, a Rational or a domain element."""
        element = field.domain.convert(value) if not isinstance(value, sympy.Basic) else field.convert(value)
        return cls.from_poly(constant_poly(element, field), field)

    @classmethod
    def zero(cls, field: BaseField) -> "RatFunc":
        return cls.constant(0, field)

    @classmethod
    def one(cls, field: BaseField) -> "RatFunc":
        return cls.constant(1, field)

    @classmethod
    def x(cls, field: BaseField) -> "RatFunc":
        return cls.from_poly(Poly(X, X, domain=field.domain), field)

    @classmethod
    def monomial(cls, k: int, field: BaseField) -> "RatFunc":
        """x**k for any integer k."""
        power = Poly(X ** abs(k), X, domain=field.domain)
        one = constant_poly(1, field)
        return cls(power, one, field) if k >= 0 else cls(one, power, field)

    # --- inspection ---

    @property
    def domain(self):
        return self.field.domain

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    @property
    def is_constant(self) -> bool:
        return self.is_polynomial and self.num.degree() <= 0

    def constant_value(self):
        """The domain element of a constant RatFunc."""
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return self.domain.zero if self.is_zero else leading(self.num)

    def degree(self) -> Optional[int]:
        """deg(num) - deg(den); None for zero."""
        if self.is_zero:
            return None
        return self.num.degree() - self.den.degree()

    def order_at(self, factor: Poly) -> int:
        """Valuation at an irreducible factor (negative for a pole)."""
        if self.is_zero:
            raise ValueError("valuation of zero")
        return multiplicity(self.num, factor) - multiplicity(self.den, factor)

    def pole_order_at_zero(self) -> int:
        return multiplicity(self.den, Poly(X, X, domain=self.domain))

    def polynomial_part(self) -> Poly:
        return self.num.div(self.den)[0]

    def proper_part(self) -> "RatFunc":
        return RatFunc(self.num.div(self.den)[1], self.den, self.field)

    def as_expr(self) -> sympy.Expr:
        return self.num.as_expr() / self.den.as_expr()

    # --- arithmetic ---

    def _coerce(self, other: Any) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise TypeError(f"cannot mix {self.field.describe()} and {other.field.describe()}")
            return other
        if isinstance(other, (int, sympy.Basic)):
            return RatFunc.constant(other, self.field)
        return RatFunc.constant(self.domain.convert(other), self.field)

    def __add__(self, other: Any) -> "RatFunc":
        other = self._coerce(other)
        if self.den == other.den:
            return RatFunc.from_polys(self.num + other.num, self.den, self.field)
        return RatFunc.from_polys(self.num * other.den + other.num * self.den, self.den * other.den, self.field)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, self.field)

    def __sub__(self, other: Any) -> "RatFunc":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "RatFunc":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "RatFunc":
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return RatFunc.zero(self.field)
        return RatFunc.from_polys(self.num * other.num, self.den * other.den, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "RatFunc":
        other = self._coerce(other)
        if other.is_zero:
            raise DivisionByZeroError(f"division of {self} by zero")
        return RatFunc.from_polys(self.num * other.den, self.den * other.num, self.field)

    def __rtruediv__(self, other: Any) -> "RatFunc":
        return self._coerce(other) / self

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            if self.is_zero:
                raise DivisionByZeroError("negative power of zero")
            return RatFunc.from_polys(self.den ** (-k), self.num ** (-k), self.field)
        return RatFunc.from_polys(self.num**k, self.den**k, self.field)

    def scale(self, c) -> "RatFunc":
        """Multiplication by a domain element."""
        if not c:
            return RatFunc.zero(self.field)
        return RatFunc(self.num.mul_ground(c), self.den, self.field)

    # --- calculus and substitutions ---

    def diff(self) -> "RatFunc":
        """d/dx."""
        if self.is_polynomial:
            return RatFunc.from_polys(self.num.diff(X), self.den, self.field)
        num = self.num.diff(X) * self.den - self.num * self.den.diff(X)
        return RatFunc.from_polys(num, self.den**2, self.field)

    def euler(self) -> "RatFunc":
        """x * d/dx."""
        return self.diff() * RatFunc.x(self.field)

    def shift(self, a) -> "RatFunc":
        """f(x + a) for a domain element or integer a."""
        a = self.domain.convert(a)
        return RatFunc(self.num.shift(a), self.den.shift(a), self.field)

    def dilate(self, c) -> "RatFunc":
        """f(c*x) for a nonzero domain element c."""
        def scaled(p: Poly) -> Poly:
            values = coeffs_low_first(p)
            power, out = self.domain.one, []
            for v in values:
                out.append(v * power)
                power = power * c
            return poly_from_coeffs(out, self.field, low_first=True)

        return RatFunc.from_polys(scaled(self.num), scaled(self.den), self.field)

    def map_coefficients(self, fn: Callable) -> "RatFunc":
        """Applies a field automorphism of K coefficient-wise."""
        num = poly_from_coeffs([fn(c) for c in coeffs(self.num)], self.field)
        den = poly_from_coeffs([fn(c) for c in coeffs(self.den)], self.field)
        return RatFunc.from_polys(num, den, self.field)

    def evaluate(self, point):
        """Value at x = point (a domain element); raises at a pole."""
        point = self.domain.convert(point)
        den = _horner(coeffs(self.den), point, self.domain)
        if not den:
            raise SingularPointError(f"{self} has a pole at x = {self.field.to_sympy(point)}")
        return self.domain.quo(_horner(coeffs(self.num), point, self.domain), den)

    def compose_polynomial(self, p: Poly) -> "RatFunc":
        """f(p(x)) for a polynomial p."""
        return RatFunc.from_polys(self.num.compose(p), self.den.compose(p), self.field)

    # --- dunder ---

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, sympy.Basic)):
            other = self._coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.field == other.field and coeffs(self.num) == coeffs(other.num) and coeffs(self.den) == coeffs(other.den)

    def __hash__(self) -> int:
        return hash((self.field, tuple(coeffs(self.num)), tuple(coeffs(self.den))))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __reduce__(self):
        return _rebuild, (self.field, str(self.num.as_expr()), str(self.den.as_expr()))

    def __str__(self) -> str:
        from sigmadep.algebra.printing import format_ratfunc

        return format_ratfunc(self)

    def __repr__(self) -> str:
        return f"RatFunc({self}, field={self.field.describe()})"


def _horner(values: list, point, domain):
    result = domain.zero
    for v in values:
        result = result * point + v
    return result
