"""
The skew polynomial ring k[sigma] with sigma * c = sigma(c) * sigma, for k = Q (trivial
twist) or k = Q(t) (sigma(t) = t + 1), and the lattice of G_a subgroups it describes.
"""
import logging
from dataclasses import dataclass
from typing import Any, Optional, Sequence, Tuple

import sympy

from sigmadep.algebra.fields import SYMBOLS, BaseField, FieldTag
from sigmadep.algebra.printing import format_operator, format_scalar
from sigmadep.algebra.ratfunc import RatFunc
from sigmadep.core.errors import BothZeroError, DivisionByZeroError, ZeroPolynomialError

logger = logging.getLogger(__name__)


def twist(c, k: int, field: BaseField):
    """sigma^k on a coefficient: identity on Q, t -> t + k on Q(t)."""
    if field.tag is not FieldTag.QOFT or k == 0 or not c:
        return c
    t = SYMBOLS["t"]
    return field.convert(field.to_sympy(c).subs(t, t + k))


@dataclass(frozen=True)
class SkewPoly:
    """sum_i coefficients[i] * sigma^i with coefficients in the field's domain."""

    coefficients: Tuple[Any, ...]
    field: BaseField

    def __post_init__(self):
        if self.field.tag not in (FieldTag.Q, FieldTag.QOFT):
            raise ValueError(f"skew polynomials live over Q or Q(t), not {self.field.describe()}")
        values = [self.field.domain.convert(c) for c in self.coefficients]
        while values and not values[-1]:
            values.pop()
        object.__setattr__(self, "coefficients", tuple(values))

    @classmethod
    def from_values(cls, values: Sequence[Any], field: BaseField) -> "SkewPoly":
        """Coefficients c_0..c_n as ints, sympy expressions or domain elements."""
        converted = [field.convert(v) if isinstance(v, (int, str, sympy.Basic)) else v for v in values]
        return cls(tuple(converted), field)

    @classmethod
    def sigma_power(cls, k: int, field: BaseField) -> "SkewPoly":
        return cls(tuple([field.domain.zero] * k + [field.domain.one]), field)

    @classmethod
    def zero(cls, field: BaseField) -> "SkewPoly":
        return cls((), field)

    # --- inspection ---

    @property
    def order(self) -> int:
        """Order in sigma; -1 for zero."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self):
        if self.is_zero:
            raise ZeroPolynomialError("the zero skew polynomial has no leading coefficient")
        return self.coefficients[-1]

    @property
    def trailing(self):
        return self.coefficients[0] if self.coefficients else self.field.domain.zero

    def coefficient(self, i: int):
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else self.field.domain.zero

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coefficients) if c)

    def is_monic(self) -> bool:
        return not self.is_zero and self.leading == self.field.domain.one

    # --- ring operations ---

    def _check(self, other: "SkewPoly"):
        if other.field != self.field:
            raise TypeError("skew polynomials over different fields")

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return SkewPoly(tuple(self.coefficient(i) + other.coefficient(i) for i in range(n)), self.field)

    def __neg__(self) -> "SkewPoly":
        return SkewPoly(tuple(-c for c in self.coefficients), self.field)

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return self + (-other)

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        """(a sigma^i)(b sigma^j) = a sigma^i(b) sigma^(i+j)."""
        self._check(other)
        if self.is_zero or other.is_zero:
            return SkewPoly.zero(self.field)
        out = [self.field.domain.zero] * (self.order + other.order + 1)
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j, b in enumerate(other.coefficients):
                if b:
                    out[i + j] += a * twist(b, i, self.field)
        return SkewPoly(tuple(out), self.field)

    def left_scale(self, c) -> "SkewPoly":
        return SkewPoly(tuple(c * a for a in self.coefficients), self.field)

    def monic(self) -> "SkewPoly":
        inv = self.field.domain.quo(self.field.domain.one, self.leading)
        return self.left_scale(inv)

    def right_divide(self, divisor: "SkewPoly") -> Tuple["SkewPoly", "SkewPoly"]:
        """
        (q, r) with self = q * divisor + r and ord(r) < ord(divisor).

        Raises:
            DivisionByZeroError: for a zero divisor.
        """
        self._check(divisor)
        if divisor.is_zero:
            raise DivisionByZeroError("right division by the zero skew polynomial")
        domain = self.field.domain
        n = divisor.order
        quotient = SkewPoly.zero(self.field)
        remainder = self
        while not remainder.is_zero and remainder.order >= n:
            shift = remainder.order - n
            e = domain.quo(remainder.leading, twist(divisor.leading, shift, self.field))
            term = SkewPoly(tuple([domain.zero] * shift + [e]), self.field)
            quotient = quotient + term
            remainder = remainder - term * divisor
        return quotient, remainder

    def apply(self, y):
        """L(y) = sum_i c_i * sigma^i(y) for a coefficient-domain element or a RatFunc over the field."""
        if isinstance(y, RatFunc):
            total = RatFunc.zero(y.field)
            for i, c in enumerate(self.coefficients):
                if c:
                    total = total + y.map_coefficients(lambda e, i=i: twist(e, i, self.field)).scale(c)
            return total
        total = self.field.domain.zero
        for i, c in enumerate(self.coefficients):
            if c:
                total += c * twist(y, i, self.field)
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.field == other.field and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.field, self.coefficients))

    def __str__(self) -> str:
        return format_operator([format_scalar(c, self.field) for c in self.coefficients], "S")


def skew_right_divide(a: SkewPoly, b: SkewPoly) -> Tuple[SkewPoly, SkewPoly]:
    return a.right_divide(b)


def skew_right_gcd(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    """Monic greatest common right divisor.

    Raises:
        BothZeroError: if both inputs are zero.
    """
    if a.is_zero and b.is_zero:
        raise BothZeroError("gcrd of two zero skew polynomials")
    while not b.is_zero:
        _, r = a.right_divide(b)
        a, b = b, r
    return a.monic()


def skew_left_lcm(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    """
    Monic least common left multiple, read off the extended Euclidean algorithm:
    at the step where the remainder vanishes, s*a + t*b = 0 and s*a is the lclm.

    Raises:
        BothZeroError: if both inputs are zero.
    """
    if a.is_zero and b.is_zero:
        raise BothZeroError("lclm of two zero skew polynomials")
    if a.is_zero or b.is_zero:
        return SkewPoly.zero(a.field)
    one = SkewPoly.sigma_power(0, a.field)
    r0, r1 = a, b
    s0, s1 = one, SkewPoly.zero(a.field)
    while not r1.is_zero:
        q, r = r0.right_divide(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    return (s1 * a).monic()


@dataclass(frozen=True)
class GaSubgroup:
    """
    The sigma-closed subgroup {g : p(g) = 0} of G_a for a linear sigma-polynomial p.

    The generator is kept monic. A nonzero constant term makes the subgroup
    sigma-integral and perfectly sigma-reduced.
    """

    generator: SkewPoly

    def __post_init__(self):
        if not self.generator.is_zero:
            object.__setattr__(self, "generator", self.generator.monic())

    @property
    def sigma_integral(self) -> bool:
        return self.generator.is_zero or bool(self.generator.trailing)

    @property
    def perfectly_sigma_reduced(self) -> bool:
        return self.generator.is_zero or bool(self.generator.trailing)

    def contains(self, q: SkewPoly) -> bool:
        """Whether the equation q vanishes on the subgroup, i.e. q lies in the sigma-ideal [p]."""
        return ga_membership(q, self)

    def contains_subgroup(self, other: "GaSubgroup") -> bool:
        """other is a subgroup of self iff the generator of self vanishes on other."""
        return other.contains(self.generator)

    def meet(self, other: "GaSubgroup") -> "GaSubgroup":
        """Intersection: the ideal sum is generated by the gcrd."""
        if self.generator.is_zero and other.generator.is_zero:
            return self
        return GaSubgroup(skew_right_gcd(self.generator, other.generator))

    def join(self, other: "GaSubgroup") -> "GaSubgroup":
        """The subgroup generated by both: the ideal intersection is generated by the lclm."""
        return GaSubgroup(skew_left_lcm(self.generator, other.generator))


def ga_membership(q: SkewPoly, group: GaSubgroup) -> bool:
    """
    Reduces q by left multiples of sigma^j(p) until its order drops below ord(p);
    q lies in [p] iff the reduction ends at zero.
    """
    if group.generator.is_zero:
        return q.is_zero
    _, remainder = q.right_divide(group.generator)
    logger.debug(f"membership of {q} in [{group.generator}]: remainder {remainder}")
    return remainder.is_zero


@dataclass(frozen=True)
class GaGmCase:
    """Case i: sigma^n(beta) = 0; case ii: sigma^n(alpha) = sigma^m(alpha)."""

    case: str
    n: int
    m: Optional[int] = None


def classify_gagm(p_u: SkewPoly) -> GaGmCase:
    """
    Raises:
        ZeroPolynomialError: for p_u = 0.
    """
    if p_u.is_zero:
        raise ZeroPolynomialError("classify_gagm needs a nonzero generator")
    support = p_u.support
    if len(support) == 1:
        return GaGmCase(case="i", n=support[0])
    return GaGmCase(case="ii", n=support[-1], m=support[0])
