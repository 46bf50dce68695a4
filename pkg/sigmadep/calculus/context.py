"""
The four concrete delta-sigma structures on K = k(x) and their commutation data.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional, Union

import sympy

from sigmadep.algebra.fields import SYMBOLS, BaseField, FieldTag
from sigmadep.algebra.ratfunc import RatFunc
from sigmadep.core.errors import InvalidQValueError, UnsupportedContextError

logger = logging.getLogger(__name__)


class ContextCase(Enum):
    SHIFT = "shift"
    QDIFF_DDX = "qdiff-ddx"
    QDIFF_EULER = "qdiff-euler"
    PARAM_SHIFT = "param-shift"


class Derivation(Enum):
    DDX = "ddx"
    EULER = "euler"


_ALLOWED_FIELDS = {
    ContextCase.SHIFT: {FieldTag.Q, FieldTag.QOFS},
    ContextCase.QDIFF_DDX: {FieldTag.QOFQ},
    ContextCase.QDIFF_EULER: {FieldTag.QOFQ},
    ContextCase.PARAM_SHIFT: {FieldTag.QOFT},
}


@dataclass(frozen=True)
class DeltaSigmaContext:
    """
    A derivation delta and an automorphism sigma of K with delta(sigma(f)) = hbar * sigma(delta(f)).

    Shift:      delta = d/dx,   sigma(x) = x + 1, hbar = 1
    QDiffDdx:   delta = d/dx,   sigma(x) = q*x,   hbar = q
    QDiffEuler: delta = x*d/dx, sigma(x) = q*x,   hbar = 1
    ParamShift: delta = d/dx,   sigma(t) = t + 1 and sigma(x) = x, hbar = 1
    """

    case: ContextCase
    field: BaseField

    def __post_init__(self):
        if self.field.tag not in _ALLOWED_FIELDS[self.case]:
            raise UnsupportedContextError(
                f"context {self.case.value} is not defined over {self.field.describe()}"
            )

    # --- factories ---

    @classmethod
    def shift(cls, field: Optional[BaseField] = None) -> "DeltaSigmaContext":
        return cls(ContextCase.SHIFT, field or BaseField.rationals())

    @classmethod
    def qdiff_ddx(cls, q: Any = None) -> "DeltaSigmaContext":
        return cls(ContextCase.QDIFF_DDX, _q_field(q))

    @classmethod
    def qdiff_euler(cls, q: Any = None) -> "DeltaSigmaContext":
        return cls(ContextCase.QDIFF_EULER, _q_field(q))

    @classmethod
    def param_shift(cls) -> "DeltaSigmaContext":
        return cls(ContextCase.PARAM_SHIFT, BaseField.parameter_t())

    @classmethod
    def from_name(cls, name: str, q: str = "transcendental") -> "DeltaSigmaContext":
        """Builds a context from its command-line name and q mode."""
        try:
            case = ContextCase(name)
        except ValueError:
            raise UnsupportedContextError(f"unknown context {name!r}") from None
        if case is ContextCase.SHIFT:
            return cls.shift()
        if case is ContextCase.PARAM_SHIFT:
            return cls.param_shift()
        value = None if q in (None, "", "transcendental") else _parse_q(q)
        return cls.qdiff_ddx(value) if case is ContextCase.QDIFF_DDX else cls.qdiff_euler(value)

    # --- properties ---

    @property
    def derivation(self) -> Derivation:
        return Derivation.EULER if self.case is ContextCase.QDIFF_EULER else Derivation.DDX

    @property
    def is_q_case(self) -> bool:
        return self.case in (ContextCase.QDIFF_DDX, ContextCase.QDIFF_EULER)

    @property
    def q_is_algebraic(self) -> bool:
        return self.is_q_case and self.field.is_algebraic_q

    @property
    def allowed_symbols(self) -> frozenset:
        return self.field.symbol_names

    def describe(self) -> str:
        if self.is_q_case:
            mode = f"q = {self.field.q_value}" if self.q_is_algebraic else "q transcendental"
            return f"{self.case.value} ({mode})"
        return f"{self.case.value} over {self.field.describe()}"

    # --- delta and sigma ---

    def delta(self, f: RatFunc) -> RatFunc:
        return f.euler() if self.derivation is Derivation.EULER else f.diff()

    def sigma(self, f: RatFunc) -> RatFunc:
        return self.sigma_pow(f, 1)

    def sigma_pow(self, f: RatFunc, d: Union[int, Any]) -> RatFunc:
        """
        sigma^d(f) by direct substitution: x -> x + d, x -> q^d x, or t -> t + d.

        In the Shift context over Q(s), d may be the domain element s.
        """
        if isinstance(d, int) and d == 0:
            return f
        if self.case is ContextCase.SHIFT:
            return f.shift(d)
        if self.is_q_case:
            return f.dilate(self.field.q**d)
        return f.map_coefficients(lambda c: self.sigma_coeff(c, d))

    def sigma_coeff(self, c, d: int = 1):
        """sigma^d on a coefficient-domain element; only ParamShift moves constants."""
        if self.case is not ContextCase.PARAM_SHIFT or d == 0:
            return c
        t = SYMBOLS["t"]
        return self.field.convert(self.field.to_sympy(c).subs(t, t + d))

    def hbar(self):
        return self.hbar_d(1)

    def hbar_d(self, d: int):
        """hbar * sigma(hbar) * ... * sigma^(d-1)(hbar): q^d for QDiffDdx, else 1."""
        if self.case is ContextCase.QDIFF_DDX:
            return self.field.q**d
        return self.field.domain.one

    def commutes_on(self, f: RatFunc) -> bool:
        """Checks delta(sigma(f)) == hbar * sigma(delta(f))."""
        return self.delta(self.sigma(f)) == self.sigma(self.delta(f)).scale(self.hbar())

    def log_basis(self) -> RatFunc:
        """The element c * basis standing for the constant part of a log-derivative shape: 1/x for d/dx, 1 for x*d/dx."""
        if self.derivation is Derivation.EULER:
            return RatFunc.one(self.field)
        return RatFunc.monomial(-1, self.field)


def _parse_q(text: str) -> sympy.Rational:
    try:
        return sympy.Rational(text)
    except (TypeError, ValueError, sympy.SympifyError):
        raise InvalidQValueError(f"q must be 'transcendental' or a rational number, got {text!r}") from None


def _q_field(q: Any) -> BaseField:
    if q is None:
        return BaseField.q_transcendental()
    return BaseField.q_algebraic(q)
