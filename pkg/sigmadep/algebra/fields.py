"""
Base coefficient fields: Q, and the one-symbol rational function fields Q(q),
Q(t), Q(s).
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional

import sympy
from sympy import QQ, Rational, Symbol

from sigmadep.core.errors import InvalidQValueError

logger = logging.getLogger(__name__)

# Main variable of every rational function, and the auxiliary variable of
# Rothstein-Trager resultants.
X = Symbol("x")
Z = Symbol("z")

SYMBOLS = {"q": Symbol("q"), "t": Symbol("t"), "s": Symbol("s")}


class FieldTag(Enum):
    Q = "Q"
    QOFQ = "QofQ"
    QOFT = "QofT"
    QOFS = "QofS"


_TAG_SYMBOL = {FieldTag.QOFQ: "q", FieldTag.QOFT: "t", FieldTag.QOFS: "s"}


@dataclass(frozen=True)
class BaseField:
    """
    A coefficient field of the tower.

    ``QofQ`` with ``q_value`` set is the algebraic-q mode: q is the given rational
    number and the coefficient domain collapses to Q.
    """

    tag: FieldTag = FieldTag.Q
    q_value: Optional[Rational] = None

    def __post_init__(self):
        if self.q_value is None:
            return
        if self.tag is not FieldTag.QOFQ:
            raise InvalidQValueError("a numeric q only makes sense for the QofQ field")
        value = Rational(self.q_value)
        if value in (0, 1, -1):
            raise InvalidQValueError(f"q = {value} is zero or a root of unity")
        object.__setattr__(self, "q_value", value)

    # --- constructors ---

    @classmethod
    def rationals(cls) -> "BaseField":
        return cls(FieldTag.Q)

    @classmethod
    def q_transcendental(cls) -> "BaseField":
        return cls(FieldTag.QOFQ)

    @classmethod
    def q_algebraic(cls, value: Any) -> "BaseField":
        return cls(FieldTag.QOFQ, Rational(value))

    @classmethod
    def parameter_t(cls) -> "BaseField":
        return cls(FieldTag.QOFT)

    @classmethod
    def parameter_s(cls) -> "BaseField":
        return cls(FieldTag.QOFS)

    # --- properties ---

    @property
    def is_algebraic_q(self) -> bool:
        return self.q_value is not None

    @property
    def symbol(self) -> Optional[Symbol]:
        """The transcendental symbol of the field, None for Q and for numeric q."""
        if self.tag is FieldTag.Q or self.is_algebraic_q:
            return None
        return SYMBOLS[_TAG_SYMBOL[self.tag]]

    @property
    def symbol_names(self) -> frozenset:
        """Symbols an expression over this field may mention besides x."""
        if self.tag is FieldTag.Q:
            return frozenset()
        return frozenset({_TAG_SYMBOL[self.tag]})

    @property
    def domain(self):
        sym = self.symbol
        return QQ if sym is None else QQ.frac_field(sym)

    @property
    def q(self):
        """q as an element of the coefficient domain."""
        if self.tag is not FieldTag.QOFQ:
            raise InvalidQValueError(f"field {self.describe()} has no q")
        if self.is_algebraic_q:
            return QQ.convert(self.q_value)
        return self.domain.from_sympy(self.symbol)

    # --- element helpers ---

    def convert(self, value: Any):
        """Converts an int, Rational or sympy expression into the domain."""
        domain = self.domain
        if isinstance(value, int):
            return domain.convert(value)
        expr = sympy.sympify(value)
        if self.is_algebraic_q:
            expr = expr.subs(SYMBOLS["q"], self.q_value)
        return domain.from_sympy(expr)

    def to_sympy(self, element) -> sympy.Expr:
        return self.domain.to_sympy(element)

    def is_rational(self, element) -> bool:
        """True if the element lies in the prime field Q."""
        if self.domain == QQ:
            return True
        return not self.to_sympy(element).free_symbols

    def as_rational(self, element) -> Rational:
        if not self.is_rational(element):
            raise ValueError(f"{self.to_sympy(element)} is not a rational number")
        return Rational(self.to_sympy(element))

    def describe(self) -> str:
        if self.is_algebraic_q:
            return f"Q (q = {self.q_value})"
        return {FieldTag.Q: "Q", FieldTag.QOFQ: "Q(q)", FieldTag.QOFT: "Q(t)", FieldTag.QOFS: "Q(s)"}[self.tag]
