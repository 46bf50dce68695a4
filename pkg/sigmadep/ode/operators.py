"""
Linear differential operators sum_i c_i * delta^i and first-order systems
delta(Y) = A*Y (+ b) over K = k(x).
"""
import logging
from dataclasses import dataclass
from typing import Any, Optional, Sequence, Tuple

import sympy

from sigmadep.algebra.fields import BaseField
from sigmadep.algebra.printing import format_operator
from sigmadep.algebra.ratfunc import RatFunc
from sigmadep.calculus.context import Derivation
from sigmadep.core.errors import NonSquareError, ZeroOperatorError

logger = logging.getLogger(__name__)


def apply_derivation(f: RatFunc, derivation: Derivation) -> RatFunc:
    return f.euler() if derivation is Derivation.EULER else f.diff()


@dataclass(frozen=True)
class LinDiffOp:
    """sum_i coefficients[i] * delta^i; trailing zero coefficients are stripped."""

    coefficients: Tuple[RatFunc, ...]
    field: BaseField
    derivation: Derivation = Derivation.DDX

    def __post_init__(self):
        values = list(self.coefficients)
        while values and values[-1].is_zero:
            values.pop()
        object.__setattr__(self, "coefficients", tuple(values))

    @classmethod
    def from_coefficients(
        cls, values: Sequence[Any], field: BaseField, derivation: Derivation = Derivation.DDX
    ) -> "LinDiffOp":
        """Coefficients c_0..c_n given as RatFunc, ints or sympy expressions."""
        coefficients = tuple(v if isinstance(v, RatFunc) else RatFunc.from_expr(v, field) for v in values)
        return cls(coefficients, field, derivation)

    @classmethod
    def delta_power(cls, k: int, field: BaseField, derivation: Derivation = Derivation.DDX) -> "LinDiffOp":
        values = [RatFunc.zero(field)] * k + [RatFunc.one(field)]
        return cls(tuple(values), field, derivation)

    @property
    def order(self) -> int:
        """Order of the operator; -1 for the zero operator."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> RatFunc:
        if self.is_zero:
            raise ZeroOperatorError("the zero operator has no leading coefficient")
        return self.coefficients[-1]

    def coefficient(self, i: int) -> RatFunc:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else RatFunc.zero(self.field)

    def delta(self, f: RatFunc) -> RatFunc:
        return apply_derivation(f, self.derivation)

    def apply(self, f: RatFunc) -> RatFunc:
        """L(f) = sum_i c_i * delta^i(f)."""
        result = RatFunc.zero(self.field)
        current = f
        for i, c in enumerate(self.coefficients):
            if i:
                current = self.delta(current)
            if not c.is_zero:
                result = result + c * current
        return result

    def monic(self) -> "LinDiffOp":
        lead = self.leading
        return LinDiffOp(tuple(c / lead for c in self.coefficients), self.field, self.derivation)

    def is_monic(self) -> bool:
        return not self.is_zero and self.leading == 1

    def left_multiply(self, f: RatFunc) -> "LinDiffOp":
        return LinDiffOp(tuple(f * c for c in self.coefficients), self.field, self.derivation)

    def _check(self, other: "LinDiffOp"):
        if other.field != self.field or other.derivation is not self.derivation:
            raise TypeError("operators over different fields or derivations")

    def __add__(self, other: "LinDiffOp") -> "LinDiffOp":
        self._check(other)
        n = max(len(self.coefficients), len(other.coefficients))
        values = tuple(self.coefficient(i) + other.coefficient(i) for i in range(n))
        return LinDiffOp(values, self.field, self.derivation)

    def __neg__(self) -> "LinDiffOp":
        return LinDiffOp(tuple(-c for c in self.coefficients), self.field, self.derivation)

    def __sub__(self, other: "LinDiffOp") -> "LinDiffOp":
        return self + (-other)

    def __mul__(self, other: "LinDiffOp") -> "LinDiffOp":
        """
        Composition self o other, using delta^i * d = sum_k binom(i, k) delta^k(d) delta^(i-k).
        """
        self._check(other)
        if self.is_zero or other.is_zero:
            return LinDiffOp((), self.field, self.derivation)
        out = [RatFunc.zero(self.field)] * (self.order + other.order + 1)
        for i, c in enumerate(self.coefficients):
            if c.is_zero:
                continue
            for j, d in enumerate(other.coefficients):
                derivative = d
                for k in range(i + 1):
                    if k:
                        derivative = self.delta(derivative)
                    if derivative.is_zero:
                        break
                    out[i - k + j] = out[i - k + j] + c * derivative * int(sympy.binomial(i, k))
        return LinDiffOp(tuple(out), self.field, self.derivation)

    def to_ddx(self) -> "LinDiffOp":
        """Rewrites an operator in x*d/dx as an operator in d/dx."""
        if self.derivation is Derivation.DDX:
            return self
        x = RatFunc.x(self.field)
        theta = LinDiffOp((RatFunc.zero(self.field), x), self.field, Derivation.DDX)
        power = LinDiffOp.delta_power(0, self.field)
        result = LinDiffOp((), self.field, Derivation.DDX)
        for c in self.coefficients:
            result = result + power.left_multiply(c)
            power = theta * power
        return result

    def __str__(self) -> str:
        return format_operator([str(c) for c in self.coefficients], "D")


@dataclass(frozen=True)
class LinDiffSystem:
    """delta(Y) = matrix * Y + rhs."""

    matrix: Tuple[Tuple[RatFunc, ...], ...]
    field: BaseField
    derivation: Derivation = Derivation.DDX
    rhs: Optional[Tuple[RatFunc, ...]] = None

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.matrix)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise NonSquareError(f"system matrix must be square, got {n} rows of lengths {[len(r) for r in rows]}")
        if self.rhs is not None and len(self.rhs) != n:
            raise NonSquareError(f"inhomogeneity of length {len(self.rhs)} for a {n}x{n} system")
        object.__setattr__(self, "matrix", rows)
        if self.rhs is not None:
            object.__setattr__(self, "rhs", tuple(self.rhs))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], field: BaseField, derivation: Derivation = Derivation.DDX):
        matrix = tuple(tuple(v if isinstance(v, RatFunc) else RatFunc.from_expr(v, field) for v in row) for row in rows)
        return cls(matrix, field, derivation)

    @property
    def dimension(self) -> int:
        return len(self.matrix)

    @property
    def is_homogeneous(self) -> bool:
        return self.rhs is None or all(v.is_zero for v in self.rhs)

    def residual(self, y: Sequence[RatFunc]) -> Tuple[RatFunc, ...]:
        """delta(Y) - A*Y - b, zero exactly when Y solves the system."""
        out = []
        for i, row in enumerate(self.matrix):
            value = apply_derivation(y[i], self.derivation)
            for a, v in zip(row, y):
                if not a.is_zero:
                    value = value - a * v
            if self.rhs is not None:
                value = value - self.rhs[i]
            out.append(value)
        return tuple(out)

    def is_solution(self, y: Sequence[RatFunc]) -> bool:
        return all(v.is_zero for v in self.residual(y))


@dataclass(frozen=True)
class SolutionSpace:
    """
    Basis of the homogeneous solutions and an optional particular solution.

    Scalar spaces hold RatFunc values; system spaces hold tuples of RatFunc.
    """

    basis: Tuple[Any, ...] = ()
    particular: Optional[Any] = None

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def is_empty(self) -> bool:
        return not self.basis and self.particular is None


def companion(op: LinDiffOp) -> LinDiffSystem:
    """The companion system of the monic form of op: ones on the superdiagonal, -c_i/c_n in the last row."""
    if op.is_zero:
        raise ZeroOperatorError("companion matrix of the zero operator")
    n = op.order
    field = op.field
    monic = op.monic()
    zero, one = RatFunc.zero(field), RatFunc.one(field)
    rows = [[one if j == i + 1 else zero for j in range(n)] for i in range(n - 1)]
    rows.append([-monic.coefficient(j) for j in range(n)])
    return LinDiffSystem(tuple(tuple(r) for r in rows), field, op.derivation)
