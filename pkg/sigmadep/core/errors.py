"""
Exception hierarchy shared by every sigmadep module.

Each error carries a short machine-readable ``code`` that the CLI copies into its
JSON error object.
"""
from typing import Iterable, Optional


class SigmaDepError(Exception):
    """Base class for all errors raised by the library."""

    code: str = "error"

    def __init__(self, message: str = "", *, code: Optional[str] = None):
        super().__init__(message or self.__class__.__doc__ or self.code)
        if code is not None:
            self.code = code


# --- core-arith ---


class ZeroPolynomialError(SigmaDepError):
    """The operation is undefined on the zero polynomial."""

    code = "zero_polynomial"


class DivisionByZeroError(SigmaDepError, ZeroDivisionError):
    """Division by the zero rational function."""

    code = "division_by_zero"


class InvalidQValueError(SigmaDepError, ValueError):
    """q must not be 0 or a root of unity."""

    code = "invalid_q"


# --- contexts and criteria ---


class UnsupportedContextError(SigmaDepError):
    """The operation is not defined for this delta-sigma context."""

    code = "unsupported_context"


class EmptyInputError(SigmaDepError, ValueError):
    """At least one input is required."""

    code = "empty_input"


# --- ode ---


class ZeroOperatorError(SigmaDepError, ValueError):
    """The operator is zero."""

    code = "zero_operator"


class CyclicVectorFailure(SigmaDepError):
    """No cyclic vector was found within the configured number of attempts."""

    code = "cyclic_vector_failure"


class SingularPointError(SigmaDepError, ValueError):
    """The expansion point is a singular point of the operator."""

    code = "singular_point"


class UnsupportedOrderError(SigmaDepError, ValueError):
    """The operation is only implemented for operators of order 2."""

    code = "unsupported_order"


class NonSquareError(SigmaDepError, ValueError):
    """The matrix is not square."""

    code = "non_square"


# --- diffgroups ---


class BothZeroError(SigmaDepError, ValueError):
    """gcd/lcm of two zero skew polynomials."""

    code = "both_zero"


class InvalidLeadingExponentError(SigmaDepError, ValueError):
    """The leading exponent of a mu_p relation vanishes modulo p."""

    code = "invalid_leading_exponent"


class FieldNotLinearlySigmaClosed(SigmaDepError):
    """The recurrence has fewer rational solutions than its order."""

    code = "field_not_linearly_sigma_closed"


class NonMonicError(SigmaDepError, ValueError):
    """The skew polynomial must be monic with a nonzero trailing coefficient."""

    code = "non_monic"


# --- cli ---


class ExpressionSyntaxError(SigmaDepError, ValueError):
    """The text is not in the expression grammar."""

    code = "syntax_error"

    def __init__(self, message: str, position: int, expected: Iterable[str] = ()):
        self.position = position
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class WrongSymbolForContextError(SigmaDepError, ValueError):
    """The expression uses a symbol that does not exist in the active context."""

    code = "wrong_symbol"


class CertificateVerificationError(SigmaDepError):
    """An emitted certificate failed re-verification."""

    code = "verification_failed"
