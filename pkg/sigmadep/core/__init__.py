"""
sigmadep.core - Shared verdict types and the exception hierarchy.
"""

# Export from core_interfaces.py
from sigmadep.core.core_interfaces import (
    Certificate,
    GroupTag,
    Outcome,
    Verdict,
)

# Export from errors.py
from sigmadep.core.errors import (
    BothZeroError,
    CertificateVerificationError,
    CyclicVectorFailure,
    DivisionByZeroError,
    EmptyInputError,
    ExpressionSyntaxError,
    FieldNotLinearlySigmaClosed,
    InvalidLeadingExponentError,
    InvalidQValueError,
    NonMonicError,
    NonSquareError,
    SigmaDepError,
    SingularPointError,
    UnsupportedContextError,
    UnsupportedOrderError,
    WrongSymbolForContextError,
    ZeroOperatorError,
    ZeroPolynomialError,
)

__all__ = [
    # From core_interfaces.py
    "Certificate",
    "GroupTag",
    "Outcome",
    "Verdict",
    # From errors.py
    "BothZeroError",
    "CertificateVerificationError",
    "CyclicVectorFailure",
    "DivisionByZeroError",
    "EmptyInputError",
    "ExpressionSyntaxError",
    "FieldNotLinearlySigmaClosed",
    "InvalidLeadingExponentError",
    "InvalidQValueError",
    "NonMonicError",
    "NonSquareError",
    "SigmaDepError",
    "SingularPointError",
    "UnsupportedContextError",
    "UnsupportedOrderError",
    "WrongSymbolForContextError",
    "ZeroOperatorError",
    "ZeroPolynomialError",
]
