"""
Delta-sigma contexts and the reduction engine behind every criterion.
"""

# From context.py
from .context import ContextCase, DeltaSigmaContext, Derivation

# From reduction.py
from .reduction import (
    HermiteDecomposition,
    LogDerivativeCertificate,
    ResidueData,
    hermite_reduce,
    is_derivative,
    laurent_terms,
    logderivative_decompose,
    residue_analysis,
    split_pole_at_zero,
)

__all__ = [
    # From context.py
    "ContextCase",
    "DeltaSigmaContext",
    "Derivation",
    # From reduction.py
    "HermiteDecomposition",
    "LogDerivativeCertificate",
    "ResidueData",
    "hermite_reduce",
    "is_derivative",
    "laurent_terms",
    "logderivative_decompose",
    "residue_analysis",
    "split_pole_at_zero",
]
