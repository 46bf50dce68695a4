"""
sigma^d-integrability of linear differential systems and the dichotomy built on it.
"""

# From engine.py
from .engine import (
    IntegrabilityCertificate,
    IntegrabilityVerdict,
    find_invertible,
    integrability_sweep,
    integrability_system,
    is_sigma_d_integrable,
    run_sweep,
)

# From order2.py
from .order2 import AiryReport, airy_obstruction, airy_sweep, expected_airy_operator, order2_integrability, order2_system

# From dichotomy.py
from .dichotomy import DichotomyReport, sln_dichotomy_report

__all__ = [
    # From engine.py
    "IntegrabilityCertificate",
    "IntegrabilityVerdict",
    "find_invertible",
    "integrability_sweep",
    "integrability_system",
    "is_sigma_d_integrable",
    "run_sweep",
    # From order2.py
    "AiryReport",
    "airy_obstruction",
    "airy_sweep",
    "expected_airy_operator",
    "order2_integrability",
    "order2_system",
    # From dichotomy.py
    "DichotomyReport",
    "sln_dichotomy_report",
]
