"""
sigmadep - decision procedures for transformal dependence of solutions of linear
differential equations under a shift, a q-dilation or a parameter shift.

This package provides:
- Exact rational function arithmetic, Hermite reduction and residue analysis
- Additive, multiplicative and inhomogeneous dependence criteria with certificates
- Rational solutions of linear ODEs and sigma^d-integrability tests
- Skew polynomial algebra for difference subgroups of G_a and mu_p
- Layered settings and a command line
"""

# Re-export settings
from sigmadep.config import SolverSettings, ValidationError

# Re-export core types
from sigmadep.core import Certificate, GroupTag, Outcome, SigmaDepError, Verdict

# Re-export the algebra and the contexts
from sigmadep.algebra import BaseField, RatFunc
from sigmadep.calculus import DeltaSigmaContext, hermite_reduce, residue_analysis

# Re-export the decision procedures
from sigmadep.criteria import (
    additive_dependence,
    additive_dependence_multi,
    additive_galois_group,
    inhomogeneous_first_order,
    multiplicative_dependence,
)
from sigmadep.groups import SkewPoly, mup_period, realize_ga_subgroup
from sigmadep.integrability import airy_obstruction, is_sigma_d_integrable, order2_integrability
from sigmadep.ode import LinDiffOp, rational_solutions, symmetric_power

__version__ = "0.1.0"

__all__ = [
    # Settings
    "SolverSettings",
    "ValidationError",
    # Core
    "Certificate",
    "GroupTag",
    "Outcome",
    "SigmaDepError",
    "Verdict",
    # Algebra
    "BaseField",
    "DeltaSigmaContext",
    "RatFunc",
    "hermite_reduce",
    "residue_analysis",
    # Criteria
    "additive_dependence",
    "additive_dependence_multi",
    "additive_galois_group",
    "inhomogeneous_first_order",
    "multiplicative_dependence",
    # Groups
    "SkewPoly",
    "mup_period",
    "realize_ga_subgroup",
    # ODE and integrability
    "LinDiffOp",
    "airy_obstruction",
    "is_sigma_d_integrable",
    "order2_integrability",
    "rational_solutions",
    "symmetric_power",
]
