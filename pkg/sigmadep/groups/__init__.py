"""
Difference-group algebra: skew polynomials, G_a subgroups, mu_p periods and
rational solutions of shift recurrences.
"""

# From skew.py
from .skew import (
    GaGmCase,
    GaSubgroup,
    SkewPoly,
    classify_gagm,
    ga_membership,
    skew_left_lcm,
    skew_right_divide,
    skew_right_gcd,
    twist,
)

# From mup.py
from .mup import MupRelation, mup_period

# From recurrence.py
from .recurrence import (
    Realization,
    realize_ga_subgroup,
    recurrence_rational_solutions,
    universal_denominator,
)

__all__ = [
    # From skew.py
    "GaGmCase",
    "GaSubgroup",
    "SkewPoly",
    "classify_gagm",
    "ga_membership",
    "skew_left_lcm",
    "skew_right_divide",
    "skew_right_gcd",
    "twist",
    # From mup.py
    "MupRelation",
    "mup_period",
    # From recurrence.py
    "Realization",
    "realize_ga_subgroup",
    "recurrence_rational_solutions",
    "universal_denominator",
]
