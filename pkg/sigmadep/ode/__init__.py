"""
Linear differential operators and systems over K = k(x).
"""

# From operators.py
from .operators import LinDiffOp, LinDiffSystem, SolutionSpace, apply_derivation, companion

# From solvers.py
from .solvers import (
    ParametricSolution,
    degree_bound,
    parametric_rational_solutions,
    rational_solutions,
    universal_denominator,
)

# From cyclic.py
from .cyclic import CyclicVectorReduction, cyclic_vector, system_rational_solutions

# From series.py
from .series import TruncatedSeries, series_residual, series_solutions, taylor_coefficients

# From symmetric.py
from .symmetric import symmetric_power

__all__ = [
    # From operators.py
    "LinDiffOp",
    "LinDiffSystem",
    "SolutionSpace",
    "apply_derivation",
    "companion",
    # From solvers.py
    "ParametricSolution",
    "degree_bound",
    "parametric_rational_solutions",
    "rational_solutions",
    "universal_denominator",
    # From cyclic.py
    "CyclicVectorReduction",
    "cyclic_vector",
    "system_rational_solutions",
    # From series.py
    "TruncatedSeries",
    "series_residual",
    "series_solutions",
    "taylor_coefficients",
    # From symmetric.py
    "symmetric_power",
]
