"""
Exact arithmetic layer: base fields, dense polynomials, reduced rational functions
and linear algebra over them.
"""

# From fields.py
from .fields import X, Z, BaseField, FieldTag

# From polys.py
from .polys import (
    SquarefreeDecomposition,
    coeffs,
    coeffs_low_first,
    integer_roots,
    irreducible_factors,
    leading,
    poly_from_coeffs,
    poly_from_expr,
    rational_roots,
    resultant,
    squarefree_decompose,
)

# From ratfunc.py
from .ratfunc import RatFunc

# From linalg.py
from .linalg import (
    clear_denominators,
    determinant,
    fraction_free_echelon,
    linear_relations,
    nullspace,
    ratfunc_nullspace,
    solve_left,
    solve_right,
)

# From printing.py
from .printing import format_operator, format_poly, format_ratfunc, format_rational, format_scalar

__all__ = [
    # From fields.py
    "X",
    "Z",
    "BaseField",
    "FieldTag",
    # From polys.py
    "SquarefreeDecomposition",
    "coeffs",
    "coeffs_low_first",
    "integer_roots",
    "irreducible_factors",
    "leading",
    "poly_from_coeffs",
    "poly_from_expr",
    "rational_roots",
    "resultant",
    "squarefree_decompose",
    # From ratfunc.py
    "RatFunc",
    # From linalg.py
    "clear_denominators",
    "determinant",
    "fraction_free_echelon",
    "linear_relations",
    "nullspace",
    "ratfunc_nullspace",
    "solve_left",
    "solve_right",
    # From printing.py
    "format_operator",
    "format_poly",
    "format_ratfunc",
    "format_rational",
    "format_scalar",
]
