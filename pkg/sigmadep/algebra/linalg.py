"""
Exact linear algebra over the coefficient domain K, on top of sympy's DomainMatrix,
and over K(x) by fraction-free elimination on K[x].

Matrices over K(x) are given as rows of RatFunc. Each row is cleared to a common
denominator and eliminated with Bareiss' method, so no rational function arithmetic
happens until back substitution.
"""
import logging
from typing import Dict, List, Sequence, Tuple

from sympy import Poly
from sympy.polys.matrices import DomainMatrix

from sigmadep.algebra.fields import BaseField
from sigmadep.algebra.polys import coeffs_low_first, constant_poly, lcm_all
from sigmadep.algebra.ratfunc import RatFunc

logger = logging.getLogger(__name__)


def nullspace(rows: Sequence[Sequence], ncols: int, domain) -> list[list]:
    """
    Basis of {v : rows . v = 0} over ``domain``.

    Every basis vector is scaled so that its first nonzero entry is 1; the basis
    is ordered by the position of that entry.
    """
    if ncols == 0:
        return []
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        basis = [[domain.one if i == j else domain.zero for j in range(ncols)] for i in range(ncols)]
        return basis
    matrix = DomainMatrix([[domain.convert(v) for v in row] for row in rows], (len(rows), ncols), domain)
    kernel = matrix.nullspace().to_list()
    basis = []
    for vector in kernel:
        pivot = next(v for v in vector if v)
        basis.append([domain.quo(v, pivot) for v in vector])
    basis.sort(key=lambda v: next(i for i, e in enumerate(v) if e))
    logger.debug(f"nullspace: {len(rows)}x{ncols} system over {domain}, dimension {len(basis)}")
    return basis


def linear_relations(terms: Sequence, field) -> list[list]:
    """
    Basis of constant vectors c with sum_i c_i * terms[i] == 0.

    ``terms`` are RatFunc values over ``field``; the constants live in its coefficient
    domain. The identity is cleared to a common denominator and compared coefficient-wise.
    """
    if not terms:
        return []
    common = lcm_all((t.den for t in terms), field)
    numerators = [t.num * common.exquo(t.den) for t in terms]
    height = max([0] + [n.degree() + 1 for n in numerators if not n.is_zero])
    columns = [coeffs_low_first(n, height) for n in numerators]
    rows = [[column[k] for column in columns] for k in range(height)]
    return nullspace(rows, len(terms), field.domain)


# --- matrices over K(x) ---


def clear_denominators(rows: Sequence[Sequence[RatFunc]], field: BaseField) -> List[List[Poly]]:
    """Each row multiplied by the lcm of its denominators, as polynomials in x."""
    cleared = []
    for row in rows:
        common = lcm_all((v.den for v in row), field)
        cleared.append([v.num * common.exquo(v.den) for v in row])
    return cleared


def fraction_free_echelon(matrix: Sequence[Sequence[Poly]], field: BaseField) -> Tuple[List[List[Poly]], List[int], int]:
    """
    Bareiss elimination of a polynomial matrix.

    Returns the echelon rows, the pivot column of each nonzero row, and the sign of the
    row permutation. Every division by the previous pivot is exact, and for a square
    matrix of full rank the last pivot is the determinant up to that sign.
    """
    m = [list(row) for row in matrix]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    previous = constant_poly(1, field)
    zero = constant_poly(0, field)
    pivots: List[int] = []
    sign, r = 1, 0
    for c in range(ncols):
        if r == nrows:
            break
        swap = next((i for i in range(r, nrows) if not m[i][c].is_zero), None)
        if swap is None:
            continue
        if swap != r:
            m[r], m[swap] = m[swap], m[r]
            sign = -sign
        pivot = m[r][c]
        for i in range(r + 1, nrows):
            factor = m[i][c]
            for j in range(c + 1, ncols):
                m[i][j] = (m[i][j] * pivot - factor * m[r][j]).exquo(previous)
            m[i][c] = zero
        previous = pivot
        pivots.append(c)
        r += 1
    return m, pivots, sign


def _back_substitute(
    echelon: List[List[Poly]], pivots: List[int], fixed: Dict[int, RatFunc], field: BaseField
) -> List[RatFunc]:
    """Solves the echelon rows for the pivot columns, the other columns being ``fixed``."""
    ncols = len(echelon[0])
    zero = RatFunc.zero(field)
    values = [fixed.get(j, zero) for j in range(ncols)]
    for r in reversed(range(len(pivots))):
        c = pivots[r]
        total = zero
        for j in range(c + 1, ncols):
            if not echelon[r][j].is_zero and not values[j].is_zero:
                total = total + RatFunc.from_poly(echelon[r][j], field) * values[j]
        values[c] = -total / RatFunc.from_poly(echelon[r][c], field)
    return values


def determinant(rows: Sequence[Sequence[RatFunc]], field: BaseField) -> RatFunc:
    n = len(rows)
    if n == 0:
        return RatFunc.one(field)
    cleared = clear_denominators(rows, field)
    echelon, pivots, sign = fraction_free_echelon(cleared, field)
    if len(pivots) < n:
        return RatFunc.zero(field)
    denominator = RatFunc.one(field)
    for row in rows:
        denominator = denominator * RatFunc.from_poly(lcm_all((v.den for v in row), field), field)
    return RatFunc.from_poly(echelon[n - 1][n - 1], field) * sign / denominator


def ratfunc_nullspace(rows: Sequence[Sequence[RatFunc]], ncols: int, field: BaseField) -> List[List[RatFunc]]:
    """
    Basis of {v : rows . v = 0} over K(x), one vector per free column.

    Each basis vector has a 1 at its free column and 0 at the other free columns.
    """
    if ncols == 0:
        return []
    one = RatFunc.one(field)
    rows = [list(r) for r in rows if any(not v.is_zero for v in r)]
    if not rows:
        return [[one if i == j else RatFunc.zero(field) for j in range(ncols)] for i in range(ncols)]
    echelon, pivots, _ = fraction_free_echelon(clear_denominators(rows, field), field)
    free = [j for j in range(ncols) if j not in pivots]
    basis = [_back_substitute(echelon, pivots, {j: one}, field) for j in free]
    logger.debug(f"nullspace: {len(rows)}x{ncols} system over {field.describe()}(x), dimension {len(basis)}")
    return basis


def solve_right(rows: Sequence[Sequence[RatFunc]], target: Sequence[RatFunc], field: BaseField) -> List[RatFunc]:
    """
    Solves M . y = target for a square invertible M given by its rows.

    Raises:
        ValueError: when M is singular.
    """
    n = len(rows)
    augmented = [list(rows[i]) + [target[i]] for i in range(n)]
    echelon, pivots, _ = fraction_free_echelon(clear_denominators(augmented, field), field)
    if pivots != list(range(n)):
        raise ValueError(f"singular {n}x{n} system")
    return _back_substitute(echelon, pivots, {n: -RatFunc.one(field)}, field)[:n]


def solve_left(rows: Sequence[Sequence[RatFunc]], target: Sequence[RatFunc], field: BaseField) -> List[RatFunc]:
    """
    Solves beta . M = target for a square invertible M given by its rows.

    Equivalently M^T beta^T = target^T.
    """
    n = len(rows)
    transposed = [[rows[i][j] for i in range(n)] for j in range(n)]
    return solve_right(transposed, target, field)
