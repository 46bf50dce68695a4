"""
Cyclic vector reduction of first-order systems to scalar operators.
"""
import logging
import random
from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Sequence, Tuple

from sigmadep.algebra.linalg import determinant, solve_left, solve_right
from sigmadep.algebra.polys import poly_from_coeffs
from sigmadep.algebra.ratfunc import RatFunc
from sigmadep.core.errors import CyclicVectorFailure
from sigmadep.ode.operators import LinDiffOp, LinDiffSystem, SolutionSpace, apply_derivation
from sigmadep.ode.solvers import rational_solutions

logger = logging.getLogger(__name__)

Vector = Tuple[RatFunc, ...]


@dataclass(frozen=True)
class CyclicVectorReduction:
    """
    w = rows[0] . Y turns delta(Y) = A*Y + b into L(w) = rhs, with
    delta^k(w) = rows[k] . Y + offsets[k] for k < n.
    """

    op: LinDiffOp
    rhs: RatFunc
    rows: Tuple[Vector, ...]
    offsets: Tuple[RatFunc, ...]
    system: LinDiffSystem

    @property
    def change_of_basis(self) -> Tuple[Vector, ...]:
        return self.rows

    def back_substitute(self, w: RatFunc, homogeneous: bool = False) -> Vector:
        """Y = C^-1 (delta^k(w) - offsets[k])_k; offsets are dropped for homogeneous solutions."""
        field = self.op.field
        values, current = [], w
        for k in range(self.system.dimension):
            if k:
                current = apply_derivation(current, self.system.derivation)
            values.append(current if homogeneous else current - self.offsets[k])
        return tuple(solve_right(self.rows, values, field))


def _seeds(n: int, field, attempts: int, seed: int) -> Iterator[Vector]:
    zero, one, x = RatFunc.zero(field), RatFunc.one(field), RatFunc.x(field)
    yield tuple(one if i == 0 else zero for i in range(n))
    if n > 1:
        yield tuple(x**i for i in range(n))
    rng = random.Random(seed)
    for _ in range(max(0, attempts - 2)):
        vector = []
        for _ in range(n):
            values = [rng.randint(-3, 3) for _ in range(2)]
            vector.append(RatFunc.from_poly(poly_from_coeffs(values, field), field))
        yield tuple(vector)


def _step(row: Vector, system: LinDiffSystem) -> Vector:
    """delta(c) + c*A for a row vector c."""
    n = system.dimension
    out = []
    for j in range(n):
        value = apply_derivation(row[j], system.derivation)
        for i in range(n):
            a = system.matrix[i][j]
            if not a.is_zero and not row[i].is_zero:
                value = value + row[i] * a
        out.append(value)
    return tuple(out)


def _dot(row: Sequence[RatFunc], vector: Sequence[RatFunc], field) -> RatFunc:
    total = RatFunc.zero(field)
    for a, b in zip(row, vector):
        if not a.is_zero and not b.is_zero:
            total = total + a * b
    return total


def cyclic_vector(system: LinDiffSystem, attempts: int = 8, seed: int = 20240917) -> CyclicVectorReduction:
    """
    Finds a cyclic vector c and the scalar equation satisfied by w = c . Y.

    Seeds are tried in order: e1, then (1, x, ..., x^(n-1)), then pseudo-random vectors
    of small polynomials drawn from ``random.Random(seed)``.

    Raises:
        CyclicVectorFailure: when no seed among ``attempts`` gives an invertible C.
    """
    field = system.field
    n = system.dimension
    b = system.rhs or tuple(RatFunc.zero(field) for _ in range(n))
    for attempt, start in enumerate(islice(_seeds(n, field, attempts, seed), attempts)):
        rows, offsets = [start], [RatFunc.zero(field)]
        for _ in range(n):
            offsets.append(apply_derivation(offsets[-1], system.derivation) + _dot(rows[-1], b, field))
            rows.append(_step(rows[-1], system))
        if determinant(rows[:n], field).is_zero:
            logger.warning(f"cyclic vector seed #{attempt} is not cyclic, retrying")
            continue
        beta = solve_left(rows[:n], rows[n], field)
        coefficients = [-v for v in beta] + [RatFunc.one(field)]
        rhs = offsets[n] - _dot(beta, offsets[:n], field)
        op = LinDiffOp(tuple(coefficients), field, system.derivation)
        logger.debug(f"cyclic vector {[str(e) for e in start]} gives {op}")
        return CyclicVectorReduction(
            op=op, rhs=rhs, rows=tuple(rows[:n]), offsets=tuple(offsets[:n]), system=system
        )
    raise CyclicVectorFailure(f"no cyclic vector among {attempts} seeds for a {n}x{n} system")


def system_rational_solutions(system: LinDiffSystem, attempts: int = 8, seed: int = 20240917) -> SolutionSpace:
    """All rational solutions of delta(Y) = A*Y + b, via a cyclic vector and back-substitution."""
    reduction = cyclic_vector(system, attempts=attempts, seed=seed)
    scalar = rational_solutions(reduction.op, None if system.is_homogeneous else reduction.rhs)
    basis = tuple(reduction.back_substitute(w, homogeneous=True) for w in scalar.basis)
    particular = None
    if scalar.particular is not None:
        particular = reduction.back_substitute(scalar.particular)
    logger.debug(f"system of dimension {system.dimension}: {len(basis)} rational solutions")
    return SolutionSpace(basis=basis, particular=particular)
