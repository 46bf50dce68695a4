"""
sigma^d-integrability of delta(Y) = A*Y: rational invertible B with
delta(B) + B*A = hbar_d * sigma^d(A) * B.
"""
import concurrent.futures
import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from sigmadep.algebra.linalg import determinant
from sigmadep.algebra.ratfunc import RatFunc
from sigmadep.calculus.context import DeltaSigmaContext
from sigmadep.core.core_interfaces import Certificate, Outcome
from sigmadep.core.errors import CertificateVerificationError, NonSquareError
from sigmadep.ode.cyclic import system_rational_solutions
from sigmadep.ode.operators import LinDiffSystem

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[RatFunc, ...], ...]


def _square(a: Sequence[Sequence[RatFunc]]) -> Matrix:
    rows = tuple(tuple(row) for row in a)
    if not rows or any(len(row) != len(rows) for row in rows):
        raise NonSquareError(f"expected a square matrix, got {len(rows)} rows")
    return rows


def sigma_matrix(a: Matrix, d, ctx: DeltaSigmaContext) -> Matrix:
    return tuple(tuple(ctx.sigma_pow(e, d) for e in row) for row in a)


def mat_mul(a: Matrix, b: Matrix, field_) -> Matrix:
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            total = RatFunc.zero(field_)
            for k in range(n):
                if not a[i][k].is_zero and not b[k][j].is_zero:
                    total = total + a[i][k] * b[k][j]
            row.append(total)
        out.append(tuple(row))
    return tuple(out)


def matrix_det(a: Matrix, field_) -> RatFunc:
    return determinant(a, field_)


@dataclass(frozen=True)
class IntegrabilityCertificate(Certificate):
    context: DeltaSigmaContext
    a: Matrix
    d: int
    b: Matrix

    kind = "integrability"

    def check(self) -> bool:
        ctx, field_ = self.context, self.context.field
        if not matrix_det(self.b, field_):
            return False
        hbar = ctx.hbar_d(self.d)
        lhs = mat_mul(self.b, self.a, field_)
        rhs = mat_mul(sigma_matrix(self.a, self.d, ctx), self.b, field_)
        for i, row in enumerate(self.b):
            for j, e in enumerate(row):
                if ctx.delta(e) + lhs[i][j] != rhs[i][j].scale(hbar):
                    return False
        return True

    def to_payload(self) -> Dict[str, Any]:
        return {"kind": self.kind, "d": self.d, "B": [[str(e) for e in row] for row in self.b]}


@dataclass(frozen=True)
class IntegrabilityVerdict:
    """
    Integrable(d, B), NoRationalWitness(d) or NoRationalWitnessUpTo(d_max).

    ``dimensions`` records the rational solution-space dimension for every tested d.
    """

    outcome: Outcome
    d: int
    certificate: Optional[IntegrabilityCertificate] = None
    dimensions: Tuple[Tuple[int, int], ...] = ()
    notes: Tuple[str, ...] = field(default_factory=tuple)

    def verify(self) -> "IntegrabilityVerdict":
        if self.certificate is not None and not self.certificate.check():
            raise CertificateVerificationError(f"integrability witness for d = {self.d} failed re-verification")
        return self

    def to_payload(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "verdict": self.outcome.value,
            "d": self.d,
            "solution_space_dims": {str(d): dim for d, dim in self.dimensions},
        }
        if self.notes:
            payload["notes"] = list(self.notes)
        return payload


def integrability_system(a: Sequence[Sequence[RatFunc]], d, ctx: DeltaSigmaContext) -> LinDiffSystem:
    """
    The first-order system in the n^2 entries of B (row-major) equivalent to
    delta(B) = hbar_d * sigma^d(A) * B - B * A.

    Raises:
        NonSquareError: if A is not square.
    """
    a = _square(a)
    n = len(a)
    field_ = ctx.field
    shifted = sigma_matrix(a, d, ctx)
    hbar = ctx.hbar_d(d) if isinstance(d, int) else ctx.field.domain.one
    zero = RatFunc.zero(field_)
    m = [[zero] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            row = i * n + j
            for k in range(n):
                if not shifted[i][k].is_zero:
                    m[row][k * n + j] = m[row][k * n + j] + shifted[i][k].scale(hbar)
                if not a[k][j].is_zero:
                    m[row][i * n + k] = m[row][i * n + k] - a[k][j]
    return LinDiffSystem(tuple(tuple(r) for r in m), field_, ctx.derivation)


def _grid(dimension: int, n: int) -> Iterator[Tuple[int, ...]]:
    """Unit vectors, the all-ones vector, then {0..n}^dimension in lexicographic order."""
    seen = set()
    units = [tuple(int(i == j) for j in range(dimension)) for i in range(dimension)]
    for point in units + [tuple([1] * dimension)]:
        if point not in seen:
            seen.add(point)
            yield point
    for point in itertools.product(range(n + 1), repeat=dimension):
        if any(point) and point not in seen:
            yield point


def find_invertible(basis: Sequence[Matrix], n: int, field_) -> Optional[Matrix]:
    """
    An invertible member of span(basis), or None if every member is singular.

    det(sum t_i B_i) has degree at most n in each t_i, so if it is not identically zero it
    does not vanish on the whole grid {0..n}^dim.
    """
    if not basis:
        return None
    zero = RatFunc.zero(field_)
    tried = 0
    for point in _grid(len(basis), n):
        tried += 1
        combo = tuple(
            tuple(sum((b[i][j] * t for t, b in zip(point, basis) if t), zero) for j in range(n))
            for i in range(n)
        )
        if not determinant(combo, field_).is_zero:
            logger.debug(f"invertible combination {point} after {tried} grid points")
            return combo
    logger.debug(f"all {tried} grid points give singular matrices")
    return None


def _as_matrices(space, n: int) -> List[Matrix]:
    return [tuple(tuple(vector[i * n : (i + 1) * n]) for i in range(n)) for vector in space.basis]


def is_sigma_d_integrable(
    a: Sequence[Sequence[RatFunc]], d: int, ctx: DeltaSigmaContext, attempts: int = 8, seed: int = 20240917
) -> IntegrabilityVerdict:
    """
    Searches the rational solutions of the integrability system for an invertible B.
    """
    a = _square(a)
    n = len(a)
    system = integrability_system(a, d, ctx)
    space = system_rational_solutions(system, attempts=attempts, seed=seed)
    dims = ((d, space.dimension),)
    b = find_invertible(_as_matrices(space, n), n, ctx.field)
    logger.debug(f"sigma^{d}-integrability: solution space of dimension {space.dimension}")
    if b is None:
        return IntegrabilityVerdict(Outcome.NO_RATIONAL_WITNESS, d=d, dimensions=dims)
    certificate = IntegrabilityCertificate(context=ctx, a=a, d=d, b=b)
    return IntegrabilityVerdict(Outcome.INTEGRABLE, d=d, certificate=certificate, dimensions=dims)


def run_sweep(fn: Callable, params: Iterable, workers: int = 1) -> list:
    """Maps fn over params, on a process pool when workers > 1; results keep the order of params."""
    params = list(params)
    if workers <= 1 or len(params) <= 1:
        return [fn(p) for p in params]
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, params))


@dataclass(frozen=True)
class _SingleD:
    a: Matrix
    ctx: DeltaSigmaContext
    attempts: int
    seed: int

    def __call__(self, d: int) -> IntegrabilityVerdict:
        return is_sigma_d_integrable(self.a, d, self.ctx, attempts=self.attempts, seed=self.seed)


def integrability_sweep(
    a: Sequence[Sequence[RatFunc]],
    d_max: int,
    ctx: DeltaSigmaContext,
    workers: int = 1,
    attempts: int = 8,
    seed: int = 20240917,
) -> Tuple[IntegrabilityVerdict, List[IntegrabilityVerdict]]:
    """
    Tests d = 1..d_max; returns the summary verdict (the first Integrable one, or
    NoRationalWitnessUpTo(d_max)) and the per-d verdicts.
    """
    a = _square(a)
    verdicts = run_sweep(_SingleD(a, ctx, attempts, seed), range(1, d_max + 1), workers)
    dims = tuple(v.dimensions[0] for v in verdicts)
    for verdict in verdicts:
        if verdict.outcome is Outcome.INTEGRABLE:
            summary = IntegrabilityVerdict(
                Outcome.INTEGRABLE, d=verdict.d, certificate=verdict.certificate, dimensions=dims
            )
            return summary, verdicts
    return IntegrabilityVerdict(Outcome.NO_RATIONAL_WITNESS_UP_TO, d=d_max, dimensions=dims), verdicts
