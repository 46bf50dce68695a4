"""
Symmetric powers of second-order operators.
"""
import logging

from sigmadep.algebra.linalg import ratfunc_nullspace
from sigmadep.algebra.ratfunc import RatFunc
from sigmadep.core.errors import UnsupportedOrderError
from sigmadep.ode.operators import LinDiffOp, apply_derivation

logger = logging.getLogger(__name__)


def symmetric_power(op: LinDiffOp, m: int) -> LinDiffOp:
    """
    The monic operator of minimal order annihilating every product y1^(m-k) * y2^k of solutions of op.

    With op = delta^2 + a1*delta + a0, the products m_k = y^(m-k) * delta(y)^k satisfy
    delta(m_k) = (m-k)*m_(k+1) - k*a1*m_k - k*a0*m_(k-1); the derivatives of y^m are
    expanded in the m_k until the first linear dependence.

    Raises:
        UnsupportedOrderError: when op is not of order 2.
    """
    if op.order != 2:
        raise UnsupportedOrderError(f"symmetric powers are implemented for order 2, got order {op.order}")
    if m < 1:
        raise ValueError(f"symmetric power exponent must be positive, got {m}")
    monic = op.monic()
    if m == 1:
        return monic
    field = op.field
    a0, a1 = monic.coefficient(0), monic.coefficient(1)
    zero = RatFunc.zero(field)

    def step(v: list) -> list:
        out = []
        for k in range(m + 1):
            value = apply_derivation(v[k], op.derivation)
            if k and not v[k - 1].is_zero:
                value = value + v[k - 1] * (m - k + 1)
            if not v[k].is_zero:
                value = value - a1 * v[k] * k
            if k < m and not v[k + 1].is_zero:
                value = value - a0 * v[k + 1] * (k + 1)
            out.append(value)
        return out

    vectors = [[RatFunc.one(field)] + [zero] * m]
    while True:
        vectors.append(step(vectors[-1]))
        columns = len(vectors)
        rows = [[vectors[j][k] for j in range(columns)] for k in range(m + 1)]
        kernel = ratfunc_nullspace(rows, columns, field)
        if kernel:
            relation = kernel[0]
            top = relation[-1]
            coefficients = tuple(v / top for v in relation)
            result = LinDiffOp(coefficients, field, op.derivation)
            logger.debug(f"symmetric power {m} of {op}: {result}")
            return result
