"""
Periodicity of sigma on a sigma-closed subgroup of mu_p.

A relation g^a_0 * sigma(g)^a_1 * ... * sigma^l(g)^a_l = 1 with a_l invertible mod p
expresses sigma^l(g) through g, ..., sigma^(l-1)(g); iterating sigma on exponent
vectors in F_p^l is eventually periodic.
"""
import logging
from dataclasses import dataclass
from typing import Tuple

from sigmadep.core.errors import InvalidLeadingExponentError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MupRelation:
    p: int
    exponents: Tuple[int, ...]

    def __post_init__(self):
        if self.p < 2 or any(self.p % k == 0 for k in range(2, int(self.p**0.5) + 1)):
            raise ValueError(f"p = {self.p} is not a prime")
        if not self.exponents:
            raise ValueError("a mu_p relation needs at least one exponent")
        object.__setattr__(self, "exponents", tuple(int(a) % self.p for a in self.exponents))
        if self.exponents[-1] == 0:
            raise InvalidLeadingExponentError(f"leading exponent vanishes modulo {self.p}")

    @property
    def length(self) -> int:
        """l, the largest sigma power in the relation."""
        return len(self.exponents) - 1

    def reduced_coefficients(self) -> Tuple[int, ...]:
        """beta_i = -a_i / a_l mod p, so that sigma^l(g) = prod sigma^i(g)^beta_i."""
        inv = pow(self.exponents[-1], -1, self.p)
        return tuple((-a * inv) % self.p for a in self.exponents[:-1])


def mup_period(relation: MupRelation) -> Tuple[int, int]:
    """
    The least (m, d) with d >= 1 and sigma^(m+d)(g) = sigma^m(g) for every g in the group.

    Returns:
        (pre-period m, period d)
    """
    l, p = relation.length, relation.p
    if l == 0:
        # g^a_0 = 1 with a_0 a unit forces g = 1
        return 0, 1
    beta = relation.reduced_coefficients()
    state = tuple(1 if i == 0 else 0 for i in range(l))
    seen = {state: 0}
    k = 0
    while True:
        top = state[-1]
        state = tuple(
            (top * beta[0]) % p if i == 0 else (state[i - 1] + top * beta[i]) % p for i in range(l)
        )
        k += 1
        if state in seen:
            m = seen[state]
            logger.debug(f"mu_{p} relation {relation.exponents}: pre-period {m}, period {k - m}")
            return m, k - m
        seen[state] = k
