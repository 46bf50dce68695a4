"""
The integrability dichotomy for second-order operators with usual Galois group Sl2.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from sigmadep.calculus.context import DeltaSigmaContext
from sigmadep.core.core_interfaces import Outcome
from sigmadep.core.errors import UnsupportedOrderError
from sigmadep.integrability.engine import IntegrabilityVerdict, integrability_sweep
from sigmadep.ode.operators import LinDiffOp, companion
from sigmadep.ode.solvers import rational_solutions
from sigmadep.ode.symmetric import symmetric_power

logger = logging.getLogger(__name__)

RATIONAL_ONLY_NOTE = (
    "only rational witnesses B over k(x) are searched; witnesses algebraic over k(x) are not, "
    "so integrability over a proper algebraic extension is not excluded"
)


@dataclass(frozen=True)
class DichotomyReport:
    operator: str
    d_max: int
    sl2_asserted: bool
    sl2_refused: bool
    companion_verdicts: Tuple[IntegrabilityVerdict, ...]
    symmetric_power: Optional[str]
    symmetric_verdicts: Tuple[IntegrabilityVerdict, ...]
    conclusion: str
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def all_without_witness(self) -> bool:
        verdicts = self.companion_verdicts + self.symmetric_verdicts
        return all(v.outcome is Outcome.NO_RATIONAL_WITNESS for v in verdicts)

    def to_payload(self) -> Dict[str, Any]:
        return {
            "operator": self.operator,
            "d_max": self.d_max,
            "sl2_asserted": self.sl2_asserted,
            "sl2_refused": self.sl2_refused,
            "companion": [v.to_payload() for v in self.companion_verdicts],
            "symmetric_power": self.symmetric_power,
            "symmetric": [v.to_payload() for v in self.symmetric_verdicts],
            "conclusion": self.conclusion,
            "notes": list(self.notes),
        }


def sln_dichotomy_report(
    op: LinDiffOp,
    d_max: int,
    ctx: DeltaSigmaContext,
    assert_sl2: bool = True,
    sanity_check: bool = False,
    symmetric_d_max: Optional[int] = None,
    workers: int = 1,
    attempts: int = 8,
    seed: int = 20240917,
) -> DichotomyReport:
    """
    Runs the sigma^d-integrability test for d = 1..d_max on the companion system of op and of
    its symmetric square, and phrases the conclusion.

    The Sl2 hypothesis on the usual Galois group is a user assertion. With ``sanity_check``
    the operator's rational solutions are computed first; a nonzero solution refuses the
    assertion.

    Raises:
        UnsupportedOrderError: when op is not of order 2.
    """
    if op.order != 2:
        raise UnsupportedOrderError(f"the dichotomy report handles order 2 operators, got order {op.order}")
    notes: List[str] = [RATIONAL_ONLY_NOTE]
    refused = False
    if sanity_check:
        space = rational_solutions(op)
        if space.dimension:
            refused = True
            notes.append(
                f"the operator has {space.dimension} independent rational solution(s), so its usual "
                "Galois group is not Sl2; the Sl2 assertion is refused"
            )

    _, companion_verdicts = integrability_sweep(
        companion(op).matrix, d_max, ctx, workers=workers, attempts=attempts, seed=seed
    )
    square = symmetric_power(op, 2)
    sym_max = d_max if symmetric_d_max is None else min(d_max, symmetric_d_max)
    _, symmetric_verdicts = integrability_sweep(
        companion(square).matrix, sym_max, ctx, workers=workers, attempts=attempts, seed=seed
    )

    verdicts = list(companion_verdicts) + list(symmetric_verdicts)
    integrable = [v.d for v in verdicts if v.outcome is Outcome.INTEGRABLE]
    if integrable:
        conclusion = f"rational sigma^d-integrability found for d = {min(integrable)}; the solutions satisfy sigma-relations"
    elif refused or not assert_sl2:
        conclusion = (
            f"no rational sigma^d-integrability for d <= {d_max}; without the Sl2 hypothesis no "
            "transformal independence is concluded"
        )
    else:
        conclusion = (
            f"no rational sigma^d-integrability for d <= {d_max}; under the hypotheses that the usual "
            "Galois group is almost simple and k(x) is relatively algebraically closed in the solution "
            "field, the solutions are transformally independent up to this bound"
        )
    logger.info(f"dichotomy for {op}: {conclusion}")
    return DichotomyReport(
        operator=str(op),
        d_max=d_max,
        sl2_asserted=assert_sl2,
        sl2_refused=refused,
        companion_verdicts=tuple(companion_verdicts),
        symmetric_power=str(square),
        symmetric_verdicts=tuple(symmetric_verdicts),
        conclusion=conclusion,
        notes=tuple(notes),
    )
