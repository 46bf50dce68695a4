from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from sigmadep.core.errors import CertificateVerificationError


class Outcome(Enum):
    DEPENDENT = "Dependent"
    INDEPENDENT = "Independent"
    UNKNOWN_UP_TO_BOUND = "UnknownUpToBound"
    INTEGRABLE = "Integrable"
    NO_RATIONAL_WITNESS = "NoRationalWitness"
    NO_RATIONAL_WITNESS_UP_TO = "NoRationalWitnessUpTo"

    @property
    def is_conclusive(self) -> bool:
        return self is not Outcome.UNKNOWN_UP_TO_BOUND


class GroupTag(Enum):
    TRIVIAL = "Trivial"
    GA_SIGMA = "GaSigma"
    GA = "Ga"


class Certificate(ABC):
    """Witness data for a positive answer that can be re-checked by exact expansion."""

    kind: str = "certificate"

    @abstractmethod
    def check(self) -> bool:
        pass

    @abstractmethod
    def to_payload(self) -> Dict[str, Any]:
        pass


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    certificate: Optional[Certificate] = None
    bound: Optional[int] = None
    group: Optional[GroupTag] = None
    notes: Tuple[str, ...] = field(default_factory=tuple)

    def verify(self) -> "Verdict":
        """Re-checks the certificate, if any, and returns self."""
        if self.certificate is not None and not self.certificate.check():
            raise CertificateVerificationError(
                f"{self.certificate.kind} certificate of a {self.outcome.value} verdict failed re-verification"
            )
        return self

    def to_payload(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"verdict": self.outcome.value}
        if self.bound is not None:
            payload["bound"] = self.bound
        if self.group is not None:
            payload["group"] = self.group.value
        if self.notes:
            payload["notes"] = list(self.notes)
        return payload
