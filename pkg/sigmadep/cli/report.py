"""
The JSON report every command emits, and its text rendering.
"""
import json
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field

from sigmadep.core.core_interfaces import Outcome

REQUIRED_KEYS = ("command", "context", "input", "verdict", "diagnostics")


class CommandReport(BaseModel):
    """One command run: what was asked, what was decided, and the evidence."""

    model_config = ConfigDict(extra="forbid")

    command: str
    context: str
    input: Dict[str, Any]
    verdict: str
    certificate: Optional[Dict[str, Any]] = None
    result: Dict[str, Any] = Field(default_factory=dict)
    diagnostics: Dict[str, Any] = Field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return 2 if self.verdict == Outcome.UNKNOWN_UP_TO_BOUND.value else 0

    def to_json(self) -> str:
        return json.dumps(self.model_dump(exclude_none=True), indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = [f"{self.command} [{self.context}]: {self.verdict}"]
        for key, value in self.result.items():
            lines.append(f"  {key}: {_text(value)}")
        if self.certificate:
            lines.append("  certificate:")
            for key, value in self.certificate.items():
                lines.append(f"    {key}: {_text(value)}")
        for key, value in self.diagnostics.items():
            lines.append(f"  ({key}: {_text(value)})")
        return "\n".join(lines)


def _text(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value)
    return str(value)


def error_payload(code: str, message: str) -> str:
    return json.dumps({"error": {"code": code, "message": message}}, indent=2)
