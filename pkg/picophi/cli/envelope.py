"""
JSON Output Envelope

Every JSON document written by the command-line interface has the shape

    {"version": "1", "command": ..., "params": {...}, "result": ...}

or, on failure, "error": {"code": ..., "type": ..., "message": ...} in
place of "result". Key order is fixed and nothing time dependent is
included, so identical invocations give byte-identical output.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from picophi.values import OutputFormat


@dataclass(frozen=True)
class OutputEnvelope:
    """Command name, echoed parameters and either a result or an error."""

    command: str
    params: Dict[str, Any] = field(default_factory=dict)
    result: Any = None
    error: Optional[Dict[str, Any]] = None

    def __post_init__(self):
        if self.result is not None and self.error is not None:
            raise ValueError("An envelope carries a result or an error, not both")

    @property
    def ok(self) -> bool:
        return self.error is None

    @classmethod
    def failure(
        cls, command: str, params: Dict[str, Any], code: int, error: BaseException
    ) -> "OutputEnvelope":
        return cls(
            command=command,
            params=params,
            error={"code": code, "type": type(error).__name__, "message": str(error)},
        )

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "version": OutputFormat.VERSION,
            "command": self.command,
            "params": dict(self.params),
        }
        if self.ok:
            payload["result"] = self.result
        else:
            payload["error"] = dict(self.error)
        return payload

    def to_json(self) -> str:
        """Indented JSON with a trailing newline."""
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"
