# pylint: disable=no-self-argument
import json
from typing import Any, Dict, List

import yaml

from curvefact.models.utils import CurvefactModel, StrictField, plain

__all__ = ("Report",)


class Report(CurvefactModel):
    """The output of one command line invocation."""

    command: str = StrictField(..., description="The command that was run.")
    inputs: Dict[str, Any] = StrictField({}, description="The inputs, echoed in canonical form.")
    caps: Dict[str, Any] = StrictField(
        {}, description="Truncation orders and degree caps in effect."
    )
    results: Dict[str, Any] = StrictField({}, description="The structured results.")
    checks: Dict[str, bool] = StrictField({}, description="Statuses of exact checks.")
    warnings: List[str] = StrictField([], description="Warnings emitted while computing.")

    @property
    def failed(self) -> bool:
        return not all(self.checks.values())

    def as_dict(self) -> Dict[str, Any]:
        return plain(
            {
                "command": self.command,
                "inputs": self.inputs,
                "caps": self.caps,
                "results": self.results,
                "checks": self.checks,
                "warnings": self.warnings,
            }
        )

    def to_yaml(self) -> str:
        return yaml.safe_dump(self.as_dict(), sort_keys=True, default_flow_style=False)

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)
