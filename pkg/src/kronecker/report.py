"""Machine-readable outcome of a verification suite."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Outcome of a verification suite.

    ``failures`` holds one dict per failed case with the exact inputs and the
    expected/actual values; ``info`` carries suite-specific summary numbers.
    """

    suite: str
    cases: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    wall_time: float = 0.0
    info: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> dict[str, Any] | None:
        return self.failures[0] if self.failures else None

    def check(self, condition: bool, **details: Any) -> bool:
        self.cases += 1
        if not condition:
            self.failures.append(details)
        return condition

    def merge(self, other: "Report") -> None:
        self.cases += other.cases
        self.failures.extend(other.failures)

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": [jsonable(f) for f in self.failures],
            "ok": self.ok,
            "info": jsonable(self.info),
        }


def jsonable(obj: Any) -> Any:
    # big integers become decimal strings so JSON consumers keep exactness
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= 2**53 else obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return str(obj) if not isinstance(obj, (float, str)) else obj
