"""
Result records for verification runs.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
# an expectation that did not hold but is not a defect of the engine; needs human review
STATUS_FLAGGED = "flagged"
# recorded observation, never a failure
STATUS_INFO = "info"
STATUSES = (STATUS_PASS, STATUS_FAIL, STATUS_FLAGGED, STATUS_INFO)


@dataclass
class CheckOutcome:
    """What a check function returns; timing is added by the runner."""

    status: str
    cases: int
    witness: Optional[str] = None
    detail: Optional[str] = None

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"unknown check status {self.status!r}; expected one of {STATUSES}")


@dataclass
class CheckResult:
    """Result of a single named check"""

    suite: str
    name: str
    status: str
    cases: int
    wall_time: float
    witness: Optional[str] = None  # first counterexample, if any
    detail: Optional[str] = None

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class VerifyReport:
    """Summary of a verification run"""

    suite: str
    jobs: int
    results: List[CheckResult] = field(default_factory=list)
    total_time: float = 0.0

    @property
    def counts(self) -> Dict[str, int]:
        counts = {status: 0 for status in STATUSES}
        for result in self.results:
            counts[result.status] += 1
        return counts

    @property
    def ok(self) -> bool:
        return all(result.status in (STATUS_PASS, STATUS_INFO) for result in self.results)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "jobs": self.jobs,
            "ok": self.ok,
            "counts": self.counts,
            "total_time": round(self.total_time, 3),
            "results": [result.to_dict() for result in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def render_text(self) -> str:
        lines = []
        for result in self.results:
            line = f"[{result.status.upper():7}] {result.suite}/{result.name}: {result.cases} cases in {result.wall_time:.2f}s"
            if result.detail:
                line += f" ({result.detail})"
            lines.append(line)
            if result.witness:
                lines.append(f"          witness: {result.witness}")
        counts = self.counts
        lines.append(
            f"{len(self.results)} checks: {counts[STATUS_PASS]} passed, {counts[STATUS_FAIL]} failed, "
            f"{counts[STATUS_FLAGGED]} flagged, {counts[STATUS_INFO]} informational "
            f"in {self.total_time:.2f}s"
        )
        return "\n".join(lines) + "\n"


__all__ = [
    "STATUSES",
    "STATUS_FAIL",
    "STATUS_FLAGGED",
    "STATUS_INFO",
    "STATUS_PASS",
    "CheckOutcome",
    "CheckResult",
    "VerifyReport",
]
