from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field

CheckStatus = Literal["pass", "fail", "n/a", "counterexample"]

CheckName = Literal[
    "interval_theorem",
    "multiplicity_formulas",
    "mult_bounds",
    "threshold_simple",
    "conjecture",
    "interlacing",
    "rank_law",
    "rank_crosscheck",
    "class_structure",
    "class_removal",
    "threshold_characterization",
    "sturm_total",
]

ALL_CHECKS: tuple[CheckName, ...] = (
    "interval_theorem",
    "multiplicity_formulas",
    "mult_bounds",
    "threshold_simple",
    "conjecture",
    "interlacing",
    "rank_law",
    "rank_crosscheck",
    "class_structure",
    "class_removal",
    "threshold_characterization",
    "sturm_total",
)

CampaignMode = Literal["exhaustive", "random", "all-graphs"]

STATUSES: tuple[CheckStatus, ...] = ("pass", "fail", "n/a", "counterexample")


class CheckRecord(BaseModel):
    status: CheckStatus
    expected: Any = None
    actual: Any = None
    witness: Any = None


class VerificationReport(BaseModel):
    graph6: str
    n: int
    is_cograph: bool
    checks: dict[str, CheckRecord]
    analysis: dict[str, Any] | None = None
    timing: dict[str, float] = Field(default_factory=dict)
    meta: dict[str, Any] = Field(default_factory=dict)

    def failed(self) -> list[str]:
        return [name for name, rec in self.checks.items() if rec.status == "fail"]

    def counterexample(self) -> bool:
        return any(rec.status == "counterexample" for rec in self.checks.values())


class FailureEntry(BaseModel):
    graph6: str
    check: str
    witness: Any = None


class CampaignSummary(BaseModel):
    mode: CampaignMode
    n_min: int
    n_max: int
    seed: int | None = None
    samples: int | None = None
    processed: int = 0
    cographs: int = 0
    graph_counts: dict[str, int] = Field(default_factory=dict)
    tallies: dict[str, dict[str, int]] = Field(default_factory=dict)
    failures: list[FailureEntry] = Field(default_factory=list)
    counterexamples: list[str] = Field(default_factory=list)
    meta: dict[str, Any] = Field(default_factory=dict)
