# mds_checker/reports.py
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from django.conf import settings
from django.db import models

from apps.exact_math.services import format_rational


class Verdict(models.TextChoices):
    NOT_MDS = "NotMDS"
    INCONCLUSIVE = "Inconclusive"


def jsonable(value: Any) -> Any:
    """Fractions become "p/q" strings (integral ones stay ints), containers recurse."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else format_rational(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, "to_dict"):
        return value.to_dict()
    return value


@dataclass
class ConditionResult:
    id: str
    holds: bool
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"id": self.id, "holds": self.holds, "witness": jsonable(self.witness)}


@dataclass
class CheckReport:
    """
    Outcome of one criterion. `verdict` is NotMDS exactly when every listed
    condition holds; the criteria never certify the opposite.
    """
    kind: str
    branch: str
    conditions: list[ConditionResult] = field(default_factory=list)
    normalization: dict = field(default_factory=dict)
    summary: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    sub_reports: list["CheckReport"] = field(default_factory=list)
    verdict_override: Optional[Verdict] = None

    @property
    def verdict(self) -> Verdict:
        if self.verdict_override is not None:
            return self.verdict_override
        if self.conditions and all(c.holds for c in self.conditions):
            return Verdict.NOT_MDS
        return Verdict.INCONCLUSIVE

    @property
    def is_not_mds(self) -> bool:
        return self.verdict == Verdict.NOT_MDS

    def add(self, condition_id: str, holds: bool, **witness) -> ConditionResult:
        result = ConditionResult(condition_id, bool(holds), witness)
        self.conditions.append(result)
        return result

    def condition(self, condition_id: str) -> ConditionResult:
        for c in self.conditions:
            if c.id == condition_id:
                return c
        raise KeyError(condition_id)

    def failing(self) -> list[str]:
        return [c.id for c in self.conditions if not c.holds]

    def to_dict(self) -> dict:
        payload = {
            "schema": getattr(settings, "REPORT_SCHEMA_VERSION", "mds-oracle/1"),
            "kind": self.kind,
            "verdict": self.verdict.value,
            "branch": self.branch,
            "conditions": [c.to_dict() for c in self.conditions],
            "normalization": jsonable(self.normalization),
            "summary": jsonable(self.summary),
            "notes": list(self.notes),
        }
        if self.sub_reports:
            payload["sub_reports"] = [r.to_dict() for r in self.sub_reports]
        return payload
