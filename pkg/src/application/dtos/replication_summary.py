"""ReplicationSummary DTO."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from src.domain.value_objects.delay_report import DelayReport
from src.domain.value_objects.system_config import SystemConfig


@dataclass(frozen=True, slots=True)
class ClassSummary:
    """Pooled mean sojourn of one user class with a normal-approximation 95% CI."""

    user_class: str
    mean: float
    ci_lo: float
    ci_hi: float
    replications: int

    @property
    def ci_width(self) -> float:
        return self.ci_hi - self.ci_lo


@dataclass(frozen=True, slots=True)
class ReplicationSummary:
    """Independent replications of one configuration and their pooled statistics."""

    config: SystemConfig
    reports: tuple[DelayReport, ...]
    classes: dict[str, ClassSummary] = field(default_factory=dict)
    mean_service_time: float = math.nan
    services: int = 0

    @property
    def seeds(self) -> tuple[int | None, ...]:
        return tuple(r.seed for r in self.reports)

    def __getitem__(self, user_class: str) -> ClassSummary:
        return self.classes[user_class]
