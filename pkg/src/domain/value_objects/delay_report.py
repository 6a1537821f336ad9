"""DelayReport value object - sojourn samples and service statistics of one replication."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .system_config import ALL, BAD, GOOD


@dataclass(frozen=True, slots=True)
class DelaySample:
    """Sojourn of one request, with the service that completed it."""

    service_index: int
    user: int
    file: int
    user_class: str
    sojourn: float


@dataclass(frozen=True, slots=True)
class DelayReport:
    """Measured-window statistics of a single simulation run.

    Attributes:
        samples: One entry per request completed by a measured service
        service_times: Total time (redraw idling included) of every measured service
        redraw_counts: Sub-threshold redraws before each measured service
        n_services: Number of measured services
        arrivals: Requests generated during the whole run
        seed: Seed of the replication, when known
    """

    samples: tuple[DelaySample, ...]
    service_times: tuple[float, ...] = ()
    redraw_counts: tuple[int, ...] = ()
    n_services: int = 0
    arrivals: int = 0
    seed: int | None = None
    classes: tuple[str, ...] = field(default=(ALL,))

    def __post_init__(self) -> None:
        if any(s.sojourn <= 0 for s in self.samples):
            raise ValueError("Sojourn samples must be positive")

    @property
    def sojourns(self) -> np.ndarray:
        return np.fromiter((s.sojourn for s in self.samples), dtype=float, count=len(self.samples))

    @property
    def mean_sojourn(self) -> float:
        """Sample average of sojourns; NaN when nothing completed."""
        return float(self.sojourns.mean()) if self.samples else math.nan

    def class_samples(self, user_class: str) -> tuple[DelaySample, ...]:
        if user_class == ALL:
            return self.samples
        return tuple(s for s in self.samples if s.user_class == user_class)

    def class_mean(self, user_class: str) -> float:
        samples = self.class_samples(user_class)
        if not samples:
            return math.nan
        return float(np.mean([s.sojourn for s in samples]))

    @property
    def class_means(self) -> dict[str, float]:
        """Mean sojourn per reported class (``all`` always included)."""
        means = {ALL: self.mean_sojourn}
        for user_class in (GOOD, BAD):
            if user_class in self.classes:
                means[user_class] = self.class_mean(user_class)
        return means

    @property
    def mean_service_time(self) -> float:
        return float(np.mean(self.service_times)) if self.service_times else math.nan

    @property
    def max_service_time(self) -> float:
        return float(np.max(self.service_times)) if self.service_times else math.nan

    @property
    def total_redraws(self) -> int:
        return int(sum(self.redraw_counts))
