"""SimulationRequest DTO."""

from __future__ import annotations

from dataclasses import dataclass

from src.domain.value_objects.system_config import SystemConfig


@dataclass(frozen=True, slots=True)
class SimulationRequest:
    """Parameters of a single simulation run.

    ``n_services`` counts every completed service, warmup included; statistics
    come from the last ``n_services - warmup_services`` of them (plus the
    drained services when ``drain`` is set).
    """

    config: SystemConfig
    n_services: int
    warmup_services: int | None = None
    seed: int = 0
    drain: bool = False

    def __post_init__(self) -> None:
        if self.n_services < 1:
            raise ValueError(f"n_services must be at least 1, got {self.n_services}")
        if self.warmup_services is not None and not 0 <= self.warmup_services < self.n_services:
            raise ValueError(
                f"warmup_services must lie in [0, {self.n_services}), got {self.warmup_services}"
            )

    @property
    def warmup(self) -> int:
        """Discarded services; defaults to the first 10%."""
        if self.warmup_services is None:
            return self.n_services // 10
        return self.warmup_services
