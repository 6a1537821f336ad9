"""ServiceOutcome DTO."""

from __future__ import annotations

from dataclasses import dataclass

from src.domain.value_objects.beamformer_solution import BeamformerSolution


@dataclass(frozen=True, slots=True)
class ServiceOutcome:
    """One completed service: the transmitted solution and the time the server was busy."""

    solution: BeamformerSolution | None
    total_time: float
    redraws: int = 0

    def __post_init__(self) -> None:
        if not self.total_time > 0:
            raise ValueError(f"Service time must be positive, got {self.total_time}")
