"""Application layer - Use cases, ports, services and DTOs."""

from .dtos import ExperimentPlan, ExperimentResult, SimulationRequest, TheorySettings
from .ports import IBeamformer, IPlotRenderer, IReportRepository, IServiceTimeSampler
from .use_cases import (
    RunExperimentUseCase,
    RunReplicationsUseCase,
    RunSimulationUseCase,
    RunTheoryUseCase,
)

__all__ = [
    # Ports
    "IBeamformer",
    "IServiceTimeSampler",
    "IReportRepository",
    "IPlotRenderer",
    # DTOs
    "ExperimentPlan",
    "ExperimentResult",
    "SimulationRequest",
    "TheorySettings",
    # Use Cases
    "RunSimulationUseCase",
    "RunReplicationsUseCase",
    "RunTheoryUseCase",
    "RunExperimentUseCase",
]
