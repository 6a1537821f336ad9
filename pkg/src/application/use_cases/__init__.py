"""Application use cases."""

from .render_plots_use_case import RenderPlotsUseCase
from .run_experiment_use_case import RunExperimentUseCase
from .run_replications_use_case import RunReplicationsUseCase, pooled_class_summary
from .run_simulation_use_case import RunSimulationUseCase
from .run_theory_use_case import RunTheoryUseCase

__all__ = [
    "RenderPlotsUseCase",
    "RunExperimentUseCase",
    "RunReplicationsUseCase",
    "RunSimulationUseCase",
    "RunTheoryUseCase",
    "pooled_class_summary",
]
