"""Dependency Injection Container."""

from __future__ import annotations

import logging
from typing import Any, Mapping, Sequence

from src.application.dtos.experiment_plan import ExperimentPlan, parse_sweep_value
from src.application.dtos.theory_settings import TheorySettings
from src.application.services.service_time_service import RedrawServiceTimeSampler
from src.application.services.simulation_engine import SimulationEngine
from src.application.use_cases.render_plots_use_case import RenderPlotsUseCase
from src.application.use_cases.run_experiment_use_case import RunExperimentUseCase
from src.application.use_cases.run_replications_use_case import RunReplicationsUseCase
from src.application.use_cases.run_simulation_use_case import RunSimulationUseCase
from src.application.use_cases.run_theory_use_case import RunTheoryUseCase
from src.domain.value_objects.solver_settings import SolverSettings
from src.domain.value_objects.system_config import SystemConfig
from src.infrastructure.adapters.csv_report_adapter import CsvReportAdapter
from src.infrastructure.adapters.matplotlib_plot_adapter import MatplotlibPlotAdapter
from src.infrastructure.adapters.slsqp_beamformer import SlsqpBeamformer
from src.infrastructure.adapters.solver_trace_writer import SolverTraceWriter

logger = logging.getLogger(__name__)


class Container:
    """Dependency injection container for wiring components."""

    def __init__(self, config: dict) -> None:
        """Initialize container with configuration.

        Args:
            config: Application configuration dictionary (sections as in config.yml)
        """
        self.config = config
        self._beamformer: SlsqpBeamformer | None = None
        self._sampler: RedrawServiceTimeSampler | None = None
        self._report_repository: CsvReportAdapter | None = None
        self._plot_renderer: MatplotlibPlotAdapter | None = None
        self._run_simulation_use_case: RunSimulationUseCase | None = None

        logger.debug("Initialized dependency injection container")

    def _section(self, name: str) -> dict[str, Any]:
        return dict(self.config.get(name) or {})

    def solver_settings(self) -> SolverSettings:
        return SolverSettings.from_mapping(self._section("solver"))

    def theory_settings(self) -> TheorySettings:
        return TheorySettings.from_mapping(self._section("theory"))

    def system_config(self) -> SystemConfig:
        return SystemConfig.from_mapping(self._section("system"))

    def beamformer(self) -> SlsqpBeamformer:
        """Get or create the beamforming solver.

        Returns:
            SlsqpBeamformer with the configured solver settings
        """
        if self._beamformer is None:
            settings = self.solver_settings()
            trace = SolverTraceWriter(settings.trace_file) if settings.trace_file else None
            self._beamformer = SlsqpBeamformer(settings, trace_writer=trace)
        return self._beamformer

    def service_time_sampler(self) -> RedrawServiceTimeSampler:
        if self._sampler is None:
            self._sampler = RedrawServiceTimeSampler(
                self.beamformer(), max_redraws=self.solver_settings().max_redraws
            )
        return self._sampler

    def report_repository(self) -> CsvReportAdapter:
        if self._report_repository is None:
            self._report_repository = CsvReportAdapter()
        return self._report_repository

    def plot_renderer(self) -> MatplotlibPlotAdapter:
        if self._plot_renderer is None:
            self._plot_renderer = MatplotlibPlotAdapter()
        return self._plot_renderer

    def run_simulation_use_case(self) -> RunSimulationUseCase:
        if self._run_simulation_use_case is None:
            engine = SimulationEngine(self.service_time_sampler(), self.beamformer())
            self._run_simulation_use_case = RunSimulationUseCase(engine)
        return self._run_simulation_use_case

    def run_replications_use_case(self, max_workers: int = 1) -> RunReplicationsUseCase:
        return RunReplicationsUseCase(self.run_simulation_use_case(), max_workers=max_workers)

    def run_theory_use_case(self) -> RunTheoryUseCase:
        return RunTheoryUseCase(self.service_time_sampler())

    def run_experiment_use_case(self) -> RunExperimentUseCase:
        """Replications run sequentially inside a point; points are spread over workers."""
        return RunExperimentUseCase(
            replications=self.run_replications_use_case(max_workers=1),
            theory=self.run_theory_use_case(),
            repository=self.report_repository(),
            renderer=self.plot_renderer(),
        )

    def render_plots_use_case(self) -> RenderPlotsUseCase:
        return RenderPlotsUseCase(self.report_repository(), self.plot_renderer())

    def create_experiment_plan(self, overrides: Mapping[str, Any] | None = None) -> ExperimentPlan:
        """Build the plan from the simulation/theory/experiment sections.

        Args:
            overrides: Command-line values (None entries are ignored). ``sweep`` given
                here replaces configured axes of the same name.

        Returns:
            ExperimentPlan ready for RunExperimentUseCase
        """
        overrides = {k: v for k, v in (overrides or {}).items() if v is not None}
        simulation = self._section("simulation")
        experiment = self._section("experiment")

        sweep = dict(ExperimentPlan.normalize_sweep(experiment.get("sweep") or {}))
        sweep.update(ExperimentPlan.normalize_sweep(overrides.get("sweep") or {}))

        seeds: Sequence[int] = overrides.get("seeds", simulation.get("seeds", [0]))
        if isinstance(seeds, int):
            seeds = [seeds]

        theory = self.theory_settings()
        return ExperimentPlan(
            base_config=self.system_config(),
            sweep=tuple(sweep.items()),
            seeds=tuple(int(s) for s in seeds),
            n_services=int(overrides.get("n_services", simulation.get("n_services", 2000))),
            warmup_services=overrides.get("warmup_services", simulation.get("warmup_services")),
            output_dir=str(overrides.get("output_dir", experiment.get("output_dir", "results"))),
            sources=overrides.get("sources", experiment.get("sources", "sim")),
            samples=bool(overrides.get("samples", experiment.get("samples", False))),
            plots=tuple(overrides.get("plots", experiment.get("plots", ()))),
            drain=bool(simulation.get("drain", False)),
            theory=theory,
            workers=int(overrides.get("workers", simulation.get("workers", 1))),
        )


def parse_sweep_argument(argument: str) -> tuple[str, tuple[Any, ...]]:
    """Parse ``KEY=V1,V2,...`` from the command line."""
    if "=" not in argument:
        raise ValueError(f"Sweep must look like KEY=V1,V2,..., got '{argument}'")
    key, raw = argument.split("=", 1)
    key = key.strip()
    values = tuple(parse_sweep_value(key, v) for v in raw.split(",") if v.strip())
    if not values:
        raise ValueError(f"Sweep '{key}' has no values")
    return key, values
