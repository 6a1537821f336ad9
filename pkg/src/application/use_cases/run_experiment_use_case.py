"""RunExperimentUseCase - sweep orchestration, report writing and plotting."""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field

from src.application.dtos.experiment_plan import ExperimentPlan, ExperimentResult
from src.application.dtos.replication_summary import ReplicationSummary
from src.application.dtos.summary_row import SampleRow, SummaryRow
from src.application.ports.i_plot_renderer import IPlotRenderer
from src.application.ports.i_report_repository import IReportRepository
from src.application.use_cases.render_plots_use_case import RenderPlotsUseCase
from src.application.use_cases.run_replications_use_case import RunReplicationsUseCase
from src.application.use_cases.run_theory_use_case import RunTheoryUseCase
from src.domain.exceptions import ConfigValidationError, PlotError
from src.domain.services.config_validator import ConfigValidator
from src.domain.value_objects.system_config import ALL, QueueKind, SystemConfig
from src.domain.value_objects.theory import TheoryResult

logger = logging.getLogger(__name__)

SUMMARY_FILE = "summary.csv"

_THEORY_KINDS = (QueueKind.SMQ, QueueKind.DSMQ)


def _row(source: str, config: SystemConfig, user_class: str, **values) -> SummaryRow:
    return SummaryRow(
        source=source,
        scheme=config.scheme.value,
        queue_kind=config.queue_kind.value,
        S=config.S,
        C=config.C,
        lambda_total=config.lambda_total,
        K=config.K,
        L=config.L,
        N=config.N,
        user_class=user_class,
        **values,
    )


def simulation_rows(summary: ReplicationSummary) -> list[SummaryRow]:
    """One sim row per reported user class."""
    return [
        _row(
            "sim",
            summary.config,
            name,
            mean_sojourn_s=stats.mean,
            ci_lo=stats.ci_lo,
            ci_hi=stats.ci_hi,
            mean_service_s=summary.mean_service_time,
            services=summary.services,
            seed_count=len(summary.reports),
        )
        for name, stats in summary.classes.items()
    ]


def theory_rows(config: SystemConfig, result: TheoryResult) -> list[SummaryRow]:
    """Theory rows: ``all`` for SMQ; ``all``, ``good`` and ``bad`` for DSMQ."""
    rows = []
    if result.mixed is not None and len(result.classes) > 1:
        rows.append(_row("theory", config, ALL, mean_sojourn_s=result.mean_sojourn))
    for cls in result.classes:
        rows.append(
            _row(
                "theory",
                config,
                cls.user_class,
                mean_sojourn_s=cls.mean_sojourn,
                mean_service_s=cls.ET,
            )
        )
    return rows


def sample_rows(summary: ReplicationSummary) -> list[SampleRow]:
    rows = []
    for report in summary.reports:
        replication = report.seed if report.seed is not None else -1
        rows.extend(
            SampleRow(
                replication=replication,
                service_index=s.service_index,
                user=s.user,
                file=s.file,
                user_class=s.user_class,
                sojourn_s=s.sojourn,
            )
            for s in report.samples
        )
    return rows


@dataclass
class _PointOutcome:
    """Rows and samples produced by one sweep point."""

    rows: list[SummaryRow] = field(default_factory=list)
    samples: list[SampleRow] = field(default_factory=list)


class RunExperimentUseCase:
    """Runs every sweep point, then writes the summary, samples and plots.

    Points run concurrently on ``plan.workers`` threads; replications inside a
    point run one after another. A failing point yields a row whose ``error``
    column carries the message, and the remaining points still run. A plot
    that cannot be drawn is reported in ``plot_errors``; both mark the result
    as failed.
    """

    def __init__(
        self,
        replications: RunReplicationsUseCase,
        theory: RunTheoryUseCase,
        repository: IReportRepository,
        renderer: IPlotRenderer | None = None,
        validator: ConfigValidator | None = None,
    ) -> None:
        self.replications = replications
        self.theory = theory
        self.repository = repository
        self.plots = RenderPlotsUseCase(repository, renderer) if renderer is not None else None
        self.validator = validator or ConfigValidator()

    def execute(self, plan: ExperimentPlan) -> ExperimentResult:
        """Run the experiment.

        Raises:
            ConfigValidationError: If any sweep point is invalid; nothing runs in that case
        """
        points = plan.points()
        self._validate_all(points)
        logger.info(
            f"Experiment: {len(points)} point(s), {len(plan.seeds)} seed(s), "
            f"sources={plan.sources}, workers={plan.workers}"
        )

        outcomes: list[_PointOutcome | None] = [None] * len(points)
        if plan.workers <= 1:
            for index, config in enumerate(points):
                outcomes[index] = self._run_point(plan, config)
        else:
            with ThreadPoolExecutor(max_workers=plan.workers) as executor:
                futures = {
                    executor.submit(self._run_point, plan, config): index
                    for index, config in enumerate(points)
                }
                for future in as_completed(futures):
                    outcomes[futures[future]] = future.result()

        rows = [row for outcome in outcomes if outcome for row in outcome.rows]
        os.makedirs(plan.output_dir, exist_ok=True)
        summary_path = self.repository.save_summary(
            rows, os.path.join(plan.output_dir, SUMMARY_FILE)
        )

        sample_paths = []
        if plan.samples:
            for index, outcome in enumerate(outcomes):
                if outcome and outcome.samples:
                    path = os.path.join(plan.output_dir, f"samples_p{index:03d}.csv")
                    sample_paths.append(self.repository.save_samples(outcome.samples, path))

        plot_paths, plot_errors = self._render_plots(plan, summary_path)

        result = ExperimentResult(
            rows=tuple(rows),
            summary_path=summary_path,
            sample_paths=tuple(sample_paths),
            plot_paths=tuple(plot_paths),
            plot_errors=tuple(plot_errors),
        )
        if result.success:
            logger.info(f"Experiment complete: {len(rows)} rows written to {summary_path}")
        else:
            logger.warning(
                f"Experiment finished with {result.failed_points} failed row(s) "
                f"and {len(plot_errors)} failed plot(s)"
            )
        return result

    def _validate_all(self, points: list[SystemConfig]) -> None:
        errors = []
        for config in points:
            errors.extend(i for i in self.validator.validate(config) if i.severity == "error")
        if errors:
            raise ConfigValidationError(errors)

    def _run_point(self, plan: ExperimentPlan, config: SystemConfig) -> _PointOutcome:
        outcome = _PointOutcome()
        label = f"{config.queue_kind.value}/{config.scheme.value} lambda={config.lambda_total}"

        if plan.run_simulation:
            try:
                summary = self.replications.execute(
                    config,
                    plan.n_services,
                    plan.seeds,
                    warmup_services=plan.warmup_services,
                    drain=plan.drain,
                )
                outcome.rows.extend(simulation_rows(summary))
                if plan.samples:
                    outcome.samples.extend(sample_rows(summary))
            except Exception as e:
                logger.error(f"Simulation failed for {label}: {e}", exc_info=True)
                outcome.rows.append(_row("sim", config, ALL, error=str(e) or type(e).__name__))

        if plan.run_theory:
            if config.queue_kind not in _THEORY_KINDS:
                logger.warning(f"No theory for {config.queue_kind.value}; skipping {label}")
            else:
                try:
                    result = self.theory.execute(config, plan.theory)
                    outcome.rows.extend(theory_rows(config, result))
                except Exception as e:
                    logger.error(f"Theory failed for {label}: {e}", exc_info=True)
                    outcome.rows.append(
                        _row("theory", config, ALL, error=str(e) or type(e).__name__)
                    )
        return outcome

    def _render_plots(
        self, plan: ExperimentPlan, summary_path: str
    ) -> tuple[list[str], list[str]]:
        if not plan.plots or self.plots is None:
            return [], []
        paths, errors = [], []
        for kind in plan.plots:
            try:
                paths.extend(self.plots.execute(summary_path, [kind], plan.output_dir))
            except PlotError as e:
                logger.error(str(e))
                errors.append(str(e))
        return paths, errors
