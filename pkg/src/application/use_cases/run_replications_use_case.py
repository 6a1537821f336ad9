"""RunReplicationsUseCase - independent seeds, pooled means and confidence intervals."""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

import numpy as np
from scipy.stats import norm

from src.application.dtos.replication_summary import ClassSummary, ReplicationSummary
from src.application.dtos.simulation_request import SimulationRequest
from src.application.use_cases.run_simulation_use_case import RunSimulationUseCase
from src.domain.value_objects.delay_report import DelayReport
from src.domain.value_objects.system_config import SystemConfig

logger = logging.getLogger(__name__)

CONFIDENCE = 0.95


def pooled_class_summary(user_class: str, means: Sequence[float]) -> ClassSummary:
    """Mean of replication means with a normal-approximation CI (NaN below two replications)."""
    values = np.asarray([m for m in means if not math.isnan(m)], dtype=float)
    if values.size == 0:
        return ClassSummary(user_class, math.nan, math.nan, math.nan, 0)
    mean = float(values.mean())
    if values.size < 2:
        return ClassSummary(user_class, mean, math.nan, math.nan, 1)
    half_width = norm.ppf(0.5 + CONFIDENCE / 2) * values.std(ddof=1) / math.sqrt(values.size)
    return ClassSummary(user_class, mean, mean - half_width, mean + half_width, int(values.size))


class RunReplicationsUseCase:
    """Runs one replication per seed, concurrently, and pools them."""

    def __init__(self, simulation: RunSimulationUseCase, max_workers: int = 1) -> None:
        """Initialize use case.

        Args:
            simulation: Single-run use case
            max_workers: Replications running at the same time
        """
        self.simulation = simulation
        self.max_workers = max(1, max_workers)

    def execute(
        self,
        config: SystemConfig,
        n_services: int,
        seeds: Sequence[int],
        warmup_services: int | None = None,
        drain: bool = False,
    ) -> ReplicationSummary:
        """Run every seed and pool the results.

        Returns:
            Reports in seed order and per-class pooled summaries
        """
        if not seeds:
            raise ValueError("At least one seed is required")
        requests = [
            SimulationRequest(config, n_services, warmup_services, seed, drain) for seed in seeds
        ]
        logger.info(
            f"Running {len(seeds)} replication(s) of {config.queue_kind.value}/"
            f"{config.scheme.value} lambda={config.lambda_total} S={config.S}"
        )

        if self.max_workers == 1 or len(requests) == 1:
            reports = [self.simulation.execute(r) for r in requests]
        else:
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                reports = list(executor.map(self.simulation.execute, requests))

        return summarize(config, reports)


def summarize(config: SystemConfig, reports: Sequence[DelayReport]) -> ReplicationSummary:
    """Pool replication reports class by class."""
    class_names = reports[0].classes if reports else ()
    classes = {
        name: pooled_class_summary(name, [r.class_means.get(name, math.nan) for r in reports])
        for name in class_names
    }
    service_means = [r.mean_service_time for r in reports if r.service_times]
    return ReplicationSummary(
        config=config,
        reports=tuple(reports),
        classes=classes,
        mean_service_time=float(np.mean(service_means)) if service_means else math.nan,
        services=sum(r.n_services for r in reports),
    )
