"""ExperimentPlan and ExperimentResult DTOs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

from src.application.dtos.summary_row import SummaryRow
from src.application.dtos.theory_settings import TheorySettings
from src.domain.value_objects.system_config import SystemConfig

SOURCES = ("sim", "theory", "both")

# Sweep keys accepted on the command line besides SystemConfig field names
SWEEP_ALIASES = {"lambda": "lambda_total"}


def parse_sweep_value(key: str, raw: str) -> Any:
    """Convert a command-line sweep value to the type of its SystemConfig field."""
    if key in ("L", "K", "N", "S", "C"):
        return int(raw)
    if key in ("scheme", "queue_kind"):
        return raw.strip()
    return float(raw)


@dataclass(frozen=True, slots=True)
class ExperimentPlan:
    """Base scenario, sweep axes and run settings of one experiment.

    Sweep points are the Cartesian product of the axes, in axis order with
    the last axis varying fastest.
    """

    base_config: SystemConfig
    sweep: tuple[tuple[str, tuple[Any, ...]], ...] = ()
    seeds: tuple[int, ...] = (0,)
    n_services: int = 2000
    warmup_services: int | None = None
    output_dir: str = "results"
    sources: str = "sim"
    samples: bool = False
    plots: tuple[str, ...] = ()
    drain: bool = False
    theory: TheorySettings = field(default_factory=TheorySettings)
    workers: int = 1

    def __post_init__(self) -> None:
        if self.sources not in SOURCES:
            raise ValueError(f"sources must be one of {SOURCES}, got {self.sources!r}")
        if not self.seeds:
            raise ValueError("At least one seed is required")
        if self.n_services < 1:
            raise ValueError(f"n_services must be at least 1, got {self.n_services}")
        known = set(SystemConfig.field_names())
        for key, values in self.sweep:
            if key not in known:
                raise ValueError(f"Unknown sweep axis '{key}'")
            if not values:
                raise ValueError(f"Sweep axis '{key}' has no values")

    @staticmethod
    def normalize_sweep(
        sweep: Mapping[str, Sequence[Any]] | Sequence[tuple[str, Sequence[Any]]],
    ) -> tuple[tuple[str, tuple[Any, ...]], ...]:
        items = sweep.items() if isinstance(sweep, Mapping) else sweep
        return tuple((SWEEP_ALIASES.get(k, k), tuple(v)) for k, v in items)

    @property
    def run_simulation(self) -> bool:
        return self.sources in ("sim", "both")

    @property
    def run_theory(self) -> bool:
        return self.sources in ("theory", "both")

    def points(self) -> list[SystemConfig]:
        """Every configuration of the sweep product."""
        if not self.sweep:
            return [self.base_config]
        keys = [k for k, _ in self.sweep]
        return [
            self.base_config.replace(**dict(zip(keys, combo)))
            for combo in itertools.product(*(v for _, v in self.sweep))
        ]


@dataclass(frozen=True, slots=True)
class ExperimentResult:
    """Rows produced by an experiment and the files written."""

    rows: tuple[SummaryRow, ...]
    summary_path: str | None = None
    sample_paths: tuple[str, ...] = ()
    plot_paths: tuple[str, ...] = ()
    plot_errors: tuple[str, ...] = ()

    @property
    def failed_points(self) -> int:
        return sum(1 for row in self.rows if row.failed)

    @property
    def success(self) -> bool:
        return self.failed_points == 0 and not self.plot_errors
