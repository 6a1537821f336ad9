"""RenderPlotsUseCase - figures from a written summary file."""

from __future__ import annotations

import logging
import math
import os
from typing import Sequence

from src.application.dtos.summary_row import SummaryRow
from src.application.ports.i_plot_renderer import IPlotRenderer
from src.application.ports.i_report_repository import IReportRepository
from src.domain.exceptions import PlotError

logger = logging.getLogger(__name__)


class RenderPlotsUseCase:
    """Load a summary, keep the successful rows and draw the requested figures."""

    def __init__(self, repository: IReportRepository, renderer: IPlotRenderer) -> None:
        self.repository = repository
        self.renderer = renderer

    def usable_rows(self, summary_path: str) -> list[SummaryRow]:
        """Rows without an error and with a finite mean sojourn.

        Raises:
            ReportSchemaError: If the file does not match the summary schema
            PlotError: If no row is usable
        """
        rows = [
            r
            for r in self.repository.load_summary(summary_path)
            if not r.failed and not math.isnan(r.mean_sojourn_s)
        ]
        if not rows:
            raise PlotError(f"{summary_path} has no successful rows to plot")
        return rows

    def execute(
        self, summary_path: str, kinds: Sequence[str], output_dir: str | None = None
    ) -> list[str]:
        """Render every kind as ``<output_dir>/<kind>.svg``.

        Args:
            summary_path: Summary CSV written by an experiment
            kinds: Plot kinds to draw
            output_dir: Target directory (defaults to the summary's directory)

        Returns:
            Paths written, in the order of ``kinds``

        Raises:
            ReportSchemaError: If the file does not match the summary schema
            PlotError: If there is nothing to plot or a kind cannot be drawn
        """
        if not kinds:
            raise PlotError("No plot kind requested")
        rows = self.usable_rows(summary_path)
        target = output_dir or os.path.dirname(summary_path) or "."
        paths = []
        for kind in kinds:
            path = os.path.join(target, f"{kind}.svg")
            try:
                paths.append(self.renderer.render(rows, kind, path))
            except ValueError as e:
                raise PlotError(f"Plot '{kind}' failed: {e}") from e
        logger.info(f"Rendered {len(paths)} plot(s) from {len(rows)} row(s)")
        return paths
