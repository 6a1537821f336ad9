"""Matplotlib Plot Adapter - Implements IPlotRenderer with deterministic SVG output."""

from __future__ import annotations

import logging
import math
from collections import defaultdict
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from src.application.dtos.summary_row import SummaryRow  # noqa: E402
from src.application.ports.i_plot_renderer import PLOT_KINDS, IPlotRenderer  # noqa: E402
from src.domain.value_objects.system_config import ALL, BAD, GOOD  # noqa: E402

logger = logging.getLogger(__name__)

# Fixed salt so SVG element ids do not change between runs
matplotlib.rcParams["svg.hashsalt"] = "multicast-queue-sim"

Series = dict[tuple[str, str, int, int], list[SummaryRow]]


def _label(key: tuple[str, str, int, int]) -> str:
    scheme, queue_kind, S, C = key
    label = f"{queue_kind} {scheme} S={S}"
    return label + f" C={C}" if queue_kind == "DSMQ" else label


def _group(rows: Sequence[SummaryRow], source: str, user_class: str) -> Series:
    series: Series = defaultdict(list)
    for row in rows:
        if row.source == source and row.user_class == user_class:
            series[row.series_key].append(row)
    return {k: sorted(v, key=lambda r: r.lambda_total) for k, v in sorted(series.items())}


class MatplotlibPlotAdapter(IPlotRenderer):
    """Mean sojourn against arrival rate, one curve per (scheme, queue, S, C)."""

    def __init__(self, dpi: int = 100) -> None:
        self.dpi = dpi

    def render(self, rows: Sequence[SummaryRow], kind: str, output_path: str) -> str:
        if kind not in PLOT_KINDS:
            raise ValueError(f"Unknown plot kind '{kind}', expected one of {PLOT_KINDS}")
        if not rows:
            raise ValueError("Nothing to plot: no summary rows")

        if kind == "good_vs_bad":
            fig, axes = plt.subplots(1, 2, figsize=(11, 4.5), sharey=True)
            drawn = 0
            for ax, user_class in zip(axes, (GOOD, BAD)):
                drawn += self._draw(ax, rows, user_class, with_theory=True)
                ax.set_title(f"{user_class} users")
        else:
            fig, ax = plt.subplots(figsize=(7, 4.5))
            axes = [ax]
            drawn = self._draw(ax, rows, ALL, with_theory=kind == "theory_vs_sim")
            title = "Mean sojourn time" if kind == "delay_vs_lambda" else "Theory vs simulation"
            ax.set_title(title)

        try:
            if drawn == 0:
                raise ValueError(f"No rows usable for '{kind}'")
            for ax in axes:
                ax.set_xlabel("Arrival rate lambda (requests/s)")
                ax.grid(True, alpha=0.3)
                ax.legend(fontsize=8)
            axes[0].set_ylabel("Mean sojourn time (s)")
            fig.tight_layout()

            output_file = Path(output_path)
            output_file.parent.mkdir(parents=True, exist_ok=True)
            fig.savefig(output_file, format="svg", dpi=self.dpi, metadata={"Date": None})
            logger.info(f"Saved {kind} plot to {output_file}")
            return str(output_file)
        finally:
            plt.close(fig)

    @staticmethod
    def _draw(ax, rows: Sequence[SummaryRow], user_class: str, with_theory: bool) -> int:
        drawn = 0
        for key, series in _group(rows, "sim", user_class).items():
            x = [r.lambda_total for r in series]
            y = [r.mean_sojourn_s for r in series]
            if all(math.isnan(r.ci_lo) for r in series):
                ax.plot(x, y, marker="o", linestyle="-", label=f"{_label(key)} (sim)")
            else:
                err = [
                    [0.0 if math.isnan(r.ci_lo) else r.mean_sojourn_s - r.ci_lo for r in series],
                    [0.0 if math.isnan(r.ci_hi) else r.ci_hi - r.mean_sojourn_s for r in series],
                ]
                ax.errorbar(x, y, yerr=err, marker="o", capsize=3, label=f"{_label(key)} (sim)")
            drawn += 1
        if with_theory:
            for key, series in _group(rows, "theory", user_class).items():
                x = [r.lambda_total for r in series]
                y = [r.mean_sojourn_s for r in series]
                ax.plot(x, y, linestyle="--", label=f"{_label(key)} (theory)")
                drawn += 1
        return drawn
