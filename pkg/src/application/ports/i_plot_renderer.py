"""IPlotRenderer port - Interface for static figure output."""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Sequence

from src.application.dtos.summary_row import SummaryRow

PLOT_KINDS = ("delay_vs_lambda", "theory_vs_sim", "good_vs_bad")


class IPlotRenderer(ABC):
    """Port interface for plot renderers.

    Implementations might include:
    - MatplotlibPlotAdapter (SVG via the Agg backend)
    """

    @abstractmethod
    def render(self, rows: Sequence[SummaryRow], kind: str, output_path: str) -> str:
        """Render summary rows as one figure.

        Args:
            rows: Parsed summary rows
            kind: One of PLOT_KINDS
            output_path: Target file

        Returns:
            Path written

        Raises:
            ValueError: If rows are empty or kind is unknown
        """
