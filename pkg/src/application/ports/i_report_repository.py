"""IReportRepository port - Interface for summary and sample persistence."""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Sequence

from src.application.dtos.summary_row import SampleRow, SummaryRow


class IReportRepository(ABC):
    """Port interface for report repositories.

    Implementations might include:
    - CsvReportAdapter (pandas CSV files)
    """

    @abstractmethod
    def save_summary(self, rows: Sequence[SummaryRow], output_path: str) -> str:
        """Write summary rows in the documented column order.

        Returns:
            Path written
        """

    @abstractmethod
    def load_summary(self, path: str) -> list[SummaryRow]:
        """Parse a summary file.

        Raises:
            ReportSchemaError: If a column is missing, unexpected or malformed
        """

    @abstractmethod
    def save_samples(self, rows: Sequence[SampleRow], output_path: str) -> str:
        """Write per-request sojourn samples.

        Returns:
            Path written
        """
