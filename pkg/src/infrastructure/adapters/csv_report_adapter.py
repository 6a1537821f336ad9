"""CSV Report Adapter - Implements IReportRepository with pandas."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Sequence

import pandas as pd

from src.application.dtos.summary_row import SAMPLE_COLUMNS, SUMMARY_COLUMNS, SampleRow, SummaryRow
from src.application.ports.i_report_repository import IReportRepository
from src.domain.exceptions import ReportSchemaError

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.10g"

_INT_COLUMNS = ("S", "C", "K", "L", "N", "services", "seed_count")
_FLOAT_COLUMNS = ("lambda", "mean_sojourn_s", "ci_lo", "ci_hi", "mean_service_s")


class CsvReportAdapter(IReportRepository):
    """Summary and sample files as comma-separated values with a fixed column order."""

    def __init__(self, float_format: str = FLOAT_FORMAT) -> None:
        self.float_format = float_format

    def save_summary(self, rows: Sequence[SummaryRow], output_path: str) -> str:
        frame = pd.DataFrame([r.to_record() for r in rows], columns=list(SUMMARY_COLUMNS))
        return self._write(frame, output_path, "summary")

    def save_samples(self, rows: Sequence[SampleRow], output_path: str) -> str:
        frame = pd.DataFrame([r.to_record() for r in rows], columns=list(SAMPLE_COLUMNS))
        return self._write(frame, output_path, "sample")

    def _write(self, frame: pd.DataFrame, output_path: str, label: str) -> str:
        try:
            output_file = Path(output_path)
            output_file.parent.mkdir(parents=True, exist_ok=True)
            frame.to_csv(output_file, index=False, float_format=self.float_format, na_rep="nan")
            logger.info(f"Saved {len(frame)} {label} row(s) to {output_file}")
            return str(output_file)
        except OSError as e:
            logger.error(f"Failed to save {label} file: {e}")
            raise

    def load_summary(self, path: str) -> list[SummaryRow]:
        """Parse a summary file written by ``save_summary``.

        Raises:
            ReportSchemaError: If a column is missing, unexpected or not numeric where required
        """
        try:
            frame = pd.read_csv(
                path, dtype={"error": str}, keep_default_na=False, na_values=["nan"]
            )
        except pd.errors.EmptyDataError as e:
            raise ReportSchemaError(SUMMARY_COLUMNS[0], "file is empty (no header)") from e
        columns = list(frame.columns)
        for column in SUMMARY_COLUMNS:
            if column not in columns:
                raise ReportSchemaError(column, "missing")
        for column in columns:
            if column not in SUMMARY_COLUMNS:
                raise ReportSchemaError(column, "unexpected")
        if columns != list(SUMMARY_COLUMNS):
            raise ReportSchemaError(columns[0], "columns out of order")

        for column in _INT_COLUMNS + _FLOAT_COLUMNS:
            converted = pd.to_numeric(frame[column], errors="coerce")
            if converted.isna().sum() > frame[column].isna().sum():
                raise ReportSchemaError(column, "non-numeric value")
            if column in _INT_COLUMNS and converted.isna().any():
                raise ReportSchemaError(column, "missing integer value")
            frame[column] = converted

        return [SummaryRow.from_record(record) for record in frame.to_dict(orient="records")]
