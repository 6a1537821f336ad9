"""SummaryRow and SampleRow DTOs - one line of the summary and per-sample reports."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import TYPE_CHECKING, Any, Mapping

if TYPE_CHECKING:
    from typing_extensions import Self

SUMMARY_COLUMNS = (
    "source",
    "scheme",
    "queue_kind",
    "S",
    "C",
    "lambda",
    "K",
    "L",
    "N",
    "class",
    "mean_sojourn_s",
    "ci_lo",
    "ci_hi",
    "mean_service_s",
    "services",
    "seed_count",
    "error",
)

SAMPLE_COLUMNS = ("replication", "service_index", "user", "file", "class", "sojourn_s")

# dataclass field -> CSV column, where they differ
_RENAMED = {"lambda_total": "lambda", "user_class": "class"}


@dataclass(frozen=True, slots=True)
class SummaryRow:
    """Aggregate result of one sweep point, source and user class."""

    source: str  # "sim" or "theory"
    scheme: str
    queue_kind: str
    S: int
    C: int
    lambda_total: float
    K: int
    L: int
    N: int
    user_class: str
    mean_sojourn_s: float = math.nan
    ci_lo: float = math.nan
    ci_hi: float = math.nan
    mean_service_s: float = math.nan
    services: int = 0
    seed_count: int = 0
    error: str = ""

    @property
    def failed(self) -> bool:
        return bool(self.error)

    @property
    def series_key(self) -> tuple[str, str, int, int]:
        """Identity of a plotted curve."""
        return (self.scheme, self.queue_kind, self.S, self.C)

    def to_record(self) -> dict[str, Any]:
        return {_RENAMED.get(k, k): v for k, v in asdict(self).items()}

    @classmethod
    def from_record(cls, record: Mapping[str, Any]) -> Self:
        inverse = {v: k for k, v in _RENAMED.items()}
        values = {inverse.get(k, k): v for k, v in record.items()}
        for key in ("S", "C", "K", "L", "N", "services", "seed_count"):
            values[key] = int(values[key])
        for key in ("lambda_total", "mean_sojourn_s", "ci_lo", "ci_hi", "mean_service_s"):
            values[key] = float(values[key])
        error = values.get("error")
        missing = error is None or (isinstance(error, float) and math.isnan(error))
        values["error"] = "" if missing else str(error)
        return cls(**values)


@dataclass(frozen=True, slots=True)
class SampleRow:
    """Sojourn of one request in one replication."""

    replication: int
    service_index: int
    user: int
    file: int
    user_class: str
    sojourn_s: float

    def to_record(self) -> dict[str, Any]:
        return {_RENAMED.get(k, k): v for k, v in asdict(self).items()}
