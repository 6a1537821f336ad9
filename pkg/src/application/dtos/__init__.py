"""Application DTOs - Data Transfer Objects for use case requests/responses."""

from .experiment_plan import ExperimentPlan, ExperimentResult
from .replication_summary import ClassSummary, ReplicationSummary
from .service_outcome import ServiceOutcome
from .simulation_request import SimulationRequest
from .summary_row import SAMPLE_COLUMNS, SUMMARY_COLUMNS, SampleRow, SummaryRow
from .theory_settings import TheorySettings

__all__ = [
    "ClassSummary",
    "ExperimentPlan",
    "ExperimentResult",
    "ReplicationSummary",
    "SAMPLE_COLUMNS",
    "SUMMARY_COLUMNS",
    "SampleRow",
    "ServiceOutcome",
    "SimulationRequest",
    "SummaryRow",
    "TheorySettings",
]
