"""Infrastructure layer - Adapters and external dependencies."""

from .adapters import CsvReportAdapter, MatplotlibPlotAdapter, SlsqpBeamformer, SolverTraceWriter
from .container import Container

__all__ = [
    "CsvReportAdapter",
    "MatplotlibPlotAdapter",
    "SlsqpBeamformer",
    "SolverTraceWriter",
    "Container",
]
