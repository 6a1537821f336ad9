"""Infrastructure adapters - Implementations of application ports."""

from .csv_report_adapter import CsvReportAdapter
from .matplotlib_plot_adapter import MatplotlibPlotAdapter
from .slsqp_beamformer import SlsqpBeamformer
from .solver_trace_writer import SolverTraceWriter

__all__ = [
    "CsvReportAdapter",
    "MatplotlibPlotAdapter",
    "SlsqpBeamformer",
    "SolverTraceWriter",
]
