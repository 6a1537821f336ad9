"""Application ports - Interfaces for infrastructure adapters."""

from .i_beamformer import IBeamformer
from .i_plot_renderer import PLOT_KINDS, IPlotRenderer
from .i_report_repository import IReportRepository
from .i_service_time_sampler import IServiceTimeSampler

__all__ = [
    "IBeamformer",
    "IPlotRenderer",
    "IReportRepository",
    "IServiceTimeSampler",
    "PLOT_KINDS",
]
