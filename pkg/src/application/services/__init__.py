"""Application services - Simulation engine, service-time sampling and theory."""

from .service_time_service import RedrawServiceTimeSampler, service_with_redraw
from .simulation_engine import SimulationEngine
from .theory_service import TheoryAnalyzer

__all__ = [
    "RedrawServiceTimeSampler",
    "SimulationEngine",
    "TheoryAnalyzer",
    "service_with_redraw",
]
