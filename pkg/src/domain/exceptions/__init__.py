"""Domain exceptions."""

from __future__ import annotations

from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from src.domain.services.config_validator import ValidationIssue


class SimulationError(Exception):
    """Base class for all errors raised by the toolkit."""


class ConfigValidationError(SimulationError):
    """Scenario configuration violates one or more invariants."""

    def __init__(self, issues: Sequence[ValidationIssue]) -> None:
        self.issues = tuple(issues)
        lines = "; ".join(f"{i.field}: {i.message}" for i in self.issues)
        super().__init__(f"Invalid configuration ({len(self.issues)} issues): {lines}")


class QueueStateError(SimulationError):
    """Illegal operation on a multicast queue."""


class RedrawLimitExceeded(SimulationError):
    """Too many consecutive channel redraws below the minimum service rate."""


class FixedPointDivergence(SimulationError):
    """Type-1 delay iteration left the stable region."""


class NonConvergenceError(SimulationError):
    """Outer theory loop did not settle within its iteration cap."""


class ReportSchemaError(SimulationError):
    """A report file does not match the documented schema."""

    def __init__(self, column: str, message: str) -> None:
        self.column = column
        super().__init__(f"Column '{column}': {message}")


class PlotError(SimulationError):
    """A figure cannot be drawn from the given summary."""


__all__ = [
    "SimulationError",
    "ConfigValidationError",
    "QueueStateError",
    "RedrawLimitExceeded",
    "FixedPointDivergence",
    "NonConvergenceError",
    "ReportSchemaError",
    "PlotError",
]
