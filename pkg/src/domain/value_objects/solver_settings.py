"""SolverSettings value object - multi-start optimizer knobs and the redraw cap."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Mapping

if TYPE_CHECKING:
    from typing_extensions import Self


@dataclass(frozen=True, slots=True)
class SolverSettings:
    """Beamforming solver configuration.

    Attributes:
        n_starts: Starting points per solve (structured starts first, then random)
        ftol: SLSQP convergence tolerance
        constraint_tol: Slack added to every inequality during the local solve
        maxiter: Iteration cap per start
        verify_tol: Relative tolerance of the feasibility check
        max_redraws: Consecutive sub-threshold channel draws before giving up
        trace_file: Optional JSON-lines file receiving one record per solve
    """

    n_starts: int = 8
    ftol: float = 1e-8
    constraint_tol: float = 1e-8
    maxiter: int = 500
    verify_tol: float = 1e-6
    max_redraws: int = 1000
    trace_file: str | None = None

    def __post_init__(self) -> None:
        if self.n_starts < 1:
            raise ValueError(f"n_starts must be at least 1, got {self.n_starts}")
        if self.maxiter < 1:
            raise ValueError(f"maxiter must be at least 1, got {self.maxiter}")
        if self.max_redraws < 0:
            raise ValueError(f"max_redraws must be non-negative, got {self.max_redraws}")
        for name in ("ftol", "constraint_tol", "verify_tol"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0")

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any] | None) -> Self:
        values = dict(values or {})
        unknown = sorted(set(values) - set(cls.__dataclass_fields__))
        if unknown:
            raise ValueError(f"Unknown solver settings: {', '.join(unknown)}")
        return cls(**values)
