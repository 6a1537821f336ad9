"""BeamformerSolution value object - precoders and the resulting service time."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing_extensions import Self

import numpy as np
from numpy.typing import NDArray

from .system_config import Scheme


@dataclass(frozen=True, slots=True, eq=False)
class BeamformerSolution:
    """Result of one beamforming solve.

    Attributes:
        scheme: Beamforming variant that produced the solution
        w: Designated-stream precoders, shape (streams, L)
        r_star: Symmetric rate; bits/s/Hz for MMF and MMF-SIC, 1/seconds for MMF-RS
        T_star: Service time in seconds (inf when r_star is 0)
        w_D: Degraded-stream precoder (MMF-RS only)
        alpha: Per-file share carried on the degraded stream (MMF-RS only)
        beta: Per-stream size fractions (MMF-SIC only)
        stream_rates: Per-stream rates R^s in bits/s/Hz (MMF-SIC only)
        per_user_rates: Achieved rate per served user in bits/s/Hz
    """

    scheme: Scheme
    w: NDArray[np.complex128]
    r_star: float
    T_star: float
    w_D: NDArray[np.complex128] | None = None
    alpha: NDArray[np.float64] | None = None
    beta: NDArray[np.float64] | None = None
    stream_rates: NDArray[np.float64] | None = None
    per_user_rates: dict[int, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.r_star < 0:
            raise ValueError(f"Symmetric rate must be non-negative, got {self.r_star}")
        if not self.T_star > 0:
            raise ValueError(f"Service time must be positive, got {self.T_star}")

    @classmethod
    def degenerate(cls, scheme: Scheme, n_streams: int, L: int) -> Self:
        """w = 0 is always feasible with rate 0."""
        alpha = np.zeros(n_streams) if scheme is Scheme.MMF_RS else None
        w_D = np.zeros(L, dtype=complex) if scheme is Scheme.MMF_RS else None
        beta = np.full(n_streams, 1.0 / n_streams) if scheme is Scheme.MMF_SIC else None
        rates = np.zeros(n_streams) if scheme is Scheme.MMF_SIC else None
        return cls(
            scheme=scheme,
            w=np.zeros((n_streams, L), dtype=complex),
            r_star=0.0,
            T_star=math.inf,
            w_D=w_D,
            alpha=alpha,
            beta=beta,
            stream_rates=rates,
        )

    @property
    def n_streams(self) -> int:
        return int(self.w.shape[0])

    @property
    def total_power(self) -> float:
        power = float(np.sum(np.abs(self.w) ** 2))
        if self.w_D is not None:
            power += float(np.sum(np.abs(self.w_D) ** 2))
        return power

    @property
    def service_rate(self) -> float:
        """1/T* in 1/seconds, 0 for a degenerate solution."""
        return 0.0 if math.isinf(self.T_star) else 1.0 / self.T_star
