"""Channel value objects - fading statistics and one flat-fading realization."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from typing_extensions import Self

import numpy as np
from numpy.typing import NDArray


@dataclass(frozen=True, slots=True, eq=False)
class ChannelStatistics:
    """Per-user mean fading g_k (linear)."""

    gains: NDArray[np.float64]

    def __post_init__(self) -> None:
        gains = np.array(self.gains, dtype=float, copy=True).reshape(-1)
        if gains.size == 0:
            raise ValueError("Channel statistics need at least one user")
        if not np.all(np.isfinite(gains)) or np.any(gains <= 0):
            raise ValueError("Mean fading g_k must be > 0 for every user")
        gains.setflags(write=False)
        object.__setattr__(self, "gains", gains)

    @classmethod
    def from_db(cls, gains_db: Sequence[float]) -> Self:
        return cls(10.0 ** (np.asarray(gains_db, dtype=float) / 10.0))

    @property
    def K(self) -> int:
        return int(self.gains.size)


@dataclass(frozen=True, slots=True, eq=False)
class ChannelMatrix:
    """Complex L x K channel H; column k is h_k."""

    H: NDArray[np.complex128]

    def __post_init__(self) -> None:
        H = np.array(self.H, dtype=complex, copy=True)
        if H.ndim != 2:
            raise ValueError(f"Channel matrix must be 2-D (L x K), got shape {H.shape}")
        if not np.all(np.isfinite(H)):
            raise ValueError("Channel matrix entries must be finite")
        H.setflags(write=False)
        object.__setattr__(self, "H", H)

    @property
    def L(self) -> int:
        return int(self.H.shape[0])

    @property
    def K(self) -> int:
        return int(self.H.shape[1])

    def column(self, user: int) -> NDArray[np.complex128]:
        return self.H[:, user]

    def __repr__(self) -> str:
        return f"ChannelMatrix(L={self.L}, K={self.K})"
