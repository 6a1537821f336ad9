"""RateMatrix value object - per (user, file) Poisson request rates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

if TYPE_CHECKING:
    from typing_extensions import Self

import numpy as np
from numpy.typing import NDArray


@dataclass(frozen=True, slots=True, eq=False)
class RateMatrix:
    """K x N matrix of request rates lambda_{nk} (requests/second).

    Row k holds user k's rates over the library; column n holds file n's rates over users.
    """

    rates: NDArray[np.float64]

    def __post_init__(self) -> None:
        rates = np.array(self.rates, dtype=float, copy=True)
        if rates.ndim != 2:
            raise ValueError(f"Rate matrix must be 2-D (K x N), got shape {rates.shape}")
        if np.any(rates < 0) or not np.all(np.isfinite(rates)):
            raise ValueError("Request rates must be finite and non-negative")
        rates.setflags(write=False)
        object.__setattr__(self, "rates", rates)

    @classmethod
    def from_file_rates(cls, per_file: NDArray[np.float64], K: int) -> Self:
        """Uniform split of each file's rate across K users."""
        per_file = np.asarray(per_file, dtype=float)
        return cls(np.tile(per_file / K, (K, 1)))

    @property
    def K(self) -> int:
        return int(self.rates.shape[0])

    @property
    def N(self) -> int:
        return int(self.rates.shape[1])

    @property
    def total(self) -> float:
        return float(self.rates.sum())

    @property
    def per_file(self) -> NDArray[np.float64]:
        """lambda_i = sum over users, length N."""
        return self.rates.sum(axis=0)

    @property
    def per_user(self) -> NDArray[np.float64]:
        return self.rates.sum(axis=1)

    def restricted_to(self, users: Iterable[int]) -> RateMatrix:
        """Same shape, with rates of users outside ``users`` zeroed (class rate sets)."""
        mask = np.zeros(self.K, dtype=bool)
        mask[list(users)] = True
        return RateMatrix(np.where(mask[:, None], self.rates, 0.0))

    def __repr__(self) -> str:
        return f"RateMatrix(K={self.K}, N={self.N}, total={self.total:.4g})"
