"""Theory value objects - inputs and outputs of the fixed-point delay approximations."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing_extensions import Self

import numpy as np
from numpy.typing import NDArray

from .rate_matrix import RateMatrix


@dataclass(frozen=True, slots=True, eq=False)
class FixedPointInput:
    """Data of the Type-1 delay fixed point: streams, per-file rates and service moments."""

    S: int
    lambda_i: NDArray[np.float64]
    ET: float
    ET2: float

    def __post_init__(self) -> None:
        lambda_i = np.array(self.lambda_i, dtype=float, copy=True).reshape(-1)
        if self.S < 1:
            raise ValueError(f"S must be at least 1, got {self.S}")
        if np.any(lambda_i < 0) or not np.all(np.isfinite(lambda_i)):
            raise ValueError("Per-file rates must be finite and non-negative")
        if not (math.isfinite(self.ET) and self.ET > 0):
            raise ValueError(f"ET must be finite and > 0, got {self.ET}")
        # ET2 >= ET^2 up to rounding
        if self.ET2 < self.ET**2 * (1.0 - 1e-9):
            raise ValueError(f"ET2={self.ET2} violates ET2 >= ET^2 for ET={self.ET}")
        lambda_i.setflags(write=False)
        object.__setattr__(self, "lambda_i", lambda_i)

    @property
    def N(self) -> int:
        return int(self.lambda_i.size)

    @property
    def lambda_total(self) -> float:
        return float(self.lambda_i.sum())


@dataclass(frozen=True, slots=True, eq=False)
class UserDistributionSpec:
    """Approximate head-of-line user distribution for a given Type-1 delay d."""

    d: float
    rates: RateMatrix
    S: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.d) and self.d >= 0):
            raise ValueError(f"Type-1 delay must be finite and >= 0, got {self.d}")
        if self.S < 1:
            raise ValueError(f"S must be at least 1, got {self.S}")

    @classmethod
    def create(cls, d: float, rates: RateMatrix, S: int) -> Self:
        return cls(d=float(d), rates=rates, S=int(S))

    @property
    def lambda_i(self) -> NDArray[np.float64]:
        return self.rates.per_file

    @property
    def lambda_prime(self) -> NDArray[np.float64]:
        """Type-1 rate per file, lambda_i / (1 + lambda_i d)."""
        lam = self.lambda_i
        return lam / (1.0 + lam * self.d)

    @property
    def requester_probabilities(self) -> NDArray[np.float64]:
        """P[i, j] = lambda_ij / lambda_i, N x K; rows of zero-rate files are zero."""
        lam = self.lambda_i
        per_file_user = self.rates.rates.T
        with np.errstate(invalid="ignore", divide="ignore"):
            probs = np.where(lam[:, None] > 0, per_file_user / lam[:, None], 0.0)
        return probs

    @property
    def inclusion_probabilities(self) -> NDArray[np.float64]:
        """q[i, k] = 1 - exp(-lambda_ik d): user k also asked for file i before service."""
        return -np.expm1(-self.rates.rates.T * self.d)

    @property
    def positive_files(self) -> int:
        return int(np.count_nonzero(self.lambda_prime > 0))


@dataclass(frozen=True, slots=True)
class HeadOfLineSample:
    """One draw of the head-of-line files and their requester sets."""

    files: tuple[int, ...]
    user_sets: tuple[frozenset[int], ...]


@dataclass(frozen=True, slots=True)
class MomentEstimate:
    """Sample mean and mean square of service times."""

    ET: float
    ET2: float
    samples: int

    @classmethod
    def from_samples(cls, times: NDArray[np.float64]) -> Self:
        times = np.asarray(times, dtype=float)
        if times.size == 0:
            raise ValueError("Moment estimate needs at least one service time")
        return cls(ET=float(times.mean()), ET2=float(np.mean(times**2)), samples=int(times.size))


@dataclass(frozen=True, slots=True)
class ClassTheory:
    """Fixed point and mean sojourn of one queue (SMQ, or one DSMQ class)."""

    user_class: str
    d_star: float
    ET: float
    ET2: float
    mean_sojourn: float
    lambda_prime: float
    lambda_total: float


@dataclass(frozen=True, slots=True)
class TheoryResult:
    """Outcome of the SMQ or DSMQ theory loop.

    For DSMQ, ``classes`` holds the good and bad queues and ``mixed`` the
    coupled service moments (T_G, T2_G, T_B, T2_B) of the final pass.
    """

    classes: tuple[ClassTheory, ...]
    iterations: int
    d_history: tuple[tuple[float, ...], ...] = ()
    mixed: tuple[float, float, float, float] | None = None

    def for_class(self, user_class: str) -> ClassTheory:
        for result in self.classes:
            if result.user_class == user_class:
                return result
        raise KeyError(user_class)

    @property
    def d_star(self) -> tuple[float, ...]:
        return tuple(c.d_star for c in self.classes)

    @property
    def mean_sojourn(self) -> float:
        """Rate-weighted mean over classes with traffic."""
        weighted = [(c.lambda_total, c.mean_sojourn) for c in self.classes if c.lambda_total > 0]
        total = sum(w for w, _ in weighted)
        if total <= 0:
            return math.nan
        return sum(w * d for w, d in weighted) / total
