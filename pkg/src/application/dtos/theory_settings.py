"""TheorySettings DTO."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Mapping

if TYPE_CHECKING:
    from typing_extensions import Self


@dataclass(frozen=True, slots=True)
class TheorySettings:
    """Knobs of the iterative theory.

    Attributes:
        eps: Outer stopping threshold on the change of d (seconds)
        M: Service-time samples per moment estimate (SMQ)
        M1: Samples for the good-class queue (DSMQ)
        M2: Samples for the bad-class queue (DSMQ)
        max_outer: Outer iteration cap
        tol: Inner fixed-point tolerance (seconds)
        seed: Base seed; outer pass n of class c draws from default_rng([seed, n, c])
    """

    eps: float = 0.1
    M: int = 500
    M1: int = 500
    M2: int = 500
    max_outer: int = 20
    tol: float = 1e-9
    seed: int = 0

    def __post_init__(self) -> None:
        if self.eps <= 0 or self.tol <= 0:
            raise ValueError("eps and tol must be > 0")
        if min(self.M, self.M1, self.M2) < 1:
            raise ValueError("Sample counts M, M1, M2 must be at least 1")
        if self.max_outer < 1:
            raise ValueError(f"max_outer must be at least 1, got {self.max_outer}")

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any] | None) -> Self:
        values = dict(values or {})
        unknown = sorted(set(values) - set(cls.__dataclass_fields__))
        if unknown:
            raise ValueError(f"Unknown theory settings: {', '.join(unknown)}")
        return cls(**values)
