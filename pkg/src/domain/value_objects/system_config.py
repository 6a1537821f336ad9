"""SystemConfig value object - every scenario parameter of a MISO downlink run."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Any, Mapping

if TYPE_CHECKING:
    from typing_extensions import Self

import numpy as np


class Scheme(Enum):
    """Max-min-fair beamforming variants."""

    MMF = "MMF"
    MMF_SIC = "MMF-SIC"
    MMF_RS = "MMF-RS"


class QueueKind(Enum):
    """Queueing disciplines at the base station."""

    SMQ = "SMQ"
    DSMQ = "DSMQ"
    LOOPBACK = "LOOPBACK"
    TWO_Q_SIMULTANEOUS = "TWO_Q_SIMULTANEOUS"

    @property
    def is_dual(self) -> bool:
        """Whether the discipline keeps separate good/bad class queues."""
        return self in (QueueKind.DSMQ, QueueKind.TWO_Q_SIMULTANEOUS)


GOOD = "good"
BAD = "bad"
ALL = "all"


@dataclass(frozen=True, slots=True)
class SystemConfig:
    """Immutable scenario configuration.

    Units: F in bits, B in Hz, P and noise in linear power units, lambda_total in
    requests/second, r_eps in 1/seconds, r_thresh in bits/s/Hz. User indices are 0-based.
    Construction does not validate; use ``create`` (raises) or
    ``ConfigValidator.validate`` (reports).
    """

    L: int
    K: int
    N: int
    F: float = 100e6
    B: float = 100e6
    P: float = 10.0
    noise: tuple[float, ...] = ()
    S: int = 1
    gamma: float = 1.0
    lambda_total: float = 40.0
    channel_gains: tuple[float, ...] = ()
    good_user_set: frozenset[int] = field(default_factory=frozenset)
    C: int = 8
    r_eps: float = 0.01
    scheme: Scheme = Scheme.MMF
    queue_kind: QueueKind = QueueKind.SMQ
    r_thresh: float = 0.5

    def __post_init__(self) -> None:
        # Broadcast empty vectors to unit noise / unit gains and normalise container types
        noise = tuple(float(x) for x in self.noise) or (1.0,) * max(int(self.K), 0)
        gains = tuple(float(x) for x in self.channel_gains) or (1.0,) * max(int(self.K), 0)
        object.__setattr__(self, "noise", noise)
        object.__setattr__(self, "channel_gains", gains)
        object.__setattr__(self, "good_user_set", frozenset(int(k) for k in self.good_user_set))
        if not isinstance(self.scheme, Scheme):
            object.__setattr__(self, "scheme", Scheme(self.scheme))
        if not isinstance(self.queue_kind, QueueKind):
            object.__setattr__(self, "queue_kind", QueueKind(self.queue_kind))

    @classmethod
    def create(cls, **kwargs: Any) -> Self:
        """Build a configuration and raise ConfigValidationError if any invariant fails."""
        from src.domain.exceptions import ConfigValidationError
        from src.domain.services.config_validator import ConfigValidator

        config = cls(**kwargs)
        issues = ConfigValidator().validate(config)
        errors = [i for i in issues if i.severity == "error"]
        if errors:
            raise ConfigValidationError(errors)
        return config

    @classmethod
    def field_names(cls) -> tuple[str, ...]:
        return tuple(f.name for f in dataclasses.fields(cls))

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any]) -> Self:
        """Build from a config-file section, rejecting unknown keys.

        Accepts scalars for ``noise``/``channel_gains`` and the extra key
        ``channel_gains_db`` (per-user or scalar, in dB).
        """
        from src.domain.exceptions import ConfigValidationError
        from src.domain.services.config_validator import ValidationIssue

        known = set(cls.field_names()) | {"channel_gains_db"}
        unknown = sorted(set(values) - known)
        if unknown:
            raise ConfigValidationError(
                [ValidationIssue("error", key, "unknown configuration key") for key in unknown]
            )

        data = dict(values)
        K = int(data.get("K", 0))
        if "channel_gains_db" in data:
            if "channel_gains" in data:
                raise ConfigValidationError(
                    [
                        ValidationIssue(
                            "error",
                            "channel_gains_db",
                            "give either channel_gains or channel_gains_db, not both",
                        )
                    ]
                )
            db = np.broadcast_to(np.asarray(data.pop("channel_gains_db"), dtype=float), (K,))
            data["channel_gains"] = tuple(10.0 ** (db / 10.0))
        for key in ("noise", "channel_gains"):
            if key in data and np.ndim(data[key]) == 0:
                data[key] = (float(data[key]),) * K
        if "good_user_set" in data:
            data["good_user_set"] = frozenset(data["good_user_set"] or ())
        for key in ("L", "K", "N", "S", "C"):
            if key in data:
                data[key] = int(data[key])
        return cls(**data)

    @classmethod
    def heterogeneous(
        cls,
        L: int,
        K: int,
        N: int,
        n_good: int,
        good_gain_db: float = 0.0,
        bad_gain_db: float = -15.0,
        **kwargs: Any,
    ) -> Self:
        """Users 0..n_good-1 are good-channel users, the rest undergo deeper fading."""
        gains_db = np.where(np.arange(K) < n_good, good_gain_db, bad_gain_db)
        return cls(
            L=L,
            K=K,
            N=N,
            channel_gains=tuple(10.0 ** (gains_db / 10.0)),
            good_user_set=frozenset(range(n_good)),
            **kwargs,
        )

    @classmethod
    def two_class_split(cls, L: int, K: int, N: int, **kwargs: Any) -> Self:
        """Homogeneous users split in halves, for two-queue comparisons (C=2 by default)."""
        kwargs.setdefault("C", 2)
        return cls(L=L, K=K, N=N, good_user_set=frozenset(range(K // 2)), **kwargs)

    def replace(self, **changes: Any) -> Self:
        """Copy with ``changes``; uniform noise and gain vectors follow a change of K."""
        K = int(changes.get("K", self.K))
        if K != self.K:
            for name in ("noise", "channel_gains"):
                values = getattr(self, name)
                if name not in changes and len(set(values)) == 1:
                    changes[name] = (values[0],) * K
        return dataclasses.replace(self, **changes)

    @property
    def bad_user_set(self) -> frozenset[int]:
        return frozenset(range(self.K)) - self.good_user_set

    def user_class(self, user: int) -> str:
        """Class label used in reports: good/bad when a split is configured, else all."""
        if not self.good_user_set:
            return ALL
        return GOOD if user in self.good_user_set else BAD

    @property
    def file_service_scale(self) -> float:
        """F/B, seconds per unit of spectral efficiency."""
        return self.F / self.B

    def service_time_for_rate(self, rate_bps_hz: float) -> float:
        """Time to deliver one file at the given symmetric spectral efficiency."""
        if rate_bps_hz <= 0.0:
            return float("inf")
        return self.F / (self.B * rate_bps_hz)
