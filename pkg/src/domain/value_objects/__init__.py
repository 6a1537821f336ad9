"""Value objects - Immutable objects defined by their attributes."""

from .beamformer_solution import BeamformerSolution
from .channel import ChannelMatrix, ChannelStatistics
from .delay_report import DelayReport, DelaySample
from .event import Event, EventKind
from .rate_matrix import RateMatrix
from .request import Request
from .service_groups import MAX_STREAMS, ServiceGroups
from .solver_settings import SolverSettings
from .system_config import ALL, BAD, GOOD, QueueKind, Scheme, SystemConfig
from .theory import (
    ClassTheory,
    FixedPointInput,
    HeadOfLineSample,
    MomentEstimate,
    TheoryResult,
    UserDistributionSpec,
)

__all__ = [
    "ALL",
    "BAD",
    "GOOD",
    "MAX_STREAMS",
    "BeamformerSolution",
    "ChannelMatrix",
    "ChannelStatistics",
    "ClassTheory",
    "DelayReport",
    "DelaySample",
    "Event",
    "EventKind",
    "FixedPointInput",
    "HeadOfLineSample",
    "MomentEstimate",
    "QueueKind",
    "RateMatrix",
    "Request",
    "Scheme",
    "ServiceGroups",
    "SolverSettings",
    "SystemConfig",
    "TheoryResult",
    "UserDistributionSpec",
]
