"""Event value object for the discrete-event loop."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Any


class EventKind(IntEnum):
    """Completions sort before arrivals at equal time so the freed server is seen by the arrival."""

    SERVICE_COMPLETE = 0
    ARRIVAL = 1


@dataclass(frozen=True, slots=True, order=True)
class Event:
    """Scheduled event, ordered by (time, kind, seq)."""

    time: float
    kind: EventKind
    seq: int
    payload: Any = field(default=None, compare=False)
