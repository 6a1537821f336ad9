"""Queue-selection rules for DSMQ, Loopback and 2Q-Simultaneous."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

from ..entities.dual_queue import DualQueueState
from ..entities.multicast_queue import QueueEntry
from ..exceptions import QueueStateError
from ..value_objects.request import Request


class QueueChoice(Enum):
    GOOD = "good"
    BAD = "bad"
    IDLE = "idle"


def dsmq_pick(state: DualQueueState, C: int) -> QueueChoice:
    """E-limited choice: SMQ-B gets every C-th service, or any service while SMQ-G is empty.

    Args:
        state: Both class queues and the completed-service counter
        C: Cycle length (>= 2)

    Returns:
        Queue to serve next, or IDLE when both are empty
    """
    if C < 2:
        raise ValueError(f"C must be >= 2, got {C}")
    good_waiting = not state.good_queue.is_empty
    bad_waiting = not state.bad_queue.is_empty
    if bad_waiting and state.service_counter % C == C - 1:
        return QueueChoice.BAD
    if good_waiting:
        return QueueChoice.GOOD
    if bad_waiting:
        return QueueChoice.BAD
    return QueueChoice.IDLE


@dataclass(frozen=True, slots=True)
class LoopbackDecision:
    """Split of one Loopback transmission into served and looped requests."""

    served_users: frozenset[int]
    served: tuple[Request, ...]
    looped: tuple[Request, ...]


def loopback_filter(
    entries: Sequence[QueueEntry], per_user_rates: Mapping[int, float], r_thresh: float
) -> LoopbackDecision:
    """Users whose achieved rate reaches ``r_thresh`` are served; the others loop back.

    Looped requests keep their original arrival times.
    """
    served_users = frozenset(
        user
        for entry in entries
        for user in entry.users
        if per_user_rates.get(user, 0.0) >= r_thresh
    )
    served: list[Request] = []
    looped: list[Request] = []
    for entry in entries:
        for request in entry.requests:
            (served if request.user in served_users else looped).append(request)
    return LoopbackDecision(served_users=served_users, served=tuple(served), looped=tuple(looped))


def two_q_pick(state: DualQueueState) -> list[tuple[QueueChoice, QueueEntry]]:
    """Head-of-line entry of each nonempty class queue, good first.

    Raises:
        QueueStateError: If both queues are empty
    """
    heads = []
    for choice, queue in ((QueueChoice.GOOD, state.good_queue), (QueueChoice.BAD, state.bad_queue)):
        head = queue.head()
        if head is not None:
            heads.append((choice, head))
    if not heads:
        raise QueueStateError("2Q-Simultaneous: both class queues are empty")
    return heads
