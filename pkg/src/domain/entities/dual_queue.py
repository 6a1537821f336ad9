"""DualQueueState entity - good/bad class multicast queues sharing one server."""

from __future__ import annotations

from dataclasses import dataclass

from ..value_objects.request import Request
from .multicast_queue import MulticastQueue, QueueEntry


@dataclass
class DualQueueState:
    """Two SMQs split by user channel class, plus the completed-service counter."""

    good_queue: MulticastQueue
    bad_queue: MulticastQueue
    good_users: frozenset[int]
    service_counter: int = 0

    @classmethod
    def create(cls, N: int, good_users: frozenset[int]) -> DualQueueState:
        return cls(
            good_queue=MulticastQueue(N=N, name="SMQ-G"),
            bad_queue=MulticastQueue(N=N, name="SMQ-B"),
            good_users=frozenset(good_users),
        )

    def queue_for(self, user: int) -> MulticastQueue:
        return self.good_queue if user in self.good_users else self.bad_queue

    def enqueue(self, request: Request) -> QueueEntry:
        """Route a request to its class queue."""
        return self.queue_for(request.user).enqueue(request)

    @property
    def is_empty(self) -> bool:
        return self.good_queue.is_empty and self.bad_queue.is_empty

    def record_service(self) -> None:
        """Count one completed service (a channel use)."""
        self.service_counter += 1
