"""Domain entities - stateful queues owned by the simulation loop."""

from .dual_queue import DualQueueState
from .multicast_queue import MulticastQueue, QueueEntry

__all__ = ["MulticastQueue", "QueueEntry", "DualQueueState"]
