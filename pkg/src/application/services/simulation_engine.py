"""SimulationEngine - discrete-event simulation of the base-station queue and server."""

from __future__ import annotations

import heapq
import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np

from src.application.dtos.service_outcome import ServiceOutcome
from src.application.dtos.simulation_request import SimulationRequest
from src.application.ports.i_beamformer import IBeamformer
from src.application.ports.i_service_time_sampler import IServiceTimeSampler
from src.domain.entities.dual_queue import DualQueueState
from src.domain.entities.multicast_queue import MulticastQueue, QueueEntry
from src.domain.exceptions import SimulationError
from src.domain.services.channel_sampler import sample_channel
from src.domain.services.popularity import build_rate_matrix
from src.domain.services.scheduling import (
    LoopbackDecision,
    QueueChoice,
    dsmq_pick,
    loopback_filter,
    two_q_pick,
)
from src.domain.value_objects.channel import ChannelStatistics
from src.domain.value_objects.delay_report import DelayReport, DelaySample
from src.domain.value_objects.event import Event, EventKind
from src.domain.value_objects.request import Request
from src.domain.value_objects.service_groups import ServiceGroups
from src.domain.value_objects.system_config import ALL, BAD, GOOD, QueueKind, SystemConfig

logger = logging.getLogger(__name__)

EventObserver = Callable[[Event, Sequence[MulticastQueue]], None]


def _class_queue(dual: DualQueueState, choice: QueueChoice) -> MulticastQueue:
    return dual.good_queue if choice is QueueChoice.GOOD else dual.bad_queue


@dataclass
class _ActiveService:
    """Transmission currently occupying the server."""

    entries: list[tuple[MulticastQueue, QueueEntry]]
    outcome: ServiceOutcome
    loopback: LoopbackDecision | None = None


@dataclass
class _RunState:
    """Mutable state of one replication, owned by its event loop."""

    config: SystemConfig
    arrival_rng: np.random.Generator
    service_rng: np.random.Generator
    cumulative: np.ndarray
    queue: MulticastQueue | None = None
    dual: DualQueueState | None = None
    events: list[Event] = field(default_factory=list)
    now: float = 0.0
    next_seq: int = 0
    next_request_id: int = 0
    arrivals: int = 0
    arrivals_open: bool = True
    active: _ActiveService | None = None
    completed: int = 0
    samples: list[DelaySample] = field(default_factory=list)
    service_times: list[float] = field(default_factory=list)
    redraws: list[int] = field(default_factory=list)

    def push(self, time: float, kind: EventKind, payload: object = None) -> None:
        heapq.heappush(self.events, Event(time, kind, self.next_seq, payload))
        self.next_seq += 1

    @property
    def queues(self) -> tuple[MulticastQueue, ...]:
        if self.dual is not None:
            return (self.dual.good_queue, self.dual.bad_queue)
        assert self.queue is not None
        return (self.queue,)

    @property
    def waiting(self) -> bool:
        return any(not q.is_empty for q in self.queues)


class SimulationEngine:
    """Non-preemptive single server fed by merged Poisson arrivals.

    Arrivals form one Poisson stream of rate lambda_total, split over (file, user)
    pairs in proportion to the rate matrix. Each service draws a fresh channel
    and solves the configured beamforming scheme; the queue discipline decides
    which entries are transmitted.
    """

    def __init__(
        self, sampler: IServiceTimeSampler, beamformer: IBeamformer | None = None
    ) -> None:
        """Initialize engine.

        Args:
            sampler: Service-time sampler (beamforming with the redraw rule)
            beamformer: MMF solver used directly by Loopback, which has no redraw rule
        """
        self.sampler = sampler
        self.beamformer = beamformer

    def run(
        self, request: SimulationRequest, on_event: EventObserver | None = None
    ) -> DelayReport:
        """Simulate until ``request.n_services`` services have completed.

        Args:
            request: Configuration, service counts, seed and drain flag
            on_event: Optional callback invoked after every processed event

        Returns:
            Report over the services after the warmup window

        Raises:
            ValueError: If the configuration carries no traffic
            RedrawLimitExceeded: If a service never reaches the minimum rate
        """
        config = request.config
        if config.queue_kind is QueueKind.LOOPBACK and self.beamformer is None:
            raise ValueError("Loopback needs a beamformer")
        rates = build_rate_matrix(config)
        if rates.total <= 0:
            raise ValueError("lambda_total must be > 0 to simulate")

        arrival_seq, service_seq = np.random.SeedSequence(request.seed).spawn(2)
        state = _RunState(
            config=config,
            arrival_rng=np.random.default_rng(arrival_seq),
            service_rng=np.random.default_rng(service_seq),
            cumulative=np.cumsum(rates.rates.ravel()) / rates.total,
        )
        if config.queue_kind.is_dual:
            state.dual = DualQueueState.create(config.N, config.good_user_set)
        else:
            state.queue = MulticastQueue(N=config.N)

        warmup = request.warmup
        logger.debug(
            f"Simulating {config.queue_kind.value}/{config.scheme.value} S={config.S} "
            f"lambda={config.lambda_total} seed={request.seed}: "
            f"{request.n_services} services, warmup {warmup}"
        )

        self._schedule_arrival(state)
        while state.events:
            event = heapq.heappop(state.events)
            if event.time < state.now:
                raise SimulationError(f"Event time went backwards: {event.time} < {state.now}")
            state.now = event.time

            if event.kind is EventKind.ARRIVAL:
                if not state.arrivals_open:
                    continue
                self._on_arrival(state)
            else:
                self._on_completion(state, warmup)
                if state.completed >= request.n_services:
                    if not request.drain:
                        break
                    state.arrivals_open = False

            if state.active is None and state.waiting:
                self._start_service(state)
            if on_event is not None:
                on_event(event, state.queues)

        classes = (ALL, GOOD, BAD) if config.good_user_set else (ALL,)
        return DelayReport(
            samples=tuple(state.samples),
            service_times=tuple(state.service_times),
            redraw_counts=tuple(state.redraws),
            n_services=len(state.service_times),
            arrivals=state.arrivals,
            seed=request.seed,
            classes=classes,
        )

    def _schedule_arrival(self, state: _RunState) -> None:
        gap = state.arrival_rng.exponential(1.0 / state.config.lambda_total)
        state.push(state.now + gap, EventKind.ARRIVAL)

    def _on_arrival(self, state: _RunState) -> None:
        config = state.config
        index = int(np.searchsorted(state.cumulative, state.arrival_rng.random(), side="right"))
        index = min(index, state.cumulative.size - 1)
        user, file = divmod(index, config.N)
        request = Request(
            file=file, user=user, t_arrival=state.now, request_id=state.next_request_id
        )
        state.next_request_id += 1
        state.arrivals += 1
        if state.dual is not None:
            state.dual.enqueue(request)
        else:
            assert state.queue is not None
            state.queue.enqueue(request)
        self._schedule_arrival(state)

    def _select(self, state: _RunState) -> list[tuple[MulticastQueue, QueueEntry]]:
        config = state.config
        kind = config.queue_kind
        if kind is QueueKind.DSMQ:
            assert state.dual is not None
            choice = dsmq_pick(state.dual, config.C)
            if choice is QueueChoice.IDLE:
                return []
            queue = _class_queue(state.dual, choice)
            return [(queue, e) for e in queue.select_service(config.S)]
        if kind is QueueKind.TWO_Q_SIMULTANEOUS:
            assert state.dual is not None
            selected = []
            for choice, _ in two_q_pick(state.dual):
                queue = _class_queue(state.dual, choice)
                selected.extend((queue, e) for e in queue.select_service(1))
            return selected
        assert state.queue is not None
        return [(state.queue, e) for e in state.queue.select_service(config.S)]

    def _start_service(self, state: _RunState) -> None:
        selected = self._select(state)
        if not selected:
            return
        entries = [e for _, e in selected]
        groups = ServiceGroups.from_entries(entries)
        decision = None
        if state.config.queue_kind is QueueKind.LOOPBACK:
            outcome, decision = self._loopback_service(state, groups, entries)
        else:
            outcome = self.sampler.sample(groups, state.config, state.service_rng)
        state.active = _ActiveService(entries=selected, outcome=outcome, loopback=decision)
        state.push(state.now + outcome.total_time, EventKind.SERVICE_COMPLETE)

    def _loopback_service(
        self, state: _RunState, groups: ServiceGroups, entries: list[QueueEntry]
    ) -> tuple[ServiceOutcome, LoopbackDecision]:
        """One MMF solve; users below r_thresh are looped, the rest served at r_thresh."""
        config = state.config
        assert self.beamformer is not None
        stats = ChannelStatistics(np.asarray(config.channel_gains))
        H = sample_channel(stats, config.L, state.service_rng)
        solution = self.beamformer.solve_mmf(groups, H, config, state.service_rng)
        decision = loopback_filter(entries, solution.per_user_rates, config.r_thresh)
        outcome = ServiceOutcome(
            solution=solution, total_time=config.service_time_for_rate(config.r_thresh)
        )
        return outcome, decision

    def _on_completion(self, state: _RunState, warmup: int) -> None:
        active = state.active
        if active is None:
            raise SimulationError("Service completion without an active service")
        state.active = None

        completed: list[tuple[Request, float]] = []
        for queue in {id(q): q for q, _ in active.entries}.values():
            mine = [e for q, e in active.entries if q is queue]
            completed.extend(queue.complete_service(mine, state.now))

        if active.loopback is not None:
            queue = active.entries[0][0]
            queue.enqueue_all(active.loopback.looped)
            served_users = active.loopback.served_users
            completed = [(r, d) for r, d in completed if r.user in served_users]
            if active.loopback.looped:
                logger.debug(f"Looped back {len(active.loopback.looped)} request(s)")

        if state.dual is not None:
            state.dual.record_service()

        index = state.completed
        state.completed += 1
        if index < warmup:
            return
        config = state.config
        for request, sojourn in completed:
            state.samples.append(
                DelaySample(
                    service_index=index - warmup,
                    user=request.user,
                    file=request.file,
                    user_class=config.user_class(request.user),
                    sojourn=sojourn,
                )
            )
        state.service_times.append(active.outcome.total_time)
        state.redraws.append(active.outcome.redraws)
