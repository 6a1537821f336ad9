"""MulticastQueue entity - simple multicast queue with per-file request merging."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..exceptions import QueueStateError
from ..value_objects.request import Request

logger = logging.getLogger(__name__)


@dataclass
class QueueEntry:
    """Entry (n, L_n): one file and every request merged into it.

    Requests are kept individually so each one yields its own sojourn sample,
    while the served user set is the set of distinct requesters.
    """

    seq: int
    file: int
    requests: list[Request] = field(default_factory=list)
    in_service: bool = False

    @property
    def users(self) -> frozenset[int]:
        return frozenset(r.user for r in self.requests)

    @property
    def arrival_times(self) -> tuple[float, ...]:
        return tuple(r.t_arrival for r in self.requests)

    def __repr__(self) -> str:
        state = "S" if self.in_service else "W"
        return f"QueueEntry({state}#{self.seq}, file={self.file}, users={sorted(self.users)})"


@dataclass
class MulticastQueue:
    """FIFO queue of file entries where repeated requests merge into a waiting entry.

    At most one waiting (not in service) entry exists per file, so the waiting
    length never exceeds the library size N. A request for a file that is
    currently being transmitted starts a new tail entry.
    """

    N: int
    name: str = "SMQ"
    entries: list[QueueEntry] = field(default_factory=list)
    in_service: list[QueueEntry] = field(default_factory=list)
    _waiting_by_file: dict[int, QueueEntry] = field(default_factory=dict, init=False, repr=False)
    _next_seq: int = field(default=0, init=False, repr=False)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def is_empty(self) -> bool:
        return not self.entries

    def head(self) -> QueueEntry | None:
        return self.entries[0] if self.entries else None

    def enqueue(self, request: Request) -> QueueEntry:
        """Merge into the waiting entry for the file, or append a new tail entry.

        Args:
            request: Incoming request

        Returns:
            The entry that now holds the request
        """
        if not 0 <= request.file < self.N:
            raise QueueStateError(f"{self.name}: file {request.file} outside library of {self.N}")

        entry = self._waiting_by_file.get(request.file)
        if entry is None:
            entry = QueueEntry(seq=self._next_seq, file=request.file)
            self._next_seq += 1
            self.entries.append(entry)
            self._waiting_by_file[request.file] = entry
        entry.requests.append(request)
        return entry

    def enqueue_all(self, requests: Iterable[Request]) -> None:
        for request in requests:
            self.enqueue(request)

    def select_service(self, S: int) -> list[QueueEntry]:
        """Take the first min(len, S) waiting entries in FIFO order and mark them in service.

        Raises:
            QueueStateError: If the queue has no waiting entries
        """
        if S < 1:
            raise ValueError(f"S must be at least 1, got {S}")
        if not self.entries:
            raise QueueStateError(f"{self.name}: cannot select service from an empty queue")

        selected = self.entries[:S]
        del self.entries[:S]
        for entry in selected:
            entry.in_service = True
            del self._waiting_by_file[entry.file]
        self.in_service.extend(selected)
        return selected

    def complete_service(
        self, entries: Sequence[QueueEntry], t_complete: float
    ) -> list[tuple[Request, float]]:
        """Remove finished entries and emit one sojourn per tracked request.

        Raises:
            QueueStateError: If an entry is not currently in service here
        """
        for entry in entries:
            if not entry.in_service or not any(e is entry for e in self.in_service):
                raise QueueStateError(f"{self.name}: {entry!r} is not in service")

        samples: list[tuple[Request, float]] = []
        for entry in entries:
            self.in_service = [e for e in self.in_service if e is not entry]
            entry.in_service = False
            samples.extend((r, r.sojourn(t_complete)) for r in entry.requests)
        return samples

    def dump(self) -> str:
        """Line-oriented state dump: one line per entry, in-service entries first.

        Format: ``<W|S> <seq> file=<n> users=<u,...> arrivals=<t,...>``
        """
        lines = [f"# {self.name} waiting={len(self.entries)} in_service={len(self.in_service)}"]
        for state, group in (("S", self.in_service), ("W", self.entries)):
            for entry in group:
                users = ",".join(str(u) for u in sorted(entry.users))
                arrivals = ",".join(f"{t:.6f}" for t in entry.arrival_times)
                lines.append(
                    f"{state} {entry.seq} file={entry.file} users={users} arrivals={arrivals}"
                )
        return "\n".join(lines)
