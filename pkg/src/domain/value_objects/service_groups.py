"""ServiceGroups value object - files served together and who wants each of them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from typing_extensions import Self
    from src.domain.entities.multicast_queue import QueueEntry

MAX_STREAMS = 4


@dataclass(frozen=True, slots=True)
class ServiceGroups:
    """Streams of one transmission: stream s carries ``files[s]`` to ``user_sets[s]``.

    Files are normally distinct; two class queues may both hold the same file,
    in which case each queue entry is its own stream.
    """

    files: tuple[int, ...]
    user_sets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if not self.files:
            raise ValueError("A service needs at least one stream")
        if len(self.files) != len(self.user_sets):
            raise ValueError("files and user_sets must have the same length")
        if len(self.files) > MAX_STREAMS:
            raise ValueError(f"At most {MAX_STREAMS} simultaneous streams are supported")
        if any(not users for users in self.user_sets):
            raise ValueError("Every stream needs a nonempty user set")

    @classmethod
    def create(cls, files: Sequence[int], user_sets: Sequence[Sequence[int]]) -> Self:
        return cls(
            files=tuple(int(f) for f in files),
            user_sets=tuple(frozenset(int(u) for u in users) for users in user_sets),
        )

    @classmethod
    def from_entries(cls, entries: Sequence[QueueEntry]) -> Self:
        return cls(
            files=tuple(e.file for e in entries),
            user_sets=tuple(e.users for e in entries),
        )

    @property
    def n_streams(self) -> int:
        return len(self.files)

    @property
    def users(self) -> tuple[int, ...]:
        """Every served user, sorted."""
        return tuple(sorted(frozenset().union(*self.user_sets)))

    def streams_of(self, user: int) -> tuple[int, ...]:
        """Streams requested by ``user`` (its wanted set)."""
        return tuple(s for s, users in enumerate(self.user_sets) if user in users)

    def decoding_subsets(self, user: int) -> list[tuple[int, ...]]:
        """Nonempty subsets of the streams ``user`` decodes, singletons first.

        Singletons carry per-stream rate constraints; larger subsets carry the
        joint-decoding (multiple-access) constraints.
        """
        wanted = self.streams_of(user)
        return [s for size in range(1, len(wanted) + 1) for s in combinations(wanted, size)]

    def stream_subsets(self) -> list[tuple[int, ...]]:
        """Every nonempty subset of streams (the multiple-access region under SIC)."""
        n = self.n_streams
        return [s for size in range(1, n + 1) for s in combinations(range(n), size)]
