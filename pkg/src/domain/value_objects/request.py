"""Request value object - one (file, user) demand."""

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Request:
    """A user's request for a file, stamped with its arrival time.

    ``request_id`` distinguishes repeated requests of the same user for the same file.
    """

    file: int
    user: int
    t_arrival: float
    request_id: int = 0

    def __post_init__(self) -> None:
        if self.file < 0:
            raise ValueError(f"File index must be non-negative, got {self.file}")
        if self.user < 0:
            raise ValueError(f"User index must be non-negative, got {self.user}")
        if self.t_arrival < 0:
            raise ValueError(f"Arrival time must be non-negative, got {self.t_arrival}")

    def sojourn(self, t_complete: float) -> float:
        return t_complete - self.t_arrival
