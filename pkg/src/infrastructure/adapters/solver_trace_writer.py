"""Solver Trace Writer - one JSON line per beamforming solve."""

from __future__ import annotations

import json
import logging
import threading
from pathlib import Path
from typing import Any, Mapping

logger = logging.getLogger(__name__)


class SolverTraceWriter:
    """Appends solve records to a JSON-lines file; safe to share between worker threads."""

    def __init__(self, path: str) -> None:
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()
        logger.info(f"Writing solver trace to {self.path}")

    def write(self, record: Mapping[str, Any]) -> None:
        line = json.dumps(record, sort_keys=True, default=float)
        with self._lock:
            with open(self.path, "a", encoding="utf-8") as f:
                f.write(line + "\n")
