"""
AVQITE trace log service.
"""

from collections import deque
from typing import Any, Iterable

TraceRecord = dict[str, Any]


class TraceLog:
    """
    Fixed-size buffer of per-step AVQITE records.

    Oldest records are dropped once ``capacity`` is reached; ``dropped``
    counts them so writers can flag truncated traces.
    """

    def __init__(self, capacity: int = 100_000) -> None:
        if capacity < 1:
            raise ValueError(f"Trace capacity must be >= 1, got {capacity}")
        self.capacity = capacity
        self.dropped = 0
        self._records: deque[TraceRecord] = deque(maxlen=capacity)

    def add(self, record: TraceRecord) -> None:
        if len(self._records) == self.capacity:
            self.dropped += 1
        self._records.append(record)

    def extend(self, records: Iterable[TraceRecord]) -> None:
        for record in records:
            self.add(record)

    def clear(self) -> None:
        self._records.clear()
        self.dropped = 0

    def latest(self) -> list[TraceRecord]:
        """All buffered records, oldest first."""
        return list(self._records)

    def __len__(self) -> int:
        return len(self._records)
