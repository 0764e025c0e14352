"""Injectable time sources so expiry behaviour is testable to the second."""

from __future__ import annotations

import time


class Clock:
    def now(self) -> int:
        """Current time as integer seconds UTC."""
        raise NotImplementedError


class SystemClock(Clock):
    def now(self) -> int:
        return int(time.time())


class ManualClock(Clock):
    """Fixed clock advanced explicitly by tests."""

    def __init__(self, start: int = 1_700_000_000):
        self._now = start

    def now(self) -> int:
        return self._now

    def advance(self, seconds: int) -> None:
        self._now += seconds

    def set(self, timestamp: int) -> None:
        self._now = timestamp
