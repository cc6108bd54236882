"""
Wall-clock timing for command and verification runs.
"""

import time
from typing import List


class Stopwatch:
    """Tracks elapsed time and named laps."""

    def __init__(self):
        self.start_time = time.perf_counter()
        self.laps: List[tuple] = []

    def lap(self, name: str) -> float:
        """
        Record a lap.

        Args:
            name: Label for the lap

        Returns:
            Seconds since the previous lap (or the start)
        """
        now = time.perf_counter()
        previous = self.laps[-1][1] if self.laps else self.start_time
        self.laps.append((name, now))
        return now - previous

    def elapsed(self) -> float:
        return time.perf_counter() - self.start_time
