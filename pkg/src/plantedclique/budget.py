"""Cooperative work and wall-clock limits checked inside attack loops."""

from __future__ import annotations

import time
from dataclasses import dataclass


class BudgetExceeded(Exception):
    def __init__(self, reason: str, steps: int):
        super().__init__(f"{reason} budget exceeded after {steps} steps")
        self.reason = reason
        self.steps = steps


@dataclass
class Budget:
    seconds: float | None = None
    max_steps: int | None = None
    steps: int = 0

    def __post_init__(self) -> None:
        self._deadline = None if self.seconds is None else time.monotonic() + self.seconds

    def charge(self, n: int = 1) -> None:
        self.steps += n
        if self.max_steps is not None and self.steps > self.max_steps:
            raise BudgetExceeded("step", self.steps)
        if self._deadline is not None and time.monotonic() > self._deadline:
            raise BudgetExceeded("time", self.steps)

    def check(self) -> None:
        self.charge(0)


UNLIMITED = None
