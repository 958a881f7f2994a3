"""Resource budgets for the long-running searches.

A Budget caps memory, wall time and worker count; a BudgetMeter tracks usage
against it. Memory accounting is explicit (we charge the big arrays and
frontiers we allocate), not a process-wide RSS probe, so the same inputs
always hit the same limits.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field

_ENV_MB = "FACTORSET_BUDGET_MB"
_DEFAULT_MB = 2048


class BudgetExceededError(RuntimeError):
    """A search ran out of memory or time budget.

    Carries a ``progress`` dict with whatever statistics the search had
    accumulated when it gave up (completed shards, frontier depth, ...).
    """

    def __init__(self, message: str, progress: dict | None = None):
        super().__init__(message)
        self.progress = dict(progress or {})


@dataclass(frozen=True)
class Budget:
    """Resource limits: bytes of working memory, wall seconds, workers."""

    max_memory_bytes: int = _DEFAULT_MB << 20
    max_seconds: float | None = None
    workers: int = 1

    def __post_init__(self):
        if self.max_memory_bytes <= 0:
            raise ValueError("max_memory_bytes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    @classmethod
    def default(cls, workers: int = 1) -> "Budget":
        mb = int(os.environ.get(_ENV_MB, _DEFAULT_MB))
        return cls(max_memory_bytes=mb << 20, workers=workers)


@dataclass
class BudgetMeter:
    """Tracks charged memory and elapsed time against a Budget."""

    budget: Budget
    charged_bytes: int = 0
    started: float = field(default_factory=time.monotonic)
    progress: dict = field(default_factory=dict)

    def charge_memory(self, nbytes: int, what: str = "") -> None:
        self.charged_bytes += nbytes
        if self.charged_bytes > self.budget.max_memory_bytes:
            raise BudgetExceededError(
                f"memory budget exceeded ({self.charged_bytes} > "
                f"{self.budget.max_memory_bytes} bytes){' at ' + what if what else ''}",
                self.stats(),
            )

    def release_memory(self, nbytes: int) -> None:
        self.charged_bytes = max(0, self.charged_bytes - nbytes)

    def check_time(self, what: str = "") -> None:
        if self.budget.max_seconds is None:
            return
        elapsed = time.monotonic() - self.started
        if elapsed > self.budget.max_seconds:
            raise BudgetExceededError(
                f"time budget exceeded ({elapsed:.1f}s > {self.budget.max_seconds}s)"
                f"{' at ' + what if what else ''}",
                self.stats(),
            )

    def note(self, **kwargs) -> None:
        self.progress.update(kwargs)

    def stats(self) -> dict:
        out = dict(self.progress)
        out["charged_bytes"] = self.charged_bytes
        out["elapsed_seconds"] = round(time.monotonic() - self.started, 3)
        return out
