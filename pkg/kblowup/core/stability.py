"""
KBlowup Core - Windowed Dimensions

Every infinite computation is run over an increasing window of bounds.
A value is reported together with its history and a stabilization flag.
"""
from dataclasses import dataclass, field

from kblowup.core.config import settings
from kblowup.core.exceptions import StabilizationError


def is_stable(history: list[int], runs: int | None = None) -> bool:
    """True when the last `runs` increments left the value unchanged."""
    runs = settings.STABILIZATION_RUNS if runs is None else runs
    if len(history) < runs + 1:
        return False
    tail = history[-(runs + 1):]
    return all(v == tail[-1] for v in tail)


@dataclass
class StabilizedDimension:
    """A dimension observed over a window of bounds."""
    value: int
    stable: bool
    history: list[int] = field(default_factory=list)
    bound: int = 0
    label: str = ""

    def require_stable(self) -> int:
        if not self.stable:
            raise StabilizationError(
                f"{self.label or 'dimension'} did not stabilize up to bound {self.bound}: "
                f"history {self.history}"
            )
        return self.value

    @property
    def growing(self) -> bool:
        """Strictly increasing over the tail of the window."""
        runs = settings.STABILIZATION_RUNS
        tail = self.history[-(runs + 1):]
        return len(tail) == runs + 1 and all(a < b for a, b in zip(tail, tail[1:]))

    @classmethod
    def exact(cls, value: int, label: str = "") -> "StabilizedDimension":
        return cls(value=value, stable=True, history=[value], label=label)
