"""
KBlowup ExactSeq - Long Exact Sequence Instances

Dimension bookkeeping only: each slot holds a known dimension, zero,
unknown, or a symbolic (infinite) value. Zeros are explicit slots; the
two ends of a non-cyclic instance are open.
"""
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Optional, Sequence

from kblowup.core.exceptions import ValidationError


class SlotState(str, Enum):
    """Knowledge about one term of an exact sequence"""
    KNOWN = "known"
    ZERO = "zero"
    UNKNOWN = "unknown"
    SYMBOLIC = "symbolic"


@dataclass(frozen=True)
class DimensionValue:
    """known(d) | zero | unknown | symbolic(label)"""
    state: SlotState
    value: Optional[int] = None
    symbol: str = ""

    @classmethod
    def known(cls, d: int) -> "DimensionValue":
        if d < 0:
            raise ValidationError(f"negative dimension {d}")
        return cls(SlotState.ZERO, 0) if d == 0 else cls(SlotState.KNOWN, d)

    @classmethod
    def zero(cls) -> "DimensionValue":
        return cls(SlotState.ZERO, 0)

    @classmethod
    def unknown(cls) -> "DimensionValue":
        return cls(SlotState.UNKNOWN)

    @classmethod
    def symbolic(cls, symbol: str = "inf") -> "DimensionValue":
        return cls(SlotState.SYMBOLIC, None, symbol)

    @classmethod
    def direct_sum(cls, *values: "DimensionValue") -> "DimensionValue":
        """Dimension of a direct sum; unknown wins over symbolic."""
        if any(v.is_unknown for v in values):
            return cls.unknown()
        symbols = [v.symbol for v in values if v.is_symbolic]
        if symbols:
            return cls.symbolic(" + ".join(symbols))
        return cls.known(sum(v.value for v in values))

    @property
    def is_unknown(self) -> bool:
        return self.state is SlotState.UNKNOWN

    @property
    def is_zero(self) -> bool:
        return self.state is SlotState.ZERO

    @property
    def is_symbolic(self) -> bool:
        return self.state is SlotState.SYMBOLIC

    @property
    def is_finite(self) -> bool:
        return self.state in (SlotState.KNOWN, SlotState.ZERO)

    def __str__(self) -> str:
        if self.is_finite:
            return str(self.value)
        if self.is_symbolic:
            return f"sym({self.symbol})"
        return "?"


@dataclass(frozen=True)
class Slot:
    label: str
    value: DimensionValue
    provenance: str = ""


@dataclass
class LESInstance:
    """An exact sequence slots[0] -> slots[1] -> ... (wrapping around when cyclic)."""
    slots: list[Slot]
    cyclic: bool = False
    name: str = ""
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        labels = [s.label for s in self.slots]
        if len(set(labels)) != len(labels):
            raise ValidationError(f"duplicate slot labels in {self.name or 'sequence'}")

    @classmethod
    def build(
        cls,
        entries: Iterable[tuple[str, DimensionValue] | tuple[str, DimensionValue, str]],
        cyclic: bool = False,
        name: str = "",
    ) -> "LESInstance":
        slots = []
        for entry in entries:
            label, value, *rest = entry
            slots.append(Slot(label, value, rest[0] if rest else ""))
        return cls(slots=slots, cyclic=cyclic, name=name)

    @property
    def labels(self) -> list[str]:
        return [s.label for s in self.slots]

    def index(self, label: str) -> int:
        for k, slot in enumerate(self.slots):
            if slot.label == label:
                return k
        raise ValidationError(f"no slot {label!r} in {self.name or 'sequence'}")

    def value(self, label: str) -> DimensionValue:
        return self.slots[self.index(label)].value

    def set(self, label: str, value: DimensionValue, provenance: str) -> None:
        k = self.index(label)
        self.slots[k] = replace(self.slots[k], value=value, provenance=provenance)

    def copy(self) -> "LESInstance":
        return LESInstance(slots=list(self.slots), cyclic=self.cyclic, name=self.name, notes=list(self.notes))

    def states(self) -> list[DimensionValue]:
        return [s.value for s in self.slots]

    def to_records(self) -> list[dict]:
        return [
            {"label": s.label, "state": s.value.state.value, "value": str(s.value), "provenance": s.provenance}
            for s in self.slots
        ]


def sequence_from_dimensions(labels: Sequence[str], dims: Sequence[Optional[int]], **kwargs) -> LESInstance:
    """Convenience builder: None marks an unknown slot."""
    values = [DimensionValue.unknown() if d is None else DimensionValue.known(d) for d in dims]
    return LESInstance.build(zip(labels, values), **kwargs)
