"""
KBlowup ExactSeq - Solver and Splicing

Rules applied to a fixed point:
    R1  a slot between two zeros is zero
    R2  0 -> A -> B -> 0 gives dim A = dim B
    R3  0 -> A -> B -> C -> 0 gives dim B = dim A + dim C
    R4  any zero-flanked window has alternating sum 0 (solves one unknown)
    R5  maps leaving the first slot / entering the last slot of a window
        are injective / surjective (logged)
Symbolic values take part in R1 and R2 only.
"""
from dataclasses import dataclass, field
from typing import Mapping

from loguru import logger

from kblowup.core.exceptions import InconsistentSequenceError, SpliceConflictError, ValidationError
from kblowup.exactseq.les import DimensionValue, LESInstance


@dataclass(frozen=True)
class Deduction:
    rule: str
    slot: str
    result: str
    window: tuple[str, ...] = ()

    def __str__(self) -> str:
        where = f" in [{', '.join(self.window)}]" if self.window else ""
        return f"{self.rule}: {self.slot} = {self.result}{where}"


@dataclass
class SolveOutcome:
    instance: LESInstance
    log: list[Deduction] = field(default_factory=list)


def _windows(les: LESInstance) -> list[list[int]]:
    """Index runs strictly between zero slots (wrapping when cyclic)."""
    n = len(les.slots)
    zeros = [k for k, s in enumerate(les.slots) if s.value.is_zero]
    if not les.cyclic:
        return [list(range(a + 1, b)) for a, b in zip(zeros, zeros[1:])]
    if not zeros:
        return [list(range(n))] if n % 2 == 0 and n else []
    runs = []
    for k, a in enumerate(zeros):
        b = zeros[(k + 1) % len(zeros)]
        stop = b if b > a else b + n
        runs.append([j % n for j in range(a + 1, stop)])
    return runs


def _rule_name(length: int) -> str:
    return {1: "R1", 2: "R2", 3: "R3"}.get(length, "R4")


def _solve_window(les: LESInstance, window: list[int], log: list[Deduction]) -> bool:
    labels = tuple(les.slots[k].label for k in window)
    values = [les.slots[k].value for k in window]
    if not window:
        return False

    if len(window) == 1:
        value = values[0]
        if value.is_unknown:
            les.set(labels[0], DimensionValue.zero(), "R1")
            log.append(Deduction("R1", labels[0], "0", labels))
            return True
        if not value.is_zero:
            raise InconsistentSequenceError(f"{labels[0]} sits between zeros but is {value}", labels)
        return False

    if any(v.is_symbolic for v in values):
        if len(window) == 2:
            a, b = values
            if a.is_symbolic and b.is_unknown:
                les.set(labels[1], a, "R2")
                log.append(Deduction("R2", labels[1], str(a), labels))
                return True
            if b.is_symbolic and a.is_unknown:
                les.set(labels[0], b, "R2")
                log.append(Deduction("R2", labels[0], str(b), labels))
                return True
            if a != b and not (a.is_unknown or b.is_unknown):
                raise InconsistentSequenceError(f"isomorphic slots {labels} disagree: {a} vs {b}", labels)
        return False

    unknown = [j for j, v in enumerate(values) if v.is_unknown]
    if not unknown:
        total = sum((-1) ** j * v.value for j, v in enumerate(values))
        if total != 0:
            raise InconsistentSequenceError(
                f"alternating sum {total} != 0 over [{', '.join(labels)}]", labels
            )
        return False
    if len(unknown) > 1:
        return False

    j = unknown[0]
    rest = sum((-1) ** k * v.value for k, v in enumerate(values) if k != j)
    solved = -rest * (-1) ** j
    if solved < 0:
        raise InconsistentSequenceError(
            f"exactness forces dim {labels[j]} = {solved} < 0", labels
        )
    rule = _rule_name(len(window))
    les.set(labels[j], DimensionValue.known(solved), rule)
    log.append(Deduction(rule, labels[j], str(solved), labels))
    return True


def _annotate(les: LESInstance, window: list[int], seen: set, log: list[Deduction]) -> None:
    n = len(les.slots)
    if len(window) < 2:
        return
    first, last = window[0], window[-1]
    injective = (les.slots[first].label, les.slots[(first + 1) % n].label)
    surjective = (les.slots[(last - 1) % n].label, les.slots[last].label)
    for kind, (src, dst) in (("injective", injective), ("surjective", surjective)):
        key = (kind, src, dst)
        if key in seen:
            continue
        seen.add(key)
        log.append(Deduction("R5", f"{src} -> {dst}", kind))
        logger.info(f"R5: map {src} -> {dst} is {kind}")


def solve(les: LESInstance) -> SolveOutcome:
    """
    Fixed-point dimension deduction; never guesses.

    Raises:
        InconsistentSequenceError: with the offending window
    """
    work = les.copy()
    log: list[Deduction] = []
    changed = True
    while changed:
        changed = False
        for window in _windows(work):
            if _solve_window(work, window, log):
                changed = True
                break
    seen: set = set()
    has_zero = any(s.value.is_zero for s in work.slots)
    if has_zero:
        for window in _windows(work):
            _annotate(work, window, seen, log)
    for entry in log:
        if entry.rule != "R5":
            logger.info(f"{work.name or 'sequence'}: {entry}")
    return SolveOutcome(instance=work, log=log)


@dataclass
class HybridDiagram:
    """Two exact sequences glued along shared terms."""
    first: LESInstance
    second: LESInstance
    correspondence: dict[str, str]
    log: list[str] = field(default_factory=list)


def splice(first: LESInstance, second: LESInstance, shared: Mapping[str, str]) -> HybridDiagram:
    """
    Propagate states across shared slots and re-solve until nothing changes.

    Raises:
        SpliceConflictError: if a shared pair holds two different settled values
    """
    for a_label, b_label in shared.items():
        first.index(a_label)
        second.index(b_label)
    log: list[str] = []
    left = solve(first)
    right = solve(second)
    log += [f"{first.name}: {d}" for d in left.log]
    log += [f"{second.name}: {d}" for d in right.log]
    a, b = left.instance, right.instance

    while True:
        moved = False
        for a_label, b_label in shared.items():
            va, vb = a.value(a_label), b.value(b_label)
            if not va.is_unknown and not vb.is_unknown:
                if va != vb:
                    raise SpliceConflictError(f"{a_label} = {va} but {b_label} = {vb}")
                continue
            if va.is_unknown and not vb.is_unknown:
                a.set(a_label, vb, f"splice from {b_label}")
                log.append(f"splice: {a_label} = {vb} from {b_label}")
                moved = True
            elif vb.is_unknown and not va.is_unknown:
                b.set(b_label, va, f"splice from {a_label}")
                log.append(f"splice: {b_label} = {va} from {a_label}")
                moved = True
        if not moved:
            break
        left, right = solve(a), solve(b)
        log += [f"{first.name}: {d}" for d in left.log if d.rule != "R5"]
        log += [f"{second.name}: {d}" for d in right.log if d.rule != "R5"]
        a, b = left.instance, right.instance
    return HybridDiagram(first=a, second=b, correspondence=dict(shared), log=log)


def require_known(les: LESInstance, label: str) -> int:
    value = les.value(label)
    if not value.is_finite:
        raise ValidationError(f"{label} is not determined ({value})")
    return value.value
