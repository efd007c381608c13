"""
KBlowup ExactSeq - Dimension bookkeeping for long exact sequences
"""
from kblowup.exactseq.les import DimensionValue, LESInstance, Slot, SlotState, sequence_from_dimensions
from kblowup.exactseq.solver import Deduction, HybridDiagram, SolveOutcome, require_known, solve, splice

__all__ = [
    "DimensionValue",
    "LESInstance",
    "Slot",
    "SlotState",
    "sequence_from_dimensions",
    "Deduction",
    "HybridDiagram",
    "SolveOutcome",
    "require_known",
    "solve",
    "splice",
]
