"""
KBlowup KTheory - Main sequence and low-degree K~ conclusions
"""
from kblowup.ktheory.main_theorem import (
    HypothesisReport,
    KTildeLowDegree,
    MainTheoremReport,
    ktilde_label,
    ktilde_low_degree,
    main_les,
    main_theorem,
    verify_hypotheses,
)

__all__ = [
    "HypothesisReport",
    "KTildeLowDegree",
    "MainTheoremReport",
    "ktilde_label",
    "ktilde_low_degree",
    "main_les",
    "main_theorem",
    "verify_hypotheses",
]
