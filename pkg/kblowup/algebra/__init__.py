"""
KBlowup Algebra - Graded presentations, Rees algebras, tangent cones
"""
from kblowup.algebra.graded import (
    GradedAlgebraPresentation,
    IsomorphismCheck,
    graded_isomorphism_check,
)
from kblowup.algebra.rees import (
    FilteredDeformationReport,
    assoc_graded,
    filtered_deformation_report,
    rees_presentation,
    tangent_cone_at_origin,
)

__all__ = [
    "GradedAlgebraPresentation",
    "IsomorphismCheck",
    "graded_isomorphism_check",
    "FilteredDeformationReport",
    "assoc_graded",
    "filtered_deformation_report",
    "rees_presentation",
    "tangent_cone_at_origin",
]
