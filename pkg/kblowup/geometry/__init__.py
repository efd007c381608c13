"""
KBlowup Geometry - Smoothness and blowup squares
"""
from kblowup.geometry.blowup import (
    AffineChart,
    BlowupSquare,
    ChartCover,
    blowup_square,
    proj_charts,
    single_chart_cover,
)
from kblowup.geometry.smoothness import (
    SingularityVerdict,
    is_smooth,
    isolated_singularity_at_origin,
    jacobian_matrix,
    singular_locus,
)

__all__ = [
    "AffineChart",
    "BlowupSquare",
    "ChartCover",
    "blowup_square",
    "proj_charts",
    "single_chart_cover",
    "SingularityVerdict",
    "is_smooth",
    "isolated_singularity_at_origin",
    "jacobian_matrix",
    "singular_locus",
]
