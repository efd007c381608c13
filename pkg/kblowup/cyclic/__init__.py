"""
KBlowup Cyclic - Cyclic homology by bicomplex, Hodge formulas and blowup sequences
"""
from kblowup.cyclic.bicomplex import (
    CyclicBicomplex,
    CyclicTheory,
    TotalComplex,
    bicomplex_homology,
    sbi_dimension_check,
)
from kblowup.cyclic.fdalgebra import FDAlgebra
from kblowup.cyclic.hodge import (
    HodgeTable,
    dimension_value,
    hodge_sbi_check,
    hodge_sbi_instance,
    projective_de_rham,
    projective_hc_hodge,
    smooth_hodge,
    smooth_hodge_table,
)
from kblowup.cyclic.michler import check_hypersurface, michler_hc, michler_hybrid
from kblowup.cyclic.six_term import (
    BlowupDeRham,
    DeRhamBounds,
    SixTermResult,
    hodge_mayer_vietoris,
    hp_six_term,
    mayer_vietoris_de_rham,
)

__all__ = [
    "CyclicBicomplex",
    "CyclicTheory",
    "TotalComplex",
    "bicomplex_homology",
    "sbi_dimension_check",
    "FDAlgebra",
    "HodgeTable",
    "dimension_value",
    "hodge_sbi_check",
    "hodge_sbi_instance",
    "projective_de_rham",
    "projective_hc_hodge",
    "smooth_hodge",
    "smooth_hodge_table",
    "check_hypersurface",
    "michler_hc",
    "michler_hybrid",
    "BlowupDeRham",
    "DeRhamBounds",
    "SixTermResult",
    "hodge_mayer_vietoris",
    "hp_six_term",
    "mayer_vietoris_de_rham",
]
