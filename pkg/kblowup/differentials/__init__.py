"""
KBlowup Differentials - Kähler forms, torsion, de Rham, Čech
"""
from kblowup.differentials.cech import (
    FormSheaf,
    ProjectiveFormComplex,
    cech_sheaf_cohomology,
    hodge_number,
    truncated_derham_hyper,
)
from kblowup.differentials.derham import (
    DeRhamWindow,
    TruncatedComplex,
    de_rham_cohomology,
    de_rham_window,
    euler_weights,
    naive_de_rham_cohomology,
)
from kblowup.differentials.kaehler import FPModule, exterior_power, forms, kaehler
from kblowup.differentials.torsion import torsion_dimension

__all__ = [
    "FormSheaf",
    "ProjectiveFormComplex",
    "cech_sheaf_cohomology",
    "hodge_number",
    "truncated_derham_hyper",
    "DeRhamWindow",
    "TruncatedComplex",
    "de_rham_cohomology",
    "de_rham_window",
    "euler_weights",
    "naive_de_rham_cohomology",
    "FPModule",
    "exterior_power",
    "forms",
    "kaehler",
    "torsion_dimension",
]
