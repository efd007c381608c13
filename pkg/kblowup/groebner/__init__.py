"""
KBlowup Groebner - Bases, Ideal Operations, Module Presentations
"""
from kblowup.groebner.buchberger import GroebnerBasis, groebner_polys, is_groebner, s_polynomial
from kblowup.groebner.ideals import (
    ColonMode,
    colon_and_saturate,
    contains,
    eliminate,
    groebner_basis,
    hilbert_function,
    ideal_contains,
    ideal_min,
    ideals_equal,
    intersect,
    is_unit_ideal,
    krull_dimension,
    normal_form,
    quotient_by_element,
    reduced,
    saturate_by_element,
)
from kblowup.groebner.modules import ModulePresentation

__all__ = [
    "GroebnerBasis",
    "groebner_polys",
    "is_groebner",
    "s_polynomial",
    "ColonMode",
    "colon_and_saturate",
    "contains",
    "eliminate",
    "groebner_basis",
    "hilbert_function",
    "ideal_contains",
    "ideal_min",
    "ideals_equal",
    "intersect",
    "is_unit_ideal",
    "krull_dimension",
    "normal_form",
    "quotient_by_element",
    "reduced",
    "saturate_by_element",
    "ModulePresentation",
]
