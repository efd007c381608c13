"""
KBlowup Poly - Rings, Orders, Parsing
"""
from kblowup.poly.orders import (
    BlockEliminationOrder,
    MonomialOrderKind,
    WeightedDegreeOrder,
    order_from_kind,
)
from kblowup.poly.parser import (
    format_polynomial,
    parse_ideal,
    parse_polynomial,
    parse_variables,
    split_generators,
)
from kblowup.poly.ring import (
    Ideal,
    RingContext,
    fresh_name,
    homogenize,
    is_homogeneous,
    min_form,
    polynomial_ring,
    transfer,
    variable_names,
)

__all__ = [
    "BlockEliminationOrder",
    "MonomialOrderKind",
    "WeightedDegreeOrder",
    "order_from_kind",
    "format_polynomial",
    "parse_ideal",
    "parse_polynomial",
    "parse_variables",
    "split_generators",
    "Ideal",
    "RingContext",
    "fresh_name",
    "homogenize",
    "is_homogeneous",
    "min_form",
    "polynomial_ring",
    "transfer",
    "variable_names",
]
