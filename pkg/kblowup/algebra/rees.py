"""
KBlowup Algebra - Rees Algebras, Associated Graded Rings, Tangent Cones

R[It] is presented as k[x, a_1..a_r]/K with K the kernel of
a_i -> f_i t, obtained by eliminating t. Weights: x -> 0, a_i -> 1.

PURE MATH - No I/O
"""
from dataclasses import dataclass
from typing import Optional

from loguru import logger

from kblowup.algebra.graded import (
    GradedAlgebraPresentation,
    IsomorphismCheck,
    graded_isomorphism_check,
)
from kblowup.core.exceptions import OriginNotOnSchemeError, ValidationError
from kblowup.groebner.ideals import eliminate, ideal_min, is_unit_ideal, reduced
from kblowup.poly.ring import (
    Ideal,
    constant_term,
    fresh_name,
    polynomial_ring,
    transfer,
    variable_names,
)


def rees_variable_names(base_names: tuple[str, ...], count: int) -> tuple[str, ...]:
    """a1, a2, ... avoiding collisions with the base variables."""
    taken = set(base_names)
    out = []
    for i in range(1, count + 1):
        name = fresh_name(taken, f"a{i}")
        taken.add(name)
        out.append(name)
    return tuple(out)


def rees_presentation(relations: Ideal, center: Ideal) -> GradedAlgebraPresentation:
    """
    Presentation of the Rees algebra R[It] for R = k[x]/relations.

    Args:
        relations: Defining ideal of R
        center: Ideal I of k[x] (same ring), generators f_1..f_r

    Returns:
        Graded presentation over k[x, a_1..a_r] with weights x:0, a:1
    """
    if relations.ring != center.ring:
        transfer_ok = variable_names(relations.ring) == variable_names(center.ring)
        if not transfer_ok:
            raise ValidationError("ring relations and center live in different rings")
        center = center.transfer(relations.ring)
    gens = center.nonzero_generators
    if not gens:
        raise ValidationError("the blowup center needs at least one nonzero generator")

    names = variable_names(relations.ring)
    a_names = rees_variable_names(names, len(gens))
    t = fresh_name(names + a_names, "t")
    work = polynomial_ring((t,) + names + a_names)
    tv = work.gens[0]
    a_vars = work.gens[1 + len(names):]
    kernel_gens = [transfer(g, work) for g in relations.nonzero_generators]
    kernel_gens += [a - tv * transfer(f, work) for a, f in zip(a_vars, gens)]
    kernel = eliminate(Ideal(work, tuple(kernel_gens)), [t])
    ambient = kernel.ring
    logger.info(
        f"Rees algebra over {names} with {len(gens)} Rees variables: "
        f"{len(kernel.generators)} relations"
    )
    return GradedAlgebraPresentation(
        ambient=ambient,
        relations=reduced(kernel),
        weights=(0,) * len(names) + (1,) * len(gens),
    )


def assoc_graded(relations: Ideal, center: Ideal) -> GradedAlgebraPresentation:
    """gr_I(R) = R[It] / I R[It]: the Rees relations plus I in degree zero."""
    rees = rees_presentation(relations, center)
    ring = rees.ambient
    extra = tuple(transfer(f, ring) for f in center.transfer(relations.ring).nonzero_generators)
    return GradedAlgebraPresentation(
        ambient=ring,
        relations=reduced(rees.relations + Ideal(ring, extra)),
        weights=rees.weights,
    )


def tangent_cone_at_origin(ideal: Ideal) -> Ideal:
    """
    I_min of an ideal whose zero set contains the origin.

    Raises:
        OriginNotOnSchemeError: if some generator is nonzero at the origin
    """
    if any(constant_term(g) for g in ideal.generators):
        raise OriginNotOnSchemeError(f"origin is not on V({ideal})")
    return ideal_min(ideal)


@dataclass(frozen=True)
class FilteredDeformationReport:
    """I_min, properness, gr_m(R) and the isomorphism evidence."""
    i_min: Ideal
    is_proper: bool
    assoc_graded: GradedAlgebraPresentation
    isomorphism: IsomorphismCheck


def filtered_deformation_report(ideal: Ideal, bound: Optional[int] = None) -> FilteredDeformationReport:
    """Compare gr_m(k[x]/I) with k[X]/I_min for m the maximal ideal at the origin."""
    i_min = tangent_cone_at_origin(ideal)
    proper = not is_unit_ideal(i_min)
    gr = assoc_graded(ideal, Ideal.maximal_at_origin(ideal.ring)).pruned()
    names = variable_names(ideal.ring)
    a_names = rees_variable_names(names, len(names))
    cone = GradedAlgebraPresentation(
        ambient=i_min.ring,
        relations=i_min,
        weights=(1,) * len(names),
    )
    check = graded_isomorphism_check(gr, cone, dict(zip(a_names, names)), bound)
    logger.info(
        f"Filtered deformation: proper={proper}, hilbert_agree={check.hilbert_agree}, "
        f"map_agree={check.map_agree}"
    )
    return FilteredDeformationReport(i_min=i_min, is_proper=proper, assoc_graded=gr, isomorphism=check)
