"""
KBlowup Differentials - Torsion Submodules

T(M) = ker(M -> M[f^-1]) for a nonzerodivisor f vanishing on the
singular locus; computed as (N : f^∞)/N inside the free cover and
counted through standard monomials of bounded degree.
"""
from typing import Optional

import numpy as np
from loguru import logger
from sympy.polys.rings import PolyElement

from kblowup.core.config import settings
from kblowup.core.exceptions import HypothesisError, StabilizationError
from kblowup.core.stability import is_stable
from kblowup.differentials.kaehler import FPModule
from kblowup.geometry.smoothness import singular_locus
from kblowup.groebner.ideals import colon_and_saturate, ideals_equal, is_unit_ideal
from kblowup.poly.ring import Ideal


def random_nonzerodivisor(relations: Ideal, locus: Ideal, seed: Optional[int] = None) -> PolyElement:
    """
    Random QQ-combination of the locus generators that is a nonzerodivisor on k[x]/J.

    Raises:
        HypothesisError: if every draw is a zero divisor
    """
    rng = np.random.default_rng(settings.RANDOM_SEED if seed is None else seed)
    gens = locus.nonzero_generators
    ring = relations.ring
    for attempt in range(settings.NZD_RETRIES):
        coeffs = rng.integers(1, 10, size=len(gens))
        f = ring.zero
        for c, g in zip(coeffs, gens):
            f += int(c) * g
        if not f:
            continue
        if relations.is_zero or ideals_equal(colon_and_saturate(relations, Ideal(ring, (f,))), relations):
            logger.debug(f"Nonzerodivisor found on attempt {attempt + 1}")
            return f
    raise HypothesisError(f"no nonzerodivisor found in {settings.NZD_RETRIES} draws")


def torsion_dimension(
    module: FPModule,
    degree_cap: Optional[int] = None,
    seed: Optional[int] = None,
) -> int:
    """
    dim_k T(M) for M finitely presented over k[x]/J with torsion at the singular locus.

    Raises:
        StabilizationError: if the torsion count has not settled by the degree cap
    """
    cap = settings.TORSION_DEGREE_CAP if degree_cap is None else degree_cap
    locus = singular_locus(module.ring_relations)
    if is_unit_ideal(locus) or module.rank == 0:
        logger.debug("Smooth ring: torsion-free forms, torsion dimension 0")
        return 0
    f = random_nonzerodivisor(module.ring_relations, locus, seed)
    relations = module.presentation()
    saturated = relations.saturate(f)
    if all(relations.contains(vector) for vector in saturated.relations):
        logger.debug("Saturation adds no relations: torsion-free")
        return 0

    history = []
    for degree in range(cap + 1):
        before = len(relations.standard_basis(primary_max=degree))
        after = len(saturated.standard_basis(primary_max=degree))
        history.append(before - after)
        if history[-1] and is_stable(history):
            break
    else:
        if not is_stable(history):
            raise StabilizationError(f"torsion count did not settle by degree {cap}: {history}")
    logger.info(f"Torsion dimension {history[-1]} (history {history})")
    return history[-1]
