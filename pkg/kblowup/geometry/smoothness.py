"""
KBlowup Geometry - Jacobian Criterion

Singular locus of an affine scheme Spec k[x]/I as I + (c x c minors of
the Jacobian), c the codimension. Equidimensionality is assumed.

PURE MATH - No I/O
"""
from enum import Enum
from itertools import combinations

from loguru import logger
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement

from kblowup.core.exceptions import OriginNotOnSchemeError
from kblowup.groebner.ideals import is_unit_ideal, krull_dimension, reduced
from kblowup.poly.ring import Ideal, constant_term, fresh_name, polynomial_ring, transfer, variable_names


class SingularityVerdict(str, Enum):
    """Classification of the singular locus relative to the origin"""
    SMOOTH = "smooth"
    ISOLATED_AT_ORIGIN = "isolated_at_origin"
    OTHER = "other"


def jacobian_matrix(relations: Ideal) -> list[list[PolyElement]]:
    """Rows are generators, columns are variables."""
    return [[g.diff(x) for x in relations.ring.gens] for g in relations.nonzero_generators]


def _minors(matrix: list[list[PolyElement]], size: int, ring) -> list[PolyElement]:
    if size == 0:
        return [ring.one]
    if not matrix or size > min(len(matrix), len(matrix[0])):
        return []
    domain = ring.to_domain()
    out = []
    for rows in combinations(range(len(matrix)), size):
        for cols in combinations(range(len(matrix[0])), size):
            block = [[matrix[r][c] for c in cols] for r in rows]
            det = DomainMatrix(block, (size, size), domain).det()
            if det:
                out.append(det)
    return out


def singular_locus(relations: Ideal) -> Ideal:
    """
    Ideal of the singular locus of Spec k[x]/relations.

    The unit ideal means smooth (or empty).
    """
    ring = relations.ring
    if is_unit_ideal(relations):
        return Ideal.unit(ring)
    codim = ring.ngens - krull_dimension(relations)
    if codim == 0:
        return Ideal.unit(ring)
    gens = reduced(relations).generators
    minors = _minors(jacobian_matrix(Ideal(ring, gens)), codim, ring)
    locus = reduced(Ideal(ring, gens + tuple(minors)))
    logger.debug(f"Singular locus from {len(minors)} minors of size {codim}: {len(locus.generators)} generators")
    return locus


def is_smooth(relations: Ideal) -> bool:
    return is_unit_ideal(singular_locus(relations))


def origin_on_scheme(relations: Ideal) -> bool:
    return not any(constant_term(g) for g in relations.generators)


def isolated_singularity_at_origin(relations: Ideal) -> SingularityVerdict:
    """
    SMOOTH, ISOLATED_AT_ORIGIN (singular locus is exactly the origin) or OTHER.

    Raises:
        OriginNotOnSchemeError: if the origin is not a point of the scheme
    """
    if not origin_on_scheme(relations):
        raise OriginNotOnSchemeError("origin is not a point of the scheme")
    locus = singular_locus(relations)
    if is_unit_ideal(locus):
        return SingularityVerdict.SMOOTH
    names = variable_names(relations.ring)
    t = fresh_name(names, "t")
    work = polynomial_ring((t,) + names)
    base = [transfer(g, work) for g in locus.generators]
    for x in work.gens[1:]:
        # x lies in the radical of the locus iff 1 is in locus + <1 - t x>
        if not is_unit_ideal(Ideal(work, tuple(base) + (work.one - work.gens[0] * x,))):
            return SingularityVerdict.OTHER
    return SingularityVerdict.ISOLATED_AT_ORIGIN
