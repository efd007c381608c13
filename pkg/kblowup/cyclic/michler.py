"""
KBlowup Cyclic - Hypersurfaces with Isolated Singularities

Hodge components of HC for A = k[x_1..x_N]/<f>, f reduced with only
isolated singular points:

    n > N:   T(Ω^{N-1}) ⊕ H^{N-1}     if 2i - n = N - 1
             H^{2i-n}                 otherwise
    n <= N:  Ω^n / dΩ^{n-1}           if i = n
             H^{2i-n}                 if n/2 <= i < n
             0                        otherwise

H is the naive de Rham cohomology of A. Knowing HC, the SBI sequence
spliced with the Hodge Mayer-Vietoris sequence of a resolution yields HN.
"""
from typing import Iterable, Optional

from loguru import logger

from kblowup.core.config import settings
from kblowup.core.exceptions import HypothesisError, NotIsolatedError
from kblowup.cyclic.bicomplex import CyclicTheory
from kblowup.cyclic.hodge import dimension_value
from kblowup.cyclic.six_term import BlowupDeRham, DeRhamBounds, hodge_label, hodge_mayer_vietoris
from kblowup.differentials import de_rham_window, forms, naive_de_rham_cohomology, torsion_dimension
from kblowup.exactseq import DimensionValue, HybridDiagram, LESInstance, splice
from kblowup.geometry.blowup import blowup_square
from kblowup.geometry.smoothness import singular_locus
from kblowup.groebner.ideals import is_unit_ideal, krull_dimension, reduced
from kblowup.poly.ring import Ideal, total_degree


def check_hypersurface(hypersurface: Ideal) -> Ideal:
    """
    Return the hypersurface ideal <f> after checking it is principal, reduced
    and has at most isolated singular points.

    Raises:
        HypothesisError: if the ideal is not principal or f is not squarefree
        NotIsolatedError: if the singular locus is positive-dimensional
    """
    basis = reduced(hypersurface).nonzero_generators
    if len(basis) != 1:
        raise HypothesisError(f"not a hypersurface: {len(basis)} generators in a reduced basis")
    f = basis[0]
    if total_degree(f) == 0:
        raise HypothesisError("the hypersurface is empty or everything")
    if total_degree(f.sqf_part()) != total_degree(f):
        raise HypothesisError("hypersurface equation is not reduced")
    ideal = Ideal(hypersurface.ring, (f,))
    locus = singular_locus(ideal)
    if not is_unit_ideal(locus) and krull_dimension(locus) > 0:
        raise NotIsolatedError("singular locus of the hypersurface is not finite")
    return ideal


def _naive(ideal: Ideal, p: int, bound: int) -> DimensionValue:
    if p < 0 or p > ideal.ring.ngens:
        return DimensionValue.zero()
    return dimension_value(naive_de_rham_cohomology(ideal, p, bound))


def michler_hc(
    hypersurface: Ideal,
    n: int,
    i: int,
    degree_bound: Optional[int] = None,
    torsion_cap: Optional[int] = None,
) -> DimensionValue:
    """
    HC_n^(i) of a reduced hypersurface with isolated singularities.

    Raises:
        HypothesisError: if the hypotheses fail
        StabilizationError: if a window neither settles nor grows
    """
    ideal = check_hypersurface(hypersurface)
    bound = settings.DEGREE_BOUND if degree_bound is None else degree_bound
    N = ideal.ring.ngens
    if n < 0 or i < 0:
        return DimensionValue.zero()
    m = 2 * i - n
    if n > N:
        if m == N - 1:
            torsion = torsion_dimension(forms(ideal, N - 1), torsion_cap)
            logger.info(f"HC_{n}^({i}): torsion {torsion} plus H^{N - 1}")
            return DimensionValue.direct_sum(DimensionValue.known(torsion), _naive(ideal, N - 1, bound))
        return _naive(ideal, m, bound)
    if i == n:
        return dimension_value(de_rham_window(ideal, bound).exact_quotient(n))
    if 2 * i >= n and i < n:
        return _naive(ideal, m, bound)
    return DimensionValue.zero()


def michler_hybrid(
    hypersurface: Ideal,
    i: int,
    n_range: Iterable[int],
    center: Optional[Ideal] = None,
    bounds: DeRhamBounds = DeRhamBounds(),
) -> HybridDiagram:
    """
    Hodge SBI of X (HC from the hypersurface formulas, HN and HP unknown)
    spliced with the Hodge Mayer-Vietoris sequence for HP^(i) at the HP slots.

    Args:
        hypersurface: <f> with f reduced and isolated singularities
        i: Hodge index
        n_range: Degrees n covered by both sequences
        center: Blowup center (defaults to the origin)
        bounds: Windows for the de Rham terms

    Raises:
        HypothesisError: if the hypersurface or smoothness hypotheses fail
    """
    ideal = check_hypersurface(hypersurface)
    given = list(n_range)
    degrees = list(range(max(given), min(given) - 1, -1))
    center = center or Ideal.maximal_at_origin(ideal.ring)
    square = blowup_square(ideal, center)
    terms = BlowupDeRham(square, bounds)

    def hc(n: int) -> DimensionValue:
        return michler_hc(ideal, n, i - 1, bounds.degree_bound)

    entries = [(hodge_label(CyclicTheory.HC, i - 1, degrees[0] - 1), hc(degrees[0] - 1), "hypersurface formula")]
    for n in degrees:
        entries += [
            (hodge_label(CyclicTheory.HN, i, n), DimensionValue.unknown(), "unknown"),
            (hodge_label(CyclicTheory.HP, i, n), DimensionValue.unknown(), "unknown"),
            (hodge_label(CyclicTheory.HC, i - 1, n - 2), hc(n - 2), "hypersurface formula"),
        ]
    sbi = LESInstance.build(entries, name=f"Hodge SBI i={i}")
    mayer_vietoris = hodge_mayer_vietoris(square, i, degrees, CyclicTheory.HP, bounds, terms)
    shared = {hodge_label(CyclicTheory.HP, i, n): hodge_label(CyclicTheory.HP, i, n) for n in degrees}
    diagram = splice(sbi, mayer_vietoris, shared)
    logger.info(f"Hypersurface hybrid i={i}: {len(diagram.log)} deductions")
    return diagram
