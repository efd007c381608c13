"""Tests for graded presentations, Rees algebras and filtered deformations."""
import numpy as np
import pytest

from kblowup.algebra import (
    GradedAlgebraPresentation,
    assoc_graded,
    filtered_deformation_report,
    graded_isomorphism_check,
    rees_presentation,
    tangent_cone_at_origin,
)
from kblowup.core.exceptions import OriginNotOnSchemeError, ValidationError
from kblowup.groebner import contains, ideals_equal
from kblowup.groebner.ideals import monomials_of_weight
from kblowup.poly import Ideal, polynomial_ring
from tests.conftest import ideal_in


def random_homogeneous_ideal(rng: np.random.Generator, names: tuple[str, ...]) -> Ideal:
    ring = polynomial_ring(names)
    gens = []
    for _ in range(int(rng.integers(1, 3))):
        monomials = monomials_of_weight((1,) * len(names), int(rng.integers(1, 4)))
        coefficients = rng.integers(-3, 4, size=len(monomials))
        terms = {m: int(c) for m, c in zip(monomials, coefficients) if c}
        if terms:
            gens.append(ring.from_dict(terms))
    if not gens:
        gens.append(ring.gens[0] ** 2)
    return Ideal(ring, tuple(gens))


def test_tangent_cone_of_nodal_cubic(nodal_cubic):
    assert ideals_equal(tangent_cone_at_origin(nodal_cubic), ideal_in("x,y", "y^2 - x^2"))


def test_tangent_cone_of_cusp(cusp):
    assert ideals_equal(tangent_cone_at_origin(cusp), ideal_in("x,y", "y^2"))


def test_tangent_cone_requires_origin():
    with pytest.raises(OriginNotOnSchemeError):
        tangent_cone_at_origin(ideal_in("x,y", "x - 1"))


def test_rees_algebra_of_the_plane():
    plane = Ideal.zero(polynomial_ring(("x", "y")))
    rees = rees_presentation(plane, Ideal.maximal_at_origin(plane.ring))
    assert rees.names == ("x", "y", "a1", "a2")
    assert rees.weights == (0, 0, 1, 1)
    x, y, a1, a2 = rees.ambient.gens
    assert contains(rees.relations, x * a2 - y * a1)
    assert rees.is_homogeneous()


def test_rees_rejects_empty_center(nodal_cubic):
    with pytest.raises(ValidationError):
        rees_presentation(nodal_cubic, Ideal.zero(nodal_cubic.ring))


def test_assoc_graded_matches_tangent_cone(nodal_cubic):
    gr = assoc_graded(nodal_cubic, Ideal.maximal_at_origin(nodal_cubic.ring)).pruned()
    assert gr.weights == (1, 1)
    a1, a2 = gr.ambient.gens
    assert ideals_equal(gr.relations, Ideal(gr.ambient, (a2**2 - a1**2,)))
    assert gr.hilbert_series(12) == [1] + [2] * 12


def test_filtered_deformation_of_nodal_cubic(nodal_cubic):
    report = filtered_deformation_report(nodal_cubic)
    assert report.is_proper
    assert report.isomorphism.hilbert_agree
    assert report.isomorphism.map_agree
    assert report.isomorphism.isomorphic


def test_filtered_deformation_of_worked_example():
    report = filtered_deformation_report(ideal_in("x,y,z", "x + y^2", "x + z^3"), bound=6)
    assert ideals_equal(report.i_min, ideal_in("x,y,z", "x", "y^2"))
    assert report.isomorphism.isomorphic


def test_isomorphism_check_detects_wrong_map():
    ring = polynomial_ring(("u", "v"))
    u, v = ring.gens
    left = GradedAlgebraPresentation(ring, Ideal(ring, (u**2,)), (1, 1))
    right = GradedAlgebraPresentation(ring, Ideal(ring, (v**2,)), (1, 1))
    swapped = graded_isomorphism_check(left, right, {"u": "v", "v": "u"}, bound=4)
    identity = graded_isomorphism_check(left, right, {"u": "u", "v": "v"}, bound=4)
    assert swapped.isomorphic
    assert identity.hilbert_agree and not identity.map_agree


def test_graded_presentation_validates_weights():
    ring = polynomial_ring(("u", "v"))
    with pytest.raises(ValidationError):
        GradedAlgebraPresentation(ring, Ideal.zero(ring), (1,))


@pytest.mark.parametrize("seed", [*range(8), *(pytest.param(s, marks=pytest.mark.slow) for s in range(8, 50))])
def test_assoc_graded_of_graded_ring_is_itself(seed):
    ideal = random_homogeneous_ideal(np.random.default_rng(seed), ("x", "y"))
    report = filtered_deformation_report(ideal, bound=8)
    assert ideals_equal(report.i_min, ideal)
    assert report.isomorphism.isomorphic


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(4))
def test_assoc_graded_of_graded_ring_in_three_variables(seed):
    ideal = random_homogeneous_ideal(np.random.default_rng(100 + seed), ("x", "y", "z"))
    report = filtered_deformation_report(ideal, bound=6)
    assert report.isomorphism.isomorphic
