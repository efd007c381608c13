"""Tests for the Jacobian criterion and blowup squares."""
import pytest

from kblowup.algebra import GradedAlgebraPresentation
from kblowup.core.exceptions import OriginNotOnSchemeError, ValidationError
from kblowup.geometry import (
    SingularityVerdict,
    blowup_square,
    is_smooth,
    isolated_singularity_at_origin,
    jacobian_matrix,
    proj_charts,
    single_chart_cover,
    singular_locus,
)
from kblowup.groebner import ideals_equal, is_unit_ideal
from kblowup.poly import Ideal, polynomial_ring
from tests.conftest import ideal_in


def test_jacobian_shape(plane_cone):
    matrix = jacobian_matrix(plane_cone)
    assert len(matrix) == 1 and len(matrix[0]) == 3


def test_singular_locus_of_nodal_cubic(nodal_cubic):
    assert ideals_equal(singular_locus(nodal_cubic), ideal_in("x,y", "x", "y"))


def test_smoothness(nodal_cubic, hyperbola):
    assert is_smooth(hyperbola)
    assert not is_smooth(nodal_cubic)
    assert is_smooth(Ideal.zero(polynomial_ring(("x", "y"))))
    assert is_unit_ideal(singular_locus(ideal_in("x,y", "1")))


@pytest.mark.parametrize(
    "names,generators,verdict",
    [
        ("x,y", ("y^2 - x^2 - x^3",), SingularityVerdict.ISOLATED_AT_ORIGIN),
        ("x,y", ("y^2 - x^3",), SingularityVerdict.ISOLATED_AT_ORIGIN),
        ("x,y,z", ("x^2 + y^2 - z^2",), SingularityVerdict.ISOLATED_AT_ORIGIN),
        ("x,y", ("y - x^2",), SingularityVerdict.SMOOTH),
        ("x,y,z", ("x*y",), SingularityVerdict.OTHER),
    ],
)
def test_isolated_singularity_verdicts(names, generators, verdict):
    assert isolated_singularity_at_origin(ideal_in(names, *generators)) is verdict


def test_verdict_requires_origin(hyperbola):
    with pytest.raises(OriginNotOnSchemeError):
        isolated_singularity_at_origin(hyperbola)


def test_projective_line_charts(projective_line):
    assert projective_line.size == 2
    assert [c.description for c in projective_line.charts] == ["x = 1", "y = 1"]
    for chart in projective_line.charts:
        assert chart.ring_relations.ring.ngens == 1
        assert chart.ring_relations.is_zero


def test_proj_charts_rejects_heavy_weights():
    ring = polynomial_ring(("u", "v"))
    presentation = GradedAlgebraPresentation(ring, Ideal.zero(ring), (1, 2))
    with pytest.raises(ValidationError):
        proj_charts(presentation)


def test_single_chart_cover(hyperbola):
    cover = single_chart_cover(hyperbola)
    assert cover.size == 1
    assert ideals_equal(cover.charts[0].ring_relations, hyperbola)


def test_blowup_of_nodal_cubic_resolves_it(nodal_cubic):
    square = blowup_square(nodal_cubic, Ideal.maximal_at_origin(nodal_cubic.ring))
    assert len(square.y_charts) == 2
    assert len(square.e_charts) == 2
    assert square.y_smooth()
    assert square.e_smooth()
    assert ideals_equal(square.z_relations, ideal_in("x,y", "x", "y"))


def test_blowup_of_cusp_has_fat_exceptional_fibre(cusp):
    square = blowup_square(cusp, Ideal.maximal_at_origin(cusp.ring))
    assert square.y_smooth()
    assert not square.e_smooth()


def test_blowup_of_the_plane():
    plane = Ideal.zero(polynomial_ring(("x", "y")))
    square = blowup_square(plane, Ideal.maximal_at_origin(plane.ring))
    assert square.y_cover.size == 2
    assert square.e_cover.size == 2
    assert square.y_smooth() and square.e_smooth()


def test_blowup_rejects_empty_center(nodal_cubic):
    with pytest.raises(ValidationError):
        blowup_square(nodal_cubic, Ideal.zero(nodal_cubic.ring))


@pytest.mark.slow
def test_blowup_of_cone(plane_cone):
    square = blowup_square(plane_cone, Ideal.maximal_at_origin(plane_cone.ring))
    assert square.y_cover.size == 3
    assert square.y_smooth()
    assert square.e_smooth()
