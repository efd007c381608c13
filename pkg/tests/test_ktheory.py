"""Tests for the hypothesis checks and the negative K-theory sequence."""
import pytest

from kblowup.core.exceptions import HypothesisError, OriginNotOnSchemeError, ValidationError
from kblowup.exactseq import DimensionValue
from kblowup.geometry import SingularityVerdict
from kblowup.ktheory import (
    ktilde_label,
    ktilde_low_degree,
    main_les,
    main_theorem,
    verify_hypotheses,
)
from tests.conftest import ideal_in


@pytest.fixture(scope="module")
def nodal_report():
    return verify_hypotheses(ideal_in("x,y", "y^2 - x^2 - x^3"))


def test_label():
    assert ktilde_label(-1, 2) == "K~^(2)_-1"


def test_nodal_cubic_passes(nodal_report):
    assert nodal_report.passes
    assert nodal_report.imin_proper and nodal_report.graded_isomorphic
    assert nodal_report.e_smooth and nodal_report.y_smooth
    assert nodal_report.isolated is SingularityVerdict.ISOLATED_AT_ORIGIN
    assert nodal_report.dimension == 1
    assert nodal_report.summary()["passes"] is True


def test_cusp_fails_on_exceptional_fibre(cusp):
    report = verify_hypotheses(cusp)
    assert not report.e_smooth
    assert report.y_smooth
    assert not report.passes
    with pytest.raises(HypothesisError):
        main_les(cusp, 0, [-1], report=report)


def test_exceptional_smoothness_implies_blowup_smoothness(cusp, nodal_cubic):
    for ideal in (cusp, nodal_cubic):
        report = verify_hypotheses(ideal)
        assert report.y_smooth or not report.e_smooth


def test_origin_must_lie_on_the_scheme(hyperbola):
    with pytest.raises(OriginNotOnSchemeError):
        verify_hypotheses(hyperbola)


def test_smooth_input_is_the_smooth_case():
    parabola = ideal_in("x,y", "y - x^2")
    report = verify_hypotheses(parabola)
    assert report.smooth_case and not report.passes
    low = ktilde_low_degree(parabola, report=report)
    assert low.smooth_case
    assert low.vanishes(-7) and low.vanishes(-1)


@pytest.mark.parametrize(
    "i,n_range",
    [(0, []), (0, [-1, 0]), (-1, [-2, -1])],
)
def test_main_les_validation(nodal_cubic, i, n_range):
    with pytest.raises(ValidationError):
        main_les(nodal_cubic, i, n_range)


@pytest.mark.slow
def test_main_theorem_for_nodal_cubic(nodal_cubic, nodal_report):
    result = main_theorem(nodal_cubic, [0], range(-3, 0), report=nodal_report)
    assert all(result.ktilde[(n, 0)].is_zero for n in range(-3, 0))
    assert result.ktilde[(-3, 1)].is_zero
    assert result.ktilde[(-2, 1)].is_zero
    assert result.low_degree.dimension == 1
    assert result.low_degree.vanishing_below == -1
    assert result.surjection_target_dim == DimensionValue.zero()
    labels = result.les_per_i[0].labels
    assert labels[0] == "HC_0^(0)(E)"
    assert ktilde_label(-1, 1) in labels


@pytest.mark.slow
def test_line_pair_in_space_is_not_isolated():
    report = verify_hypotheses(ideal_in("x,y,z", "x*y"))
    assert report.isolated is SingularityVerdict.OTHER
    assert not report.passes
