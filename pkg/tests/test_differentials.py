"""Tests for Kähler forms, torsion, de Rham cohomology and Čech computations."""
from itertools import combinations, product

import pytest

from kblowup.core import linalg
from kblowup.core.exceptions import NotSmoothError, ValidationError
from kblowup.differentials import (
    FPModule,
    FormSheaf,
    cech_sheaf_cohomology,
    de_rham_cohomology,
    de_rham_window,
    euler_weights,
    exterior_power,
    forms,
    hodge_number,
    kaehler,
    naive_de_rham_cohomology,
    torsion_dimension,
    truncated_derham_hyper,
)
from kblowup.poly import Ideal, polynomial_ring
from tests.conftest import ideal_in, projective_cover


class TestKaehler:
    def test_nodal_cubic_differentials(self, nodal_cubic):
        omega = kaehler(nodal_cubic)
        assert omega.rank == 2
        assert omega.generator_labels == ("dx", "dy")
        assert len(omega.presentation_matrix) == 1

    def test_top_forms_of_a_curve(self, nodal_cubic):
        top = forms(nodal_cubic, 2)
        assert top.rank == 1
        assert len(top.presentation_matrix) == 2
        assert forms(nodal_cubic, 0).rank == 1
        assert forms(nodal_cubic, 3).rank == 0

    def test_exterior_power_validation(self, nodal_cubic):
        with pytest.raises(ValidationError):
            exterior_power(kaehler(nodal_cubic), -1)

    def test_module_shape_validation(self, nodal_cubic):
        x, y = nodal_cubic.ring.gens
        with pytest.raises(ValidationError):
            FPModule(nodal_cubic, ((x,),), ("e0", "e1"))

    def test_free_summand(self, nodal_cubic):
        bigger = kaehler(nodal_cubic).with_free_summand(2)
        assert bigger.rank == 4
        assert all(len(row) == 4 for row in bigger.presentation_matrix)


class TestTorsion:
    def test_cusp_forms_torsion(self, cusp):
        assert torsion_dimension(kaehler(cusp), seed=0) == 2

    def test_nodal_forms_torsion(self, nodal_cubic):
        assert torsion_dimension(kaehler(nodal_cubic), seed=0) == 1

    def test_smooth_ring_is_torsion_free(self, hyperbola):
        assert torsion_dimension(kaehler(hyperbola)) == 0

    def test_torsion_free_ring_stops_without_a_window(self, nodal_cubic):
        assert torsion_dimension(forms(nodal_cubic, 0), degree_cap=0, seed=0) == 0

    @pytest.mark.parametrize("names,relation,weights", [
        ("x,y", "y^2 - x^3", (2, 3)),
        ("x,y", "y^2 - x^5", (2, 5)),
        pytest.param("x,y", "x^2*y + y^3", (1, 1), marks=pytest.mark.slow),
    ])
    def test_matches_graded_tjurina_count(self, names, relation, weights):
        ideal = ideal_in(names, relation)
        assert torsion_dimension(kaehler(ideal), seed=0) == graded_tjurina_number(ideal, weights)


def graded_tjurina_number(ideal: Ideal, weights: tuple[int, int], top: int = 24) -> int:
    """
    dim k[x,y]/(f, f_x, f_y) for weighted homogeneous f, summed degree by degree.

    For a quasi-homogeneous plane curve this is the length of the torsion of its 1-forms.
    """
    f = ideal.nonzero_generators[0]
    ring = ideal.ring
    x, y = ring.gens
    generators = [f, f.diff(x), f.diff(y)]

    def degree_of(g) -> int:
        return min(a * weights[0] + b * weights[1] for a, b in g.monoms())

    def monomials(degree: int) -> list[tuple[int, int]]:
        return [
            (a, b) for a in range(degree // weights[0] + 1)
            for b in range(degree // weights[1] + 1)
            if a * weights[0] + b * weights[1] == degree
        ]

    total = 0
    for degree in range(top + 1):
        basis = monomials(degree)
        row = {monomial: k for k, monomial in enumerate(basis)}
        columns = []
        for g in generators:
            for a, b in monomials(degree - degree_of(g)):
                shifted = g * x ** a * y ** b
                columns.append({row[m]: c for m, c in shifted.terms()})
        total += len(basis) - linalg.rank(linalg.from_columns(columns, len(basis)))
    return total


class TestDeRham:
    def test_euler_weights(self, cusp, nodal_cubic, plane_cone):
        assert euler_weights(cusp) == (2, 3)
        assert euler_weights(plane_cone) == (1, 1, 1)
        assert euler_weights(nodal_cubic) is None

    def test_contractible_by_euler_field(self):
        parabola = ideal_in("x,y", "y - x^2")
        assert de_rham_cohomology(parabola, 0).value == 1
        assert de_rham_cohomology(parabola, 1).value == 0

    def test_plane_window(self):
        plane = Ideal.zero(polynomial_ring(("x", "y")))
        h0 = de_rham_cohomology(plane, 0, degree_bound=5, use_shortcut=False)
        h1 = de_rham_cohomology(plane, 1, degree_bound=5, use_shortcut=False)
        assert (h0.value, h1.value) == (1, 0)
        assert h0.stable and h1.stable

    def test_punctured_line(self, hyperbola):
        assert de_rham_cohomology(hyperbola, 0).require_stable() == 1
        assert de_rham_cohomology(hyperbola, 1).require_stable() == 1
        assert de_rham_cohomology(hyperbola, 2).value == 0

    def test_singular_input_rejected(self, cusp):
        with pytest.raises(NotSmoothError):
            de_rham_cohomology(cusp, 1)

    def test_unit_ideal_is_empty(self):
        assert de_rham_cohomology(ideal_in("x", "1"), 0).value == 0

    def test_naive_complex_of_nodal_cubic(self, nodal_cubic):
        assert naive_de_rham_cohomology(nodal_cubic, 0, degree_bound=6).value == 1
        assert naive_de_rham_cohomology(nodal_cubic, 5).value == 0
        with pytest.raises(ValidationError):
            naive_de_rham_cohomology(nodal_cubic, -1)

    def test_differential_squares_to_zero(self, nodal_cubic, plane_cone):
        assert de_rham_window(nodal_cubic, 4).complex().check_square_zero()
        assert de_rham_window(plane_cone, 3).complex().check_square_zero()

    def test_exact_quotient_and_cocycles_of_the_line(self):
        line = Ideal.zero(polynomial_ring(("x",)))
        window = de_rham_window(line, 5)
        assert window.cocycles(0).value == 1
        assert window.exact_quotient(1).value == 0


class TestCech:
    def test_structure_sheaf_of_projective_line(self, projective_line):
        assert cech_sheaf_cohomology(projective_line, FormSheaf(), 0).require_stable() == 1
        assert cech_sheaf_cohomology(projective_line, FormSheaf(), 1).require_stable() == 0

    def test_twisted_sheaf(self, projective_line):
        assert cech_sheaf_cohomology(projective_line, FormSheaf(0, -2), 1).require_stable() == 1

    def test_hodge_numbers_of_projective_line(self, projective_line):
        assert hodge_number(projective_line, 1, 0).value == 0
        assert hodge_number(projective_line, 1, 1).require_stable() == 1

    def test_chart_order_does_not_matter(self, projective_line):
        forward = cech_sheaf_cohomology(projective_line, FormSheaf(1), 1)
        backward = cech_sheaf_cohomology(projective_line, FormSheaf(1), 1, chart_order=(1, 0))
        assert forward.value == backward.value

    def test_degrees_out_of_range(self, projective_line):
        assert cech_sheaf_cohomology(projective_line, FormSheaf(), 2).value == 0
        with pytest.raises(ValidationError):
            cech_sheaf_cohomology(projective_line, FormSheaf(), -1)

    def test_truncated_hypercohomology(self, projective_line):
        assert truncated_derham_hyper(projective_line, 0, 0).require_stable() == 1
        assert truncated_derham_hyper(projective_line, 1, 2).require_stable() == 1
        assert truncated_derham_hyper(projective_line, 1, 5).value == 0
        assert truncated_derham_hyper(projective_line, -1, 0).value == 0

    @pytest.mark.slow
    def test_plane_cubic_genus(self):
        cubic = projective_cover("x,y,z", "x^3 + y^3 + z^3")
        assert cech_sheaf_cohomology(cubic, FormSheaf(), 1).require_stable() == 1
        assert cech_sheaf_cohomology(cubic, FormSheaf(), 0).require_stable() == 1


def laurent_monomials(count: int, degree: int, inverted: tuple[int, ...], window: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree `degree`, poles of order <= window only at inverted variables."""
    top = degree + (count - 1) * window
    ranges = [range(-window if v in inverted else 0, top + 1) for v in range(count)]
    return [e for e in product(*ranges) if sum(e) == degree]


def cech_oracle(count: int, twist: int, q: int, window: int = 6) -> int:
    """dim H^q(P^{count-1}, O(twist)) from the monomial Čech complex, built by hand."""
    def cochains(level: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        if level < 0 or level >= count:
            return []
        return [
            (charts, e)
            for charts in combinations(range(count), level + 1)
            for e in laurent_monomials(count, twist, charts, window)
        ]

    def coboundary(level: int):
        source, target = cochains(level), cochains(level + 1)
        row = {cell: k for k, cell in enumerate(target)}
        columns = []
        for charts, e in source:
            column = {}
            for extra in range(count):
                if extra in charts:
                    continue
                bigger = tuple(sorted(charts + (extra,)))
                column[row[(bigger, e)]] = (-1) ** bigger.index(extra)
            columns.append(column)
        return linalg.from_columns(columns, len(target))

    return len(cochains(q)) - linalg.rank(coboundary(q)) - linalg.rank(coboundary(q - 1))


class TestCechAgainstMonomialComplex:
    @pytest.mark.parametrize("twist", [-3, -2, -1, 0, 1, 2])
    @pytest.mark.parametrize("q", [0, 1])
    def test_projective_line(self, projective_line, twist, q):
        computed = cech_sheaf_cohomology(projective_line, FormSheaf(0, twist), q, window=6)
        assert computed.require_stable() == cech_oracle(2, twist, q)

    @pytest.mark.slow
    @pytest.mark.parametrize("twist", [-3, -1, 1])
    @pytest.mark.parametrize("q", [0, 1, 2])
    def test_projective_plane(self, twist, q):
        plane = projective_cover("x,y,z")
        computed = cech_sheaf_cohomology(plane, FormSheaf(0, twist), q, window=6)
        assert computed.require_stable() == cech_oracle(3, twist, q)

    def test_oracle_reproduces_known_values(self):
        assert cech_oracle(2, 2, 0) == 3
        assert cech_oracle(2, -2, 1) == 1
        assert cech_oracle(3, -3, 2) == 1
        assert cech_oracle(3, 1, 0) == 3
