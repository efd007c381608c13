"""Tests for Groebner bases, ideal operations and module presentations."""
import numpy as np
import pytest
from sympy import QQ
from sympy.polys.orderings import grevlex, lex

from kblowup.core.exceptions import ConstantTermError, RingMismatchError, UnitIdealError, ValidationError
from kblowup.groebner import (
    ColonMode,
    ModulePresentation,
    colon_and_saturate,
    contains,
    eliminate,
    groebner_basis,
    hilbert_function,
    ideal_min,
    ideals_equal,
    intersect,
    is_groebner,
    is_unit_ideal,
    krull_dimension,
    normal_form,
    quotient_by_element,
    reduced,
    saturate_by_element,
)
from kblowup.poly import Ideal, WeightedDegreeOrder, min_form, polynomial_ring, variable_names
from tests.conftest import ideal_in, random_polynomial


def test_lex_basis_of_classic_system():
    ideal = ideal_in("x,y", "x^2 + 2*x*y^2", "x*y + 2*y^3 - 1")
    gb = groebner_basis(ideal, lex)
    assert is_groebner(gb.basis)
    assert ideals_equal(gb.as_ideal(), ideal_in("x,y", "x", "2*y^3 - 1"))


def test_reduced_basis_is_groebner_and_equal():
    ideal = ideal_in("x,y,z", "x^2 - y", "x^3 - z")
    basis = reduced(ideal)
    assert is_groebner(basis.generators)
    assert ideals_equal(basis, ideal)


def test_membership_and_normal_form(nodal_cubic):
    x, y = nodal_cubic.ring.gens
    f = nodal_cubic.generators[0]
    assert contains(nodal_cubic, f * (x + 3 * y))
    assert not contains(nodal_cubic, x)
    gb = groebner_basis(nodal_cubic)
    assert normal_form(f * x + y, gb) == y


def test_normal_form_checks_ring(nodal_cubic):
    other = polynomial_ring(("u", "v"))
    with pytest.raises(RingMismatchError):
        normal_form(other.gens[0], groebner_basis(nodal_cubic))


def test_unit_ideal():
    assert is_unit_ideal(ideal_in("x,y", "x", "x + 1"))
    assert not is_unit_ideal(ideal_in("x,y", "x*y"))


def test_ideal_min_worked_example():
    ideal = ideal_in("x,y,z", "x + y^2", "x + z^3")
    assert ideals_equal(ideal_min(ideal), ideal_in("x,y,z", "x", "y^2"))


def test_ideal_min_nodal_cubic(nodal_cubic):
    assert ideals_equal(ideal_min(nodal_cubic), ideal_in("x,y", "y^2 - x^2"))


def test_ideal_min_zero_and_constant_term():
    zero = Ideal.zero(polynomial_ring(("x", "y")))
    assert ideal_min(zero).is_zero
    with pytest.raises(ConstantTermError):
        ideal_min(ideal_in("x,y", "x + 1"))


def test_intersection_and_quotient():
    ring_ideal = ideal_in("x,y", "x")
    other = ideal_in("x,y", "y")
    assert ideals_equal(intersect(ring_ideal, other), ideal_in("x,y", "x*y"))
    x, y = ring_ideal.ring.gens
    assert ideals_equal(quotient_by_element(ideal_in("x,y", "x*y"), x), other)


def test_saturation_routes_agree():
    ideal = ideal_in("x,y", "x^2*y", "x^3")
    x, _ = ideal.ring.gens
    by_colon = colon_and_saturate(ideal, ideal_in("x,y", "x"), ColonMode.SATURATION)
    by_element = saturate_by_element(ideal, x)
    assert is_unit_ideal(by_colon)
    assert ideals_equal(by_colon, by_element)


def test_saturation_of_embedded_component():
    ideal = ideal_in("x,y", "x*y", "y^2")
    x, _ = ideal.ring.gens
    assert ideals_equal(saturate_by_element(ideal, x), ideal_in("x,y", "y"))


def test_elimination_of_parameter():
    ideal = ideal_in("t,x,y", "x - t^2", "y - t^3")
    curve = eliminate(ideal, ["t"])
    assert variable_names(curve.ring) == ("x", "y")
    assert ideals_equal(curve, ideal_in("x,y", "x^3 - y^2"))


def test_eliminate_validates_names():
    ideal = ideal_in("x,y", "x*y")
    with pytest.raises(ValidationError):
        eliminate(ideal, ["x", "y"])
    assert eliminate(ideal, []) is ideal


def test_krull_dimension(nodal_cubic, plane_cone):
    assert krull_dimension(nodal_cubic) == 1
    assert krull_dimension(plane_cone) == 2
    assert krull_dimension(Ideal.maximal_at_origin(nodal_cubic.ring)) == 0
    assert krull_dimension(Ideal.zero(nodal_cubic.ring)) == 2
    with pytest.raises(UnitIdealError):
        krull_dimension(ideal_in("x,y", "1"))


def test_hilbert_function_of_plane_conic():
    conic = ideal_in("x,y", "x^2 + y^2")
    assert [hilbert_function(conic, d) for d in range(5)] == [1, 2, 2, 2, 2]


def test_weighted_hilbert_function():
    # k[x, y] with deg x = 1, deg y = 2: monomials of weight 4 are x^4, x^2 y, y^2
    zero = Ideal.zero(polynomial_ring(("x", "y")))
    assert hilbert_function(zero, 4, weights=(1, 2)) == 3


class TestModulePresentation:
    def setup_method(self):
        self.base = polynomial_ring(("x", "y"))
        self.x, self.y = self.base.gens

    def test_membership(self):
        module = ModulePresentation(self.base, 2, [(self.x, -self.y)])
        assert module.contains((self.x**2, -self.x * self.y))
        assert not module.contains((self.x, self.base.zero))

    def test_standard_basis_counts_quotient(self):
        module = ModulePresentation(self.base, 2, [(self.x, -self.y)])
        assert len(module.standard_basis(primary=0)) == 2
        assert len(module.standard_basis(primary=1)) == 3

    def test_saturation(self):
        module = ModulePresentation(self.base, 2, [(self.x * self.y, self.base.zero)])
        saturated = module.saturate(self.x)
        assert saturated.contains((self.y, self.base.zero))
        assert not module.contains((self.y, self.base.zero))

    def test_rejects_wrong_length(self):
        with pytest.raises(ValidationError):
            ModulePresentation(self.base, 2, [(self.x,)])

    def test_encode_decode(self):
        module = ModulePresentation(self.base, 2, [])
        vector = {0: self.x + QQ(1, 2), 1: self.y**2}
        assert module.decode(module.encode(vector)) == vector


@pytest.mark.parametrize("seed", range(12))
def test_membership_does_not_depend_on_the_order(ring_xy, seed):
    rng = np.random.default_rng(seed)
    f, g = random_polynomial(rng, ring_xy, 1, 2, 3), random_polynomial(rng, ring_xy, 1, 2, 3)
    ideal = Ideal(ring_xy, (f, g))
    member = random_polynomial(rng, ring_xy) * f - random_polynomial(rng, ring_xy) * g
    stranger = random_polynomial(rng, ring_xy)
    orders = [grevlex, lex, WeightedDegreeOrder((2, 3))]
    bases = [groebner_basis(ideal, order) for order in orders]
    assert all(not normal_form(member, basis) for basis in bases)
    verdicts = {not normal_form(stranger, basis) for basis in bases}
    assert verdicts == {contains(ideal, stranger)}


@pytest.mark.parametrize("seed", range(12))
def test_tangent_cone_of_a_hypersurface_is_its_lowest_form(ring_xy, seed):
    f = random_polynomial(np.random.default_rng(500 + seed), ring_xy, 1, 4, 5)
    assert ideals_equal(ideal_min(Ideal(ring_xy, (f,))), Ideal(ring_xy, (min_form(f),)))
