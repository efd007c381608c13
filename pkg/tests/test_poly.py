"""Tests for rings, orders and polynomial parsing."""
import numpy as np
import pytest

from kblowup.core.exceptions import ParseError, RingMismatchError, ValidationError, VariableCollisionError
from kblowup.poly import (
    BlockEliminationOrder,
    Ideal,
    WeightedDegreeOrder,
    format_polynomial,
    fresh_name,
    homogenize,
    is_homogeneous,
    min_form,
    parse_polynomial,
    parse_variables,
    polynomial_ring,
    split_generators,
    transfer,
    variable_names,
)
from kblowup.poly.ring import total_degree
from tests.conftest import random_polynomial


def test_parse_variables_strips_whitespace():
    assert parse_variables(" x, y ,z ") == ("x", "y", "z")


@pytest.mark.parametrize("text", ["", " , ", "x,2y", "x,y-z"])
def test_parse_variables_rejects_bad_lists(text):
    with pytest.raises(ParseError):
        parse_variables(text)


def test_polynomial_ring_rejects_duplicates():
    with pytest.raises(ValidationError):
        polynomial_ring(("x", "x"))
    with pytest.raises(ValidationError):
        polynomial_ring(())


def test_parse_nodal_cubic(ring_xy):
    f = parse_polynomial("y^2 - x^2 - x^3", ring_xy)
    x, y = ring_xy.gens
    assert f == y**2 - x**2 - x**3
    assert total_degree(f) == 3


def test_parse_rational_coefficients(ring_xy):
    x, y = ring_xy.gens
    assert parse_polynomial("x/2 + 3*y**2", ring_xy) == x / 2 + 3 * y**2


@pytest.mark.parametrize("text", ["", "1/x", "x + w", "x^(-1)", "x; y", "sin(x)", "len(str(x))*x", "abs(x) + y"])
def test_parse_rejects_non_polynomials(ring_xy, text):
    with pytest.raises(ParseError):
        parse_polynomial(text, ring_xy)


@pytest.mark.parametrize("text", ["y^2 - x^2 - x^3", "x*y - 1", "-x/3 + 7", "x^4*y - 2*x*y^3 + 5/2"])
def test_canonical_text_parses_back(ring_xy, text):
    f = parse_polynomial(text, ring_xy)
    printed = format_polynomial(f)
    assert parse_polynomial(printed, ring_xy) == f
    assert format_polynomial(parse_polynomial(printed, ring_xy)) == printed


def test_format_zero(ring_xy):
    assert format_polynomial(ring_xy.zero) == "0"


def test_split_generators_respects_parentheses():
    assert split_generators("x^2 + y, (x+1)*(y-1), y") == ["x^2 + y", "(x+1)*(y-1)", "y"]
    assert split_generators("") == []


def test_min_form_and_homogeneity(poly):
    f = poly("y^2 - x^2 - x^3")
    assert min_form(f) == poly("y^2 - x^2")
    assert is_homogeneous(min_form(f)) == (True, 2)
    assert is_homogeneous(f) == (False, None)


def test_homogenize_adds_last_variable(poly):
    g = homogenize(poly("y^2 - x^2 - x^3"), "h")
    assert variable_names(g.ring) == ("x", "y", "h")
    assert is_homogeneous(g) == (True, 3)


def test_homogenize_collision(poly):
    with pytest.raises(VariableCollisionError):
        homogenize(poly("x + y"), "x")


def test_fresh_name():
    assert fresh_name(("x", "y"), "t") == "t"
    assert fresh_name(("t", "t_1"), "t") == "t_2"


def test_transfer_by_name(poly):
    target = polynomial_ring(("y", "z", "x"))
    moved = transfer(poly("x*y^2"), target)
    y, z, x = target.gens
    assert moved == x * y**2
    with pytest.raises(RingMismatchError):
        transfer(poly("x*y"), polynomial_ring(("x", "z")))


def test_ideal_generators_must_share_ring(ring_xy):
    other = polynomial_ring(("a", "b"))
    with pytest.raises(RingMismatchError):
        Ideal(ring_xy, (other.gens[0],))


def test_orders_validate_weights():
    with pytest.raises(ValidationError):
        BlockEliminationOrder(-1)
    with pytest.raises(ValidationError):
        WeightedDegreeOrder((1, -1))
    with pytest.raises(ValidationError):
        WeightedDegreeOrder((1, 1), secondary=(1,))


def test_weighted_order_compares_primary_weight_first():
    order = WeightedDegreeOrder((0, 1))
    assert order((5, 0)) < order((0, 1))


@pytest.mark.parametrize("seed", range(20))
def test_ring_axioms_on_random_polynomials(ring_xy, seed):
    rng = np.random.default_rng(seed)
    f, g, h = (random_polynomial(rng, ring_xy) for _ in range(3))
    assert (f + g) * h == f * h + g * h
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f - f == ring_xy.zero
    assert total_degree(f * g) == total_degree(f) + total_degree(g)


@pytest.mark.parametrize("seed", range(20))
def test_min_form_is_multiplicative(ring_xy, seed):
    rng = np.random.default_rng(1000 + seed)
    f, g = random_polynomial(rng, ring_xy), random_polynomial(rng, ring_xy)
    assert min_form(f * g) == min_form(f) * min_form(g)
