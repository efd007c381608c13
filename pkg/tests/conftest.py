"""
Shared fixtures: rings and ideals from the worked examples.
"""
import numpy as np
import pytest
from sympy.polys.rings import PolyElement, PolyRing

from kblowup.algebra import GradedAlgebraPresentation
from kblowup.geometry import ChartCover, proj_charts
from kblowup.poly import Ideal, parse_ideal, parse_polynomial, parse_variables, polynomial_ring


def ideal_in(names: str, *generators: str) -> Ideal:
    return parse_ideal(list(generators), parse_variables(names))


def random_polynomial(
    rng: np.random.Generator, ring: PolyRing, low: int = 0, high: int = 3, terms: int = 4,
) -> PolyElement:
    """Nonzero polynomial whose monomials have total degree in [low, high]."""
    while True:
        monomials = [tuple(int(e) for e in rng.integers(0, high + 1, size=ring.ngens)) for _ in range(terms)]
        f = ring.from_dict({
            m: int(c) for m, c in zip(monomials, rng.integers(-5, 6, size=terms))
            if c and low <= sum(m) <= high
        })
        if f:
            return f


def projective_cover(names: str, *generators: str) -> ChartCover:
    """Standard cover of Proj k[names]/<generators>, all weights one."""
    ideal = ideal_in(names, *generators)
    presentation = GradedAlgebraPresentation(
        ambient=ideal.ring, relations=ideal, weights=(1,) * ideal.ring.ngens,
    )
    return ChartCover(presentation, proj_charts(presentation))


@pytest.fixture
def ring_xy():
    return polynomial_ring(("x", "y"))


@pytest.fixture
def poly(ring_xy):
    return lambda text: parse_polynomial(text, ring_xy)


@pytest.fixture
def nodal_cubic() -> Ideal:
    return ideal_in("x,y", "y^2 - x^2 - x^3")


@pytest.fixture
def cusp() -> Ideal:
    return ideal_in("x,y", "y^2 - x^3")


@pytest.fixture
def plane_cone() -> Ideal:
    return ideal_in("x,y,z", "x^2 + y^2 - z^2")


@pytest.fixture
def hyperbola() -> Ideal:
    return ideal_in("x,y", "x*y - 1")


@pytest.fixture
def projective_line() -> ChartCover:
    return projective_cover("x,y")


@pytest.fixture
def rng():
    return np.random.default_rng(0)
