"""
KBlowup Groebner - Ideal Operations

Membership, equality, intersection, quotients, saturation, elimination,
the ideal of lowest-degree forms and Krull dimension, all through
reduced Groebner bases.

PURE MATH - No I/O
"""
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

from loguru import logger
from sympy.polys.orderings import MonomialOrder, grevlex
from sympy.polys.rings import PolyElement, PolyRing

from kblowup.core.config import settings
from kblowup.core.exceptions import (
    ConstantTermError,
    IterationLimitError,
    RingMismatchError,
    UnitIdealError,
    ValidationError,
)
from kblowup.groebner.buchberger import GroebnerBasis, groebner_polys
from kblowup.poly.orders import BlockEliminationOrder, WeightedDegreeOrder
from kblowup.poly.ring import (
    Ideal,
    constant_term,
    fresh_name,
    homogenize,
    min_form,
    polynomial_ring,
    transfer,
    variable_names,
    with_order,
)


class ColonMode(str, Enum):
    """Ideal quotient I:J or saturation I:J^infinity"""
    QUOTIENT = "quotient"
    SATURATION = "saturation"


@lru_cache(maxsize=512)
def _cached_basis(ring: PolyRing, generators: tuple[PolyElement, ...]) -> tuple[PolyElement, ...]:
    return tuple(groebner_polys([g.set_ring(ring) for g in generators], ring))


def groebner_basis(ideal: Ideal, order: Optional[MonomialOrder] = None) -> GroebnerBasis:
    """
    Reduced Groebner basis of `ideal` under `order` (the ring's order by default).

    Results are memoized on (ring, order, generators).
    """
    order = order or ideal.ring.order
    ring = with_order(ideal.ring, order)
    basis = _cached_basis(ring, ideal.nonzero_generators)
    return GroebnerBasis(ideal=ideal, order=order, basis=basis)


def normal_form(f: PolyElement, basis: GroebnerBasis) -> PolyElement:
    """Remainder of f modulo a Groebner basis; ring mismatch is an error."""
    if f.ring.symbols != basis.ideal.ring.symbols:
        raise RingMismatchError(
            f"polynomial in {variable_names(f.ring)} reduced by basis in {basis.ideal.names}"
        )
    return basis.reduce(f.set_ring(basis.ideal.ring))


def reduced(ideal: Ideal) -> Ideal:
    """The same ideal, generated by its reduced degrevlex basis."""
    return groebner_basis(ideal, grevlex).as_ideal()


def contains(ideal: Ideal, f: PolyElement) -> bool:
    return not normal_form(f, groebner_basis(ideal, grevlex))


def ideal_contains(big: Ideal, small: Ideal) -> bool:
    gb = groebner_basis(big, grevlex)
    return all(not normal_form(g, gb) for g in small.generators)


def ideals_equal(first: Ideal, second: Ideal) -> bool:
    if first.ring.symbols != second.ring.symbols:
        raise RingMismatchError("ideals of different rings")
    return ideal_contains(first, second) and ideal_contains(second, first)


def is_unit_ideal(ideal: Ideal) -> bool:
    return groebner_basis(ideal, grevlex).is_unit


def eliminate(ideal: Ideal, drop: Iterable[str]) -> Ideal:
    """
    Elimination ideal I ∩ k[remaining variables].

    Args:
        ideal: Ideal of k[x]
        drop: Names of variables to eliminate

    Returns:
        Ideal in the ring of the remaining variables, in their original order
    """
    names = variable_names(ideal.ring)
    drop = [n for n in names if n in set(drop)]
    unknown = set(drop) - set(names)
    if unknown:
        raise ValidationError(f"cannot eliminate unknown variables {sorted(unknown)}")
    keep = [n for n in names if n not in drop]
    if not keep:
        raise ValidationError("cannot eliminate every variable")
    if not drop:
        return ideal

    work = polynomial_ring(drop + keep, BlockEliminationOrder(len(drop)))
    gens = tuple(transfer(g, work) for g in ideal.nonzero_generators)
    basis = _cached_basis(work, gens)
    k = len(drop)
    target = polynomial_ring(keep, ideal.ring.order)
    survivors = tuple(
        transfer(g, target) for g in basis if all(e == 0 for m in g.keys() for e in m[:k])
    )
    logger.debug(f"Eliminated {drop}: {len(survivors)} of {len(basis)} basis elements survive")
    return Ideal(target, survivors)


def intersect(first: Ideal, second: Ideal) -> Ideal:
    """I ∩ J by eliminating t from tI + (1 - t)J."""
    if first.ring.symbols != second.ring.symbols:
        raise RingMismatchError("ideals of different rings")
    names = variable_names(first.ring)
    t = fresh_name(names, "t")
    work = polynomial_ring((t,) + names)
    tv = work.gens[0]
    gens = [tv * transfer(f, work) for f in first.nonzero_generators]
    gens += [(work.one - tv) * transfer(g, work) for g in second.nonzero_generators]
    result = eliminate(Ideal(work, tuple(gens)), [t])
    return reduced(result.transfer(first.ring))


def quotient_by_element(ideal: Ideal, g: PolyElement) -> Ideal:
    """I : g, computed as (I ∩ <g>) / g."""
    ring = ideal.ring
    g = transfer(g, ring)
    if not g:
        return Ideal.unit(ring)
    meet = intersect(ideal, Ideal(ring, (g,)))
    quotients = []
    for h in meet.generators:
        (q,), r = h.div([g])
        if r:
            raise RingMismatchError(f"intersection element not divisible by {g}")
        quotients.append(q)
    return reduced(Ideal(ring, tuple(quotients)))


def _quotient(ideal: Ideal, other: Ideal) -> Ideal:
    gens = other.nonzero_generators
    if not gens:
        return Ideal.unit(ideal.ring)
    result = quotient_by_element(ideal, gens[0])
    for g in gens[1:]:
        result = intersect(result, quotient_by_element(ideal, g))
    return result


def colon_and_saturate(
    ideal: Ideal,
    other: Ideal,
    mode: ColonMode = ColonMode.QUOTIENT,
    max_iterations: Optional[int] = None,
) -> Ideal:
    """
    Ideal quotient I:J, or saturation I:J^∞ by iterated quotients.

    Raises:
        IterationLimitError: if the saturation chain has not stopped after the cap
    """
    if ideal.ring.symbols != other.ring.symbols:
        raise RingMismatchError("ideals of different rings")
    if ColonMode(mode) is ColonMode.QUOTIENT:
        return _quotient(ideal, other)

    cap = max_iterations or settings.SATURATION_MAX_ITERATIONS
    current = reduced(ideal)
    for step in range(1, cap + 1):
        following = _quotient(current, other)
        if ideals_equal(following, current):
            logger.debug(f"Saturation stabilized after {step} quotient steps")
            return following
        current = following
    raise IterationLimitError(f"saturation did not stabilize within {cap} iterations")


def saturate_by_element(ideal: Ideal, g: PolyElement) -> Ideal:
    """I : g^∞ = (I + <1 - t g>) ∩ k[x]."""
    ring = ideal.ring
    g = transfer(g, ring)
    if not g:
        return Ideal.unit(ring)
    if g.is_ground:
        return ideal
    names = variable_names(ring)
    t = fresh_name(names, "t")
    work = polynomial_ring((t,) + names)
    gens = [transfer(f, work) for f in ideal.nonzero_generators]
    gens.append(work.one - work.gens[0] * transfer(g, work))
    result = eliminate(Ideal(work, tuple(gens)), [t])
    return reduced(result.transfer(ring))


def ideal_min(ideal: Ideal) -> Ideal:
    """
    Ideal generated by the lowest-degree forms of all elements of I.

    Homogenize with a fresh variable h and take a basis under a degree order
    that prefers larger powers of h; dehomogenized basis elements then carry
    their lowest-degree form in their leading part.

    Raises:
        ConstantTermError: if some generator has a nonzero constant term
    """
    ring = ideal.ring
    for g in ideal.nonzero_generators:
        if constant_term(g):
            raise ConstantTermError(f"generator {g} has nonzero constant term")
    if ideal.is_zero:
        return Ideal.zero(ring)

    names = variable_names(ring)
    aux = fresh_name(names, "h")
    n = len(names)
    order = WeightedDegreeOrder([1] * (n + 1), secondary=[0] * n + [1])
    homogeneous = [homogenize(g, aux) for g in ideal.nonzero_generators]
    work = polynomial_ring(names + (aux,), order)
    basis = groebner_polys([transfer(g, work) for g in homogeneous], work)

    forms = []
    for g in basis:
        terms: dict = {}
        for m, c in g.items():
            terms[m[:n]] = terms.get(m[:n], 0) + c
        dehom = ring.from_dict({m: c for m, c in terms.items() if c})
        if dehom:
            forms.append(min_form(dehom))
    return reduced(Ideal(ring, tuple(forms)))


def krull_dimension(ideal: Ideal) -> int:
    """
    Krull dimension of k[x]/I from the leading monomials of a degrevlex basis.

    Raises:
        UnitIdealError: for I = <1>
    """
    gb = groebner_basis(ideal, grevlex)
    if gb.is_unit:
        raise UnitIdealError("the unit ideal has no Krull dimension")
    n = ideal.ring.ngens
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in gb.leading_monomials]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            chosen = set(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0


def standard_monomials(
    gb: GroebnerBasis,
    degree: int,
    weights: Optional[Sequence[int]] = None,
) -> list[tuple[int, ...]]:
    """Monomials of (weighted) degree `degree` outside the leading-term ideal."""
    n = gb.ideal.ring.ngens
    weights = tuple(weights) if weights is not None else (1,) * n
    if any(w <= 0 for w in weights):
        raise ValidationError("standard monomials need positive weights")
    leads = gb.leading_monomials
    out = []
    for m in monomials_of_weight(weights, degree):
        if not any(all(a >= b for a, b in zip(m, lead)) for lead in leads):
            out.append(m)
    return out


def monomials_of_weight(weights: Sequence[int], degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors with weighted degree exactly `degree` (positive weights)."""
    weights = tuple(weights)
    result: list[tuple[int, ...]] = []

    def walk(i: int, remaining: int, prefix: list[int]):
        if i == len(weights) - 1:
            if remaining % weights[i] == 0:
                result.append(tuple(prefix + [remaining // weights[i]]))
            return
        for e in range(remaining // weights[i] + 1):
            walk(i + 1, remaining - e * weights[i], prefix + [e])

    if degree < 0 or not weights:
        return result
    walk(0, degree, [])
    return result


def hilbert_function(ideal: Ideal, degree: int, weights: Optional[Sequence[int]] = None) -> int:
    """dim_k (k[x]/I)_d for I homogeneous with respect to positive weights."""
    n = ideal.ring.ngens
    weights = tuple(weights) if weights is not None else (1,) * n
    gb = groebner_basis(ideal, WeightedDegreeOrder(weights))
    return len(standard_monomials(gb, degree, weights))
