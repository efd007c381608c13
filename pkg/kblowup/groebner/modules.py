"""
KBlowup Groebner - Submodules of Free Modules

A submodule N of the free module F = k[x]^r is encoded by e-linear
polynomials in k[x, e_0, ..., e_{r-1}]; S-pairs are only formed between
elements at the same position. The order is graded by a primary weight
(plus per-position shifts) with an optional secondary weight, so that
standard monomials of bounded weight span the filtered pieces of F/N.

PURE MATH - No I/O
"""
from functools import cached_property
from typing import Mapping, Optional, Sequence

from loguru import logger
from sympy import QQ
from sympy.polys.rings import PolyElement, PolyRing

from kblowup.core.exceptions import ValidationError, WindowError
from kblowup.groebner.buchberger import groebner_polys
from kblowup.poly.orders import BlockEliminationOrder, WeightedDegreeOrder
from kblowup.poly.ring import fresh_name, polynomial_ring, variable_names

Vector = Sequence[PolyElement]
Basis = tuple[tuple[int, tuple[int, ...]], ...]


def monomials_up_to(weights: Sequence[int], bound: int) -> list[tuple[int, ...]]:
    """Exponent vectors with weighted degree <= bound (positive weights)."""
    weights = tuple(weights)
    out: list[tuple[int, ...]] = []
    if bound < 0:
        return out
    if not weights:
        return [()]

    def walk(i: int, remaining: int, prefix: tuple[int, ...]):
        if i == len(weights):
            out.append(prefix)
            return
        for e in range(remaining // weights[i] + 1):
            walk(i + 1, remaining - e * weights[i], prefix + (e,))

    walk(0, bound, ())
    return out


class ModulePresentation:
    """
    F/N for F free of rank `rank` over `base`, N spanned by `relations`.

    Args:
        base: Polynomial ring k[x]
        rank: Number of free generators
        relations: Vectors of length `rank` spanning N
        weights: Primary weight of each variable (default 1)
        shifts: Primary weight of each generator (default 0)
        secondary: Optional secondary weight of each variable
        secondary_shifts: Secondary weight of each generator
    """

    def __init__(
        self,
        base: PolyRing,
        rank: int,
        relations: Sequence[Vector],
        *,
        weights: Optional[Sequence[int]] = None,
        shifts: Optional[Sequence[int]] = None,
        secondary: Optional[Sequence[int]] = None,
        secondary_shifts: Optional[Sequence[int]] = None,
    ):
        n = base.ngens
        self.base = base
        self.rank = rank
        self.n = n
        self.weights = tuple(weights) if weights is not None else (1,) * n
        self.shifts = tuple(shifts) if shifts is not None else (0,) * rank
        self.secondary = tuple(secondary) if secondary is not None else None
        if self.secondary is not None:
            self.secondary_shifts = (
                tuple(secondary_shifts) if secondary_shifts is not None else (0,) * rank
            )
        else:
            self.secondary_shifts = None
        if len(self.weights) != n or len(self.shifts) != rank:
            raise ValidationError("weight vector lengths do not match the module")
        for vec in relations:
            if len(vec) != rank:
                raise ValidationError(f"relation of length {len(vec)} in a rank-{rank} module")
        self.relations = tuple(tuple(vec) for vec in relations)

        names = variable_names(base)
        taken = set(names)
        positions = []
        for j in range(rank):
            name = fresh_name(taken, f"e{j}")
            taken.add(name)
            positions.append(name)
        self.position_names = tuple(positions)
        primary = self.weights + self.shifts
        second = self.secondary + self.secondary_shifts if self.secondary is not None else None
        self.ring = polynomial_ring(names + self.position_names, WeightedDegreeOrder(primary, second))

    # -- encoding ---------------------------------------------------------

    def _admissible(self, lcm: tuple[int, ...]) -> bool:
        return sum(lcm[self.n:]) <= 1

    def monomial(self, position: int, exponents: tuple[int, ...]) -> tuple[int, ...]:
        unit = [0] * self.rank
        unit[position] = 1
        return tuple(exponents) + tuple(unit)

    def split(self, monomial: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
        tail = monomial[self.n:]
        return tail.index(1), tuple(monomial[: self.n])

    def encode(self, vector: Mapping[int, PolyElement] | Vector) -> PolyElement:
        items = vector.items() if isinstance(vector, Mapping) else enumerate(vector)
        terms: dict[tuple[int, ...], object] = {}
        for j, poly in items:
            for m, c in poly.items():
                key = self.monomial(j, m)
                terms[key] = terms.get(key, QQ.zero) + c
        return self.ring.from_dict({m: c for m, c in terms.items() if c})

    def decode(self, element: PolyElement) -> dict[int, PolyElement]:
        parts: dict[int, dict] = {}
        for m, c in element.items():
            j, base_m = self.split(m)
            parts.setdefault(j, {})[base_m] = c
        return {j: self.base.from_dict(d) for j, d in parts.items()}

    def term(self, position: int, exponents: tuple[int, ...], coeff=1) -> PolyElement:
        return self.ring.from_dict({self.monomial(position, exponents): QQ.convert(coeff)})

    # -- Groebner data ----------------------------------------------------

    @cached_property
    def basis(self) -> tuple[PolyElement, ...]:
        encoded = [self.encode(vec) for vec in self.relations]
        basis = groebner_polys(encoded, self.ring, admissible=self._admissible)
        logger.debug(f"Module basis of rank-{self.rank} presentation: {len(basis)} elements")
        return tuple(basis)

    @cached_property
    def _leads_by_position(self) -> dict[int, list[tuple[int, ...]]]:
        leads: dict[int, list[tuple[int, ...]]] = {}
        for g in self.basis:
            j, m = self.split(g.LM)
            leads.setdefault(j, []).append(m)
        return leads

    @property
    def is_zero_module(self) -> bool:
        return all(
            any(not any(m) for m in self._leads_by_position.get(j, [])) for j in range(self.rank)
        )

    def is_standard(self, position: int, exponents: tuple[int, ...]) -> bool:
        for lead in self._leads_by_position.get(position, ()):
            if all(a >= b for a, b in zip(exponents, lead)):
                return False
        return True

    def normal_form(self, element: PolyElement) -> PolyElement:
        if not element or not self.basis:
            return element
        return element.rem(list(self.basis))

    def contains(self, vector: Vector) -> bool:
        return not self.normal_form(self.encode(vector))

    # -- filtered pieces --------------------------------------------------

    def primary_degree(self, position: int, exponents: tuple[int, ...]) -> int:
        return sum(w * e for w, e in zip(self.weights, exponents)) + self.shifts[position]

    def secondary_degree(self, position: int, exponents: tuple[int, ...]) -> int:
        if self.secondary is None:
            return self.primary_degree(position, exponents)
        return sum(w * e for w, e in zip(self.secondary, exponents)) + self.secondary_shifts[position]

    def standard_basis(
        self,
        *,
        primary: Optional[int] = None,
        primary_max: Optional[int] = None,
        secondary_max: Optional[int] = None,
    ) -> Basis:
        """
        Standard monomials (position, exponents) with the given weight constraints.

        Either the primary weights are all positive and a primary bound is
        given, or the secondary weights are all positive and `secondary_max`
        is given; otherwise the piece is not finite.
        """
        out = []
        for j in range(self.rank):
            if secondary_max is not None and self.secondary is not None and all(w > 0 for w in self.secondary):
                candidates = monomials_up_to(self.secondary, secondary_max - self.secondary_shifts[j])
            elif all(w > 0 for w in self.weights) and (primary is not None or primary_max is not None):
                top = primary if primary is not None else primary_max
                candidates = monomials_up_to(self.weights, top - self.shifts[j])
            else:
                raise ValidationError("requested piece of the module is not finite-dimensional")
            for m in candidates:
                deg = self.primary_degree(j, m)
                if primary is not None and deg != primary:
                    continue
                if primary_max is not None and deg > primary_max:
                    continue
                if secondary_max is not None and self.secondary_degree(j, m) > secondary_max:
                    continue
                if self.is_standard(j, m):
                    out.append((j, m))
        return tuple(sorted(out))

    @staticmethod
    def index(basis: Basis) -> dict[tuple[int, tuple[int, ...]], int]:
        return {key: k for k, key in enumerate(basis)}

    def coordinates(
        self,
        element: PolyElement,
        index: Mapping[tuple[int, tuple[int, ...]], int],
        offset: int = 0,
    ) -> dict[int, object]:
        """
        Coordinates of the normal form of `element` in a standard basis.

        Raises:
            WindowError: if the normal form leaves the basis
        """
        coords: dict[int, object] = {}
        for m, c in self.normal_form(element).items():
            key = self.split(m)
            if key not in index:
                raise WindowError(f"monomial {key} outside the truncation basis")
            coords[index[key] + offset] = c
        return coords

    # -- saturation -------------------------------------------------------

    def saturate(self, g: PolyElement) -> "ModulePresentation":
        """N : g^∞ inside F, as a presentation with the same gradings."""
        if g.is_ground:
            return self
        names = variable_names(self.ring)
        t = fresh_name(names, "t")
        work = polynomial_ring((t,) + names, BlockEliminationOrder(1))
        n, r = self.n, self.rank

        def lift(element: PolyElement) -> PolyElement:
            return work.from_dict({(0,) + m: c for m, c in element.items()})

        gens = [lift(self.encode(vec)) for vec in self.relations]
        one_minus = work.one - work.gens[0] * work.from_dict(
            {(0,) + m + (0,) * r: c for m, c in g.items()}
        )
        for j in range(r):
            gens.append(one_minus * work.gens[1 + n + j])
        basis = groebner_polys(gens, work, admissible=lambda lcm: sum(lcm[1 + n:]) <= 1)

        vectors = []
        for h in basis:
            if any(m[0] for m in h.keys()):
                continue
            element = self.ring.from_dict({m[1:]: c for m, c in h.items()})
            parts = self.decode(element)
            vectors.append(tuple(parts.get(j, self.base.zero) for j in range(r)))
        logger.debug(f"Saturated rank-{r} module: {len(vectors)} generators")
        return ModulePresentation(
            self.base,
            self.rank,
            vectors,
            weights=self.weights,
            shifts=self.shifts,
            secondary=self.secondary,
            secondary_shifts=self.secondary_shifts,
        )
