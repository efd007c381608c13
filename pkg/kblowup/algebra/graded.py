"""
KBlowup Algebra - Graded Presentations

k[v]/J with a non-negative integer weight per variable; Proj is taken
over the variables of positive weight.

PURE MATH - No I/O
"""
from dataclasses import dataclass
from typing import Mapping, Optional

from loguru import logger
from sympy.polys.rings import PolyRing

from kblowup.core.config import settings
from kblowup.core.exceptions import ValidationError
from kblowup.groebner.ideals import contains, hilbert_function, ideals_equal, reduced
from kblowup.poly.ring import (
    Ideal,
    is_weighted_homogeneous,
    polynomial_ring,
    substitute_zero,
    transfer,
    variable_names,
)


@dataclass(frozen=True)
class GradedAlgebraPresentation:
    """A quotient k[v]/J graded by per-variable weights."""
    ambient: PolyRing
    relations: Ideal
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) != self.ambient.ngens:
            raise ValidationError("one weight per variable is required")
        if any(w < 0 for w in self.weights):
            raise ValidationError(f"negative weight in {self.weights}")
        if self.relations.ring != self.ambient:
            raise ValidationError("relations must live in the ambient ring")

    @property
    def names(self) -> tuple[str, ...]:
        return variable_names(self.ambient)

    @property
    def positive_indices(self) -> tuple[int, ...]:
        return tuple(i for i, w in enumerate(self.weights) if w > 0)

    @property
    def has_positive_variable(self) -> bool:
        return bool(self.positive_indices)

    def is_homogeneous(self) -> bool:
        return all(is_weighted_homogeneous(g, self.weights) for g in self.relations.generators)

    def pruned(self) -> "GradedAlgebraPresentation":
        """Drop weight-zero variables that already lie in J, setting them to zero."""
        dead = [
            i for i, w in enumerate(self.weights)
            if w == 0 and contains(self.relations, self.ambient.gens[i])
        ]
        if not dead:
            return self
        keep = [i for i in range(self.ambient.ngens) if i not in dead]
        if not keep:
            raise ValidationError("pruning would remove every variable")
        target = polynomial_ring([self.names[i] for i in keep])
        gens = []
        for g in self.relations.generators:
            h = substitute_zero(g, dead)
            if h:
                gens.append(transfer(h, target))
        logger.debug(f"Pruned variables {[self.names[i] for i in dead]}")
        return GradedAlgebraPresentation(
            ambient=target,
            relations=reduced(Ideal(target, tuple(gens))),
            weights=tuple(self.weights[i] for i in keep),
        )

    def hilbert_function(self, degree: int) -> int:
        if not all(w > 0 for w in self.weights):
            raise ValidationError("Hilbert function needs positive weights; prune first")
        return hilbert_function(self.relations, degree, self.weights)

    def hilbert_series(self, bound: Optional[int] = None) -> list[int]:
        bound = settings.HILBERT_BOUND if bound is None else bound
        return [self.hilbert_function(d) for d in range(bound + 1)]


@dataclass(frozen=True)
class IsomorphismCheck:
    """Evidence for a graded isomorphism given by a variable renaming."""
    hilbert_agree: bool
    map_agree: bool
    bound: int
    hilbert_left: tuple[int, ...] = ()
    hilbert_right: tuple[int, ...] = ()

    @property
    def isomorphic(self) -> bool:
        return self.hilbert_agree and self.map_agree


def graded_isomorphism_check(
    left: GradedAlgebraPresentation,
    right: GradedAlgebraPresentation,
    renaming: Mapping[str, str],
    bound: Optional[int] = None,
) -> IsomorphismCheck:
    """
    Compare Hilbert functions up to `bound` and test a candidate map.

    The candidate map sends each variable of `left` to the variable of
    `right` named by `renaming`; it is an isomorphism when the renamed
    relations generate the same ideal.
    """
    bound = settings.HILBERT_BOUND if bound is None else bound
    h_left = tuple(left.hilbert_series(bound))
    h_right = tuple(right.hilbert_series(bound))

    target_names = [renaming[name] for name in left.names]
    if sorted(target_names) != sorted(right.names):
        return IsomorphismCheck(h_left == h_right, False, bound, h_left, h_right)
    renamed_ring = polynomial_ring(target_names)
    renamed = Ideal(
        renamed_ring,
        tuple(renamed_ring.from_dict(dict(g.items())) for g in left.relations.generators),
    ).transfer(right.ambient)
    map_agree = ideals_equal(renamed, right.relations)
    return IsomorphismCheck(h_left == h_right, map_agree, bound, h_left, h_right)
