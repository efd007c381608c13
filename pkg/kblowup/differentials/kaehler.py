"""
KBlowup Differentials - Kähler Differentials and Exterior Powers

Finitely presented modules over A = k[x]/J as cokernels; Ω_A is the
cokernel of the transposed Jacobian and Ω^p its exterior powers.

PURE MATH - No I/O
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from sympy.polys.rings import PolyElement

from kblowup.core.exceptions import ValidationError
from kblowup.groebner.modules import ModulePresentation
from kblowup.poly.ring import Ideal, variable_names


def wedge_sign(v: int, subset: tuple[int, ...]) -> tuple[int, Optional[tuple[int, ...]]]:
    """e_v ∧ e_subset = sign * e_(sorted union); sign 0 if v is already in subset."""
    if v in subset:
        return 0, None
    below = sum(1 for u in subset if u < v)
    return (-1) ** below, tuple(sorted(subset + (v,)))


@dataclass(frozen=True)
class FPModule:
    """
    Cokernel of a presentation over A = k[x]/ring_relations.

    Each row of `presentation_matrix` is one relation vector among the
    generators named by `generator_labels`.
    """
    ring_relations: Ideal
    presentation_matrix: tuple[tuple[PolyElement, ...], ...]
    generator_labels: tuple[str, ...]
    generator_subsets: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        for row in self.presentation_matrix:
            if len(row) != len(self.generator_labels):
                raise ValidationError("relation length differs from the number of generators")

    @property
    def rank(self) -> int:
        return len(self.generator_labels)

    @property
    def ring(self):
        return self.ring_relations.ring

    def relation_vectors(self) -> list[tuple[PolyElement, ...]]:
        """Presentation rows plus J·e_j, i.e. generators of the full submodule of A-free."""
        zero = self.ring.zero
        vectors = list(self.presentation_matrix)
        for g in self.ring_relations.nonzero_generators:
            for j in range(self.rank):
                vectors.append(tuple(g if k == j else zero for k in range(self.rank)))
        return vectors

    def with_free_summand(self, count: int = 1) -> "FPModule":
        zero = self.ring.zero
        rows = tuple(row + (zero,) * count for row in self.presentation_matrix)
        labels = self.generator_labels + tuple(f"f{k}" for k in range(count))
        return FPModule(self.ring_relations, rows, labels)

    def presentation(
        self,
        *,
        weights: Optional[Sequence[int]] = None,
        shifts: Optional[Sequence[int]] = None,
        secondary: Optional[Sequence[int]] = None,
        secondary_shifts: Optional[Sequence[int]] = None,
    ) -> ModulePresentation:
        return ModulePresentation(
            self.ring,
            self.rank,
            self.relation_vectors(),
            weights=weights,
            shifts=shifts,
            secondary=secondary,
            secondary_shifts=secondary_shifts,
        )


def kaehler(relations: Ideal) -> FPModule:
    """Ω_{A/k} on generators dx_i with relations df for f in J."""
    names = variable_names(relations.ring)
    rows = tuple(
        tuple(g.diff(x) for x in relations.ring.gens) for g in relations.nonzero_generators
    )
    return FPModule(
        ring_relations=relations,
        presentation_matrix=rows,
        generator_labels=tuple(f"d{n}" for n in names),
        generator_subsets=tuple((i,) for i in range(len(names))),
    )


def exterior_power(module: FPModule, p: int) -> FPModule:
    """
    Λ^p of a finitely presented module.

    Generators e_J for p-subsets J of generators; relations r ∧ e_K for each
    relation r and each (p-1)-subset K.
    """
    if p < 0:
        raise ValidationError(f"negative exterior power {p}")
    ring = module.ring
    subsets = list(combinations(range(module.rank), p))
    position = {J: k for k, J in enumerate(subsets)}
    labels = tuple("^".join(module.generator_labels[i] for i in J) or "1" for J in subsets)
    if p == 0:
        return FPModule(module.ring_relations, (), ("1",), ((),))

    rows = []
    for row in module.presentation_matrix:
        for K in combinations(range(module.rank), p - 1):
            vec = [ring.zero] * len(subsets)
            for i, coeff in enumerate(row):
                if not coeff:
                    continue
                sign, J = wedge_sign(i, K)
                if sign:
                    vec[position[J]] += sign * coeff
            if any(vec):
                rows.append(tuple(vec))
    return FPModule(module.ring_relations, tuple(rows), labels, tuple(subsets))


def forms(relations: Ideal, p: int) -> FPModule:
    """Ω^p_A."""
    return exterior_power(kaehler(relations), p)
