"""
KBlowup Cyclic - Finite-Dimensional Algebras

An associative unital QQ-algebra given by structure constants
e_i * e_j = sum_k c[i][j][k] e_k. Associativity and the unit laws are
checked exactly on construction.

PURE MATH - No I/O
"""
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

import numpy as np
from loguru import logger
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from kblowup.core.config import settings
from kblowup.core.exceptions import UnitIdealError, ValidationError
from kblowup.groebner.ideals import groebner_basis, is_unit_ideal, krull_dimension, standard_monomials
from kblowup.poly.parser import format_monomial
from kblowup.poly.ring import Ideal, variable_names

Vector = tuple


def _vector(values: Sequence) -> Vector:
    return tuple(QQ.convert(v) for v in values)


@dataclass(frozen=True)
class FDAlgebra:
    """
    Structure constants of a finite-dimensional algebra.

    `structure_constants[i][j]` holds the coordinates of e_i * e_j and
    `unit` the coordinates of 1.
    """
    basis_labels: tuple[str, ...]
    structure_constants: tuple[tuple[Vector, ...], ...]
    unit: Vector

    def __post_init__(self):
        d = self.dimension
        if d == 0:
            raise ValidationError("the zero algebra has no unit")
        if d > settings.MAX_FD_DIMENSION:
            raise ValidationError(f"dimension {d} exceeds MAX_FD_DIMENSION={settings.MAX_FD_DIMENSION}")
        shape_ok = len(self.structure_constants) == d and all(
            len(row) == d and all(len(v) == d for v in row) for row in self.structure_constants
        )
        if not shape_ok or len(self.unit) != d:
            raise ValidationError(f"structure constants must have shape {d}x{d}x{d}")
        if not self.check_associative():
            raise ValidationError("structure constants are not associative")
        if not self.check_unit():
            raise ValidationError("unit vector is not a two-sided unit")

    @property
    def dimension(self) -> int:
        return len(self.basis_labels)

    def basis_vector(self, i: int) -> Vector:
        return tuple(QQ.one if k == i else QQ.zero for k in range(self.dimension))

    def multiply(self, u: Vector, v: Vector) -> Vector:
        d = self.dimension
        out = [QQ.zero] * d
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                c = self.structure_constants[i][j]
                for k in range(d):
                    if c[k]:
                        out[k] += a * b * c[k]
        return tuple(out)

    def check_associative(self) -> bool:
        d = self.dimension
        for i, j, k in product(range(d), repeat=3):
            left = self.multiply(self.structure_constants[i][j], self.basis_vector(k))
            right = self.multiply(self.basis_vector(i), self.structure_constants[j][k])
            if left != right:
                return False
        return True

    def check_unit(self) -> bool:
        for i in range(self.dimension):
            e = self.basis_vector(i)
            if self.multiply(self.unit, e) != e or self.multiply(e, self.unit) != e:
                return False
        return True

    def is_commutative(self) -> bool:
        d = self.dimension
        return all(
            self.structure_constants[i][j] == self.structure_constants[j][i]
            for i in range(d) for j in range(i + 1, d)
        )

    @property
    def unit_is_first(self) -> bool:
        return self.unit == self.basis_vector(0)

    def rebased_unit_first(self) -> "FDAlgebra":
        """Same algebra in a basis whose first vector is the unit."""
        if self.unit_is_first:
            return self
        d = self.dimension
        pivot = next(k for k, c in enumerate(self.unit) if c)
        keep = [k for k in range(d) if k != pivot]
        columns = [self.unit] + [self.basis_vector(k) for k in keep]
        change = DomainMatrix(
            [[columns[j][i] for j in range(d)] for i in range(d)], (d, d), QQ
        )
        inverse = change.inv()

        def coords(v: Vector) -> Vector:
            image = (inverse * DomainMatrix([[x] for x in v], (d, 1), QQ)).to_dod()
            return tuple(image.get(i, {}).get(0, QQ.zero) for i in range(d))

        table = tuple(
            tuple(coords(self.multiply(columns[a], columns[b])) for b in range(d))
            for a in range(d)
        )
        labels = ("1",) + tuple(self.basis_labels[k] for k in keep)
        logger.debug(f"Rebased {self.basis_labels} to unit-first basis {labels}")
        return FDAlgebra(labels, table, self.basis_vector(0))

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_table(
        cls,
        labels: Sequence[str],
        products: Sequence[Sequence[Sequence]],
        unit: Sequence,
    ) -> "FDAlgebra":
        table = tuple(tuple(_vector(v) for v in row) for row in products)
        return cls(tuple(labels), table, _vector(unit))

    @classmethod
    def ground_field(cls) -> "FDAlgebra":
        return cls.from_table(("1",), [[[1]]], [1])

    @classmethod
    def dual_numbers(cls) -> "FDAlgebra":
        """k[x]/<x^2>."""
        return cls.from_table(
            ("1", "x"),
            [[[1, 0], [0, 1]], [[0, 1], [0, 0]]],
            [1, 0],
        )

    @classmethod
    def matrix_algebra(cls) -> "FDAlgebra":
        """M_2(k) with the matrix units E11, E12, E21, E22."""
        units = [(0, 0), (0, 1), (1, 0), (1, 1)]
        table = []
        for i, j in units:
            row = []
            for k, l in units:
                v = [0] * 4
                if j == k:
                    v[units.index((i, l))] = 1
                row.append(v)
            table.append(row)
        return cls.from_table(("E11", "E12", "E21", "E22"), table, [1, 0, 0, 1])

    @classmethod
    def random_commutative(cls, seed: Optional[int] = None) -> "FDAlgebra":
        """k[x]/<x^2 - alpha x - beta> with small random integers alpha, beta."""
        rng = np.random.default_rng(settings.RANDOM_SEED if seed is None else seed)
        alpha, beta = (int(v) for v in rng.integers(-3, 4, size=2))
        logger.debug(f"Random commutative algebra: x^2 = {alpha}*x + {beta}")
        return cls.from_table(
            ("1", "x"),
            [[[1, 0], [0, 1]], [[0, 1], [beta, alpha]]],
            [1, 0],
        )

    @classmethod
    def from_quotient(cls, ideal: Ideal) -> "FDAlgebra":
        """
        k[x]/I for a zero-dimensional ideal, on its standard-monomial basis.

        Raises:
            UnitIdealError: for I = <1>
            ValidationError: if k[x]/I is not finite-dimensional
        """
        if is_unit_ideal(ideal):
            raise UnitIdealError("k[x]/<1> is the zero algebra")
        if krull_dimension(ideal) != 0:
            raise ValidationError("quotient is not finite-dimensional")
        gb = groebner_basis(ideal)
        monomials: list[tuple[int, ...]] = []
        degree = 0
        while True:
            layer = standard_monomials(gb, degree)
            if not layer:
                break
            monomials.extend(layer)
            degree += 1
        if len(monomials) > settings.MAX_FD_DIMENSION:
            raise ValidationError(
                f"k[x]/I has dimension {len(monomials)} > MAX_FD_DIMENSION={settings.MAX_FD_DIMENSION}"
            )
        ring = ideal.ring
        position = {m: k for k, m in enumerate(monomials)}
        d = len(monomials)
        table = []
        for a in monomials:
            row = []
            for b in monomials:
                product_exps = tuple(x + y for x, y in zip(a, b))
                remainder = gb.reduce(ring.from_dict({product_exps: QQ.one}))
                v = [QQ.zero] * d
                for m, c in remainder.terms():
                    v[position[m]] = c
                row.append(tuple(v))
            table.append(tuple(row))
        names = variable_names(ring)
        labels = tuple(format_monomial(m, names) or "1" for m in monomials)
        return cls(labels, tuple(table), tuple(QQ.one if k == 0 else QQ.zero for k in range(d)))
