"""
KBlowup Differentials - Algebraic de Rham Cohomology

The de Rham complex of A = k[x]/J is filtered by degree with dx of weight
one, so d preserves the filtration; H^p is read off finite pieces F_D for
growing D and reported with its stabilization history.
"""
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from loguru import logger
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from kblowup.core import linalg
from kblowup.core.config import settings
from kblowup.core.exceptions import NotSmoothError, ValidationError
from kblowup.core.stability import StabilizedDimension, is_stable
from kblowup.differentials.kaehler import forms, wedge_sign
from kblowup.geometry.smoothness import is_smooth
from kblowup.groebner.ideals import is_unit_ideal
from kblowup.poly.ring import Ideal, is_weighted_homogeneous


@dataclass
class TruncatedComplex:
    """
    A finite cochain complex C_0 -> C_1 -> ... of QQ-vector spaces.

    `differentials[k]` is the matrix of C_k -> C_{k+1} (shape dim_{k+1} x dim_k).
    """
    dimensions: list[int]
    differentials: list[DomainMatrix]
    degree_window: tuple[int, int] = (0, 0)
    truncation_bound: int = 0
    labels: list[str] = field(default_factory=list)

    def rank(self, k: int) -> int:
        if k < 0 or k >= len(self.differentials):
            return 0
        return linalg.rank(self.differentials[k])

    def cohomology(self, k: int) -> int:
        if k < 0 or k >= len(self.dimensions):
            return 0
        return self.dimensions[k] - self.rank(k) - self.rank(k - 1)

    def check_square_zero(self) -> bool:
        for k in range(len(self.differentials) - 1):
            product = linalg.matmul(self.differentials[k + 1], self.differentials[k])
            if not linalg.is_zero(product):
                return False
        return True


class DeRhamWindow:
    """
    Filtered pieces of Ω^•_A up to a degree bound.

    Args:
        relations: Defining ideal J of A
        degree_bound: Largest filtration degree D
        max_form_degree: Highest Ω^p kept (defaults to the number of variables)
    """

    def __init__(self, relations: Ideal, degree_bound: int, max_form_degree: Optional[int] = None):
        ring = relations.ring
        n = ring.ngens
        self.relations = relations
        self.degree_bound = degree_bound
        self.top = n if max_form_degree is None else min(max_form_degree, n)

        self.modules = []
        self.subsets = []
        self.bases = []
        self.degrees = []
        for p in range(self.top + 2):
            module = forms(relations, p)
            presentation = module.presentation(weights=(1,) * n, shifts=(p,) * module.rank)
            basis = presentation.standard_basis(primary_max=degree_bound) if module.rank else ()
            self.modules.append(presentation)
            self.subsets.append(module.generator_subsets)
            self.bases.append(basis)
            self.degrees.append([presentation.primary_degree(j, m) for j, m in basis])

        self.matrices = [self._differential(p) for p in range(self.top + 1)]
        logger.debug(
            f"de Rham window D={degree_bound}: dims {[len(b) for b in self.bases[: self.top + 1]]}"
        )

    def _differential(self, p: int) -> DomainMatrix:
        source, target = self.modules[p], self.modules[p + 1]
        target_index = target.index(self.bases[p + 1])
        subset_pos = {J: k for k, J in enumerate(self.subsets[p + 1])}
        columns = []
        for j, m in self.bases[p]:
            J = self.subsets[p][j]
            terms: dict = {}
            for v, e in enumerate(m):
                if not e:
                    continue
                sign, K = wedge_sign(v, J)
                if not sign:
                    continue
                exps = m[:v] + (e - 1,) + m[v + 1:]
                key = target.monomial(subset_pos[K], exps)
                terms[key] = terms.get(key, QQ.zero) + sign * e
            image = target.ring.from_dict({k: c for k, c in terms.items() if c}) if terms else target.ring.zero
            columns.append(target.coordinates(image, target_index))
        return linalg.from_columns(columns, len(self.bases[p + 1]))

    def _restricted(self, p: int, degree: int) -> DomainMatrix:
        rows = [k for k, d in enumerate(self.degrees[p + 1]) if d <= degree]
        cols = [k for k, d in enumerate(self.degrees[p]) if d <= degree]
        return linalg.submatrix(self.matrices[p], rows, cols)

    def dimension(self, p: int, degree: int) -> int:
        if p < 0 or p > self.top:
            return 0
        return sum(1 for d in self.degrees[p] if d <= degree)

    def rank(self, p: int, degree: int) -> int:
        if p < 0 or p > self.top:
            return 0
        return linalg.rank(self._restricted(p, degree))

    def complex(self, degree: Optional[int] = None) -> TruncatedComplex:
        degree = self.degree_bound if degree is None else degree
        return TruncatedComplex(
            dimensions=[self.dimension(p, degree) for p in range(self.top + 1)],
            differentials=[self._restricted(p, degree) for p in range(self.top)],
            degree_window=(0, degree),
            truncation_bound=degree,
            labels=[f"Omega^{p}" for p in range(self.top + 1)],
        )

    def _history(self, value) -> list[int]:
        return [value(D) for D in range(self.degree_bound + 1)]

    def cohomology(self, p: int) -> StabilizedDimension:
        history = self._history(
            lambda D: self.dimension(p, D) - self.rank(p, D) - self.rank(p - 1, D)
        )
        return _stabilized(history, self.degree_bound, f"H^{p}_dR")

    def exact_quotient(self, p: int) -> StabilizedDimension:
        """Ω^p / dΩ^{p-1}."""
        history = self._history(lambda D: self.dimension(p, D) - self.rank(p - 1, D))
        return _stabilized(history, self.degree_bound, f"Omega^{p}/dOmega^{p - 1}")

    def cocycles(self, p: int) -> StabilizedDimension:
        """Z^p = ker d on Ω^p."""
        history = self._history(lambda D: self.dimension(p, D) - self.rank(p, D))
        return _stabilized(history, self.degree_bound, f"Z^{p}")


def _stabilized(history: list[int], bound: int, label: str) -> StabilizedDimension:
    stable = is_stable(history)
    if not stable:
        logger.warning(f"{label} not stable up to degree {bound}: {history}")
    else:
        logger.debug(f"{label} = {history[-1]} (history {history})")
    return StabilizedDimension(value=history[-1], stable=stable, history=history, bound=bound, label=label)


@lru_cache(maxsize=64)
def de_rham_window(relations: Ideal, degree_bound: int) -> DeRhamWindow:
    return DeRhamWindow(relations, degree_bound)


def euler_weights(relations: Ideal) -> Optional[tuple[int, ...]]:
    """Positive weights making every generator weighted-homogeneous, if easily found."""
    n = relations.ring.ngens
    gens = relations.nonzero_generators
    if all(is_weighted_homogeneous(g, (1,) * n) for g in gens):
        return (1,) * n
    columns = []
    for g in gens:
        monos = list(g.keys())
        for m in monos[1:]:
            columns.append({i: monos[0][i] - m[i] for i in range(n) if monos[0][i] != m[i]})
    kernel = linalg.nullspace(linalg.from_columns(columns, n).transpose())
    if kernel.shape[1] != 1:
        return None
    vector = [kernel.to_dod().get(i, {}).get(0, QQ.zero) for i in range(n)]
    if all(v > 0 for v in vector) or all(v < 0 for v in vector):
        denominator = math.lcm(*(int(QQ.denom(v)) for v in vector))
        scaled = [abs(int(QQ.numer(v * denominator))) for v in vector]
        common = math.gcd(*scaled)
        return tuple(s // common for s in scaled)
    return None


def naive_de_rham_cohomology(relations: Ideal, p: int, degree_bound: Optional[int] = None) -> StabilizedDimension:
    """H^p of the (possibly singular) algebraic de Rham complex, windowed."""
    if p < 0:
        raise ValidationError(f"negative cohomological degree {p}")
    bound = settings.DEGREE_BOUND if degree_bound is None else degree_bound
    if p > relations.ring.ngens:
        return StabilizedDimension.exact(0, f"H^{p}_dR")
    return de_rham_window(relations, bound).cohomology(p)


def de_rham_cohomology(
    relations: Ideal,
    p: int,
    degree_bound: Optional[int] = None,
    use_shortcut: bool = True,
) -> StabilizedDimension:
    """
    H^p_dR(A) for smooth A.

    Weighted-homogeneous A with positive weights is contractible by the
    Euler field: H^0 = k and H^{p>0} = 0 without a window computation.

    Raises:
        NotSmoothError: if Spec A has a singular point
    """
    if is_unit_ideal(relations):
        return StabilizedDimension.exact(0, f"H^{p}_dR")
    if not is_smooth(relations):
        raise NotSmoothError("de Rham cohomology requested for a singular algebra")
    if use_shortcut and euler_weights(relations) is not None:
        logger.debug("Euler shortcut: weighted-homogeneous algebra")
        return StabilizedDimension.exact(1 if p == 0 else 0, f"H^{p}_dR")
    return naive_de_rham_cohomology(relations, p, degree_bound)
