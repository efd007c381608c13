"""
KBlowup Cyclic - Hodge Components of Smooth Algebras

For a smooth affine A the Hodge components are de Rham data:

    HC_n^(i) = Ω^n / dΩ^{n-1}   i = n
             = H^{2i-n}          n/2 <= i < n
             = 0                 otherwise
    HN_n^(i) = Z^n               i = n
             = H^{2i-n}          i > n
             = 0                 i < n
    HP_n^(i) = H^{2i-n}

For a smooth projective scheme HC_n^(i) is the sum of h^q(Ω^p) over
p + q = 2i - n with p <= i.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from loguru import logger

from kblowup.core.config import settings
from kblowup.core.exceptions import NotSmoothError, StabilizationError, UnitIdealError, ValidationError
from kblowup.core.stability import StabilizedDimension
from kblowup.cyclic.bicomplex import CyclicTheory
from kblowup.differentials import ProjectiveFormComplex, de_rham_cohomology, de_rham_window, hodge_number
from kblowup.exactseq import DimensionValue, LESInstance, SolveOutcome, solve
from kblowup.geometry.blowup import ChartCover
from kblowup.geometry.smoothness import is_smooth
from kblowup.groebner.ideals import krull_dimension
from kblowup.poly.ring import Ideal


def dimension_value(observed: StabilizedDimension) -> DimensionValue:
    """
    Stable windows become known dimensions, growing ones symbolic.

    Raises:
        StabilizationError: if the window neither settles nor grows
    """
    if observed.stable:
        return DimensionValue.known(observed.value)
    if observed.growing:
        return DimensionValue.symbolic(f"{observed.label} grows {observed.history[-3:]}")
    raise StabilizationError(
        f"{observed.label} neither stable nor growing up to bound {observed.bound}: {observed.history}"
    )


def smooth_hodge(
    relations: Ideal,
    theory: CyclicTheory | str,
    n: int,
    i: int,
    degree_bound: Optional[int] = None,
) -> DimensionValue:
    """
    Hodge component theory_n^(i) of a smooth affine algebra k[x]/J.

    Raises:
        NotSmoothError: if Spec A is singular
        StabilizationError: if a window neither settles nor grows
    """
    theory = CyclicTheory(theory)
    if not is_smooth(relations):
        raise NotSmoothError("Hodge formulas need a smooth algebra")
    bound = settings.DEGREE_BOUND if degree_bound is None else degree_bound

    def de_rham(p: int) -> DimensionValue:
        if p < 0:
            return DimensionValue.zero()
        return dimension_value(de_rham_cohomology(relations, p, bound))

    if theory is CyclicTheory.HC:
        if i < 0 or n < 0 or i > n:
            return DimensionValue.zero()
        if i == n:
            return dimension_value(de_rham_window(relations, bound).exact_quotient(n))
        if 2 * i >= n:
            return de_rham(2 * i - n)
        return DimensionValue.zero()
    if theory is CyclicTheory.HN:
        if i < n:
            return DimensionValue.zero()
        if i == n:
            if n < 0:
                return DimensionValue.zero()
            return dimension_value(de_rham_window(relations, bound).cocycles(n))
        return de_rham(2 * i - n)
    return de_rham(2 * i - n)


@dataclass
class HodgeTable:
    """(theory, n, i) -> DimensionValue."""
    entries: dict[tuple[CyclicTheory, int, int], DimensionValue] = field(default_factory=dict)

    def set(self, theory: CyclicTheory | str, n: int, i: int, value: DimensionValue) -> None:
        self.entries[(CyclicTheory(theory), n, i)] = value

    def get(self, theory: CyclicTheory | str, n: int, i: int) -> DimensionValue:
        return self.entries.get((CyclicTheory(theory), n, i), DimensionValue.unknown())

    def period_violations(self) -> list[tuple[int, int]]:
        """(n, i) where HP_n^(i) and HP_{n+2}^(i+1) are both known and differ."""
        bad = []
        for (theory, n, i), value in self.entries.items():
            if theory is not CyclicTheory.HP or not value.is_finite:
                continue
            shifted = self.entries.get((CyclicTheory.HP, n + 2, i + 1))
            if shifted is not None and shifted.is_finite and shifted != value:
                bad.append((n, i))
        return bad

    @property
    def is_periodic(self) -> bool:
        return not self.period_violations()

    def to_records(self) -> list[dict]:
        return [
            {"theory": t.value, "n": n, "i": i, "value": str(v)}
            for (t, n, i), v in sorted(self.entries.items(), key=lambda kv: (kv[0][0].value, kv[0][1], kv[0][2]))
        ]


def smooth_hodge_table(
    relations: Ideal,
    n_range: Iterable[int],
    i_range: Iterable[int],
    theories: Iterable[CyclicTheory | str] = tuple(CyclicTheory),
    degree_bound: Optional[int] = None,
) -> HodgeTable:
    table = HodgeTable()
    i_values = list(i_range)
    for theory in theories:
        for n in n_range:
            for i in i_values:
                table.set(theory, n, i, smooth_hodge(relations, theory, n, i, degree_bound))
    if not table.is_periodic:
        logger.warning(f"HP period-2 violations at {table.period_violations()}")
    return table


def hodge_sbi_instance(
    relations: Ideal,
    i: int,
    n_range: Iterable[int],
    degree_bound: Optional[int] = None,
) -> LESInstance:
    """
    ... -> HC^(i-1)_{n-1} -> HN^(i)_n -> HP^(i)_n -> HC^(i-1)_{n-2} -> HN^(i)_{n-1} -> ...

    populated from the smooth formulas, highest n first.
    """
    given = list(n_range)
    if not given:
        raise ValidationError("empty degree range")
    degrees = list(range(max(given), min(given) - 1, -1))
    entries = []
    for n in degrees:
        entries += [
            (f"HN^({i})_{n}", smooth_hodge(relations, CyclicTheory.HN, n, i, degree_bound), "smooth formula"),
            (f"HP^({i})_{n}", smooth_hodge(relations, CyclicTheory.HP, n, i, degree_bound), "smooth formula"),
            (f"HC^({i - 1})_{n - 2}", smooth_hodge(relations, CyclicTheory.HC, n - 2, i - 1, degree_bound),
             "smooth formula"),
        ]
    return LESInstance.build(entries, name=f"Hodge SBI i={i}")


def hodge_sbi_check(
    relations: Ideal,
    i: int,
    n_range: Iterable[int],
    degree_bound: Optional[int] = None,
) -> SolveOutcome:
    """
    Solve the smooth Hodge SBI sequence.

    Raises:
        InconsistentSequenceError: if the smooth formulas violate exactness
    """
    return solve(hodge_sbi_instance(relations, i, n_range, degree_bound))


@lru_cache(maxsize=16)
def form_engine(cover: ChartCover) -> ProjectiveFormComplex:
    return ProjectiveFormComplex(cover)


def cover_dimension(cover: ChartCover) -> int:
    dims = []
    for chart in cover.charts:
        try:
            dims.append(krull_dimension(chart.ring_relations))
        except UnitIdealError:
            continue
    return max(dims) if dims else -1


def projective_hc_hodge(
    cover: ChartCover,
    n: int,
    i: int,
    window: Optional[int] = None,
) -> DimensionValue:
    """
    HC_n^(i) of a smooth projective scheme from Čech Hodge numbers.

    Raises:
        NotSmoothError: if a chart is singular
        StabilizationError: if a Hodge number does not settle
    """
    if i < 0:
        return DimensionValue.zero()
    total = _hodge_sum(cover, 2 * i - n, i, window)
    logger.debug(f"Projective HC_{n}^({i}) = {total}")
    return DimensionValue.known(total)


def projective_de_rham(cover: ChartCover, m: int, window: Optional[int] = None) -> DimensionValue:
    """H^m_dR of a smooth projective scheme as the sum of h^q(Ω^p) over p + q = m."""
    return DimensionValue.known(_hodge_sum(cover, m, m, window))


def _hodge_sum(cover: ChartCover, m: int, p_max: int, window: Optional[int]) -> int:
    if not all(is_smooth(chart.ring_relations) for chart in cover.charts):
        raise NotSmoothError("projective Hodge components need smooth charts")
    dim = cover_dimension(cover)
    if dim < 0 or m < 0:
        return 0
    engine = form_engine(cover)
    total = 0
    for p in range(0, min(p_max, dim) + 1):
        q = m - p
        if 0 <= q <= dim:
            total += hodge_number(cover, p, q, window, engine=engine).require_stable()
    return total
