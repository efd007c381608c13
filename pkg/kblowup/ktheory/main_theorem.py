"""
KBlowup KTheory - Filtered Deformations and Negative K-Theory

For R = k[x]/I with I_min = J, E = Proj(k[x]/J) smooth and a single
isolated singularity at the origin, blowing up the origin gives, for
each n < 0 and i >= 0, an exact sequence

    ... -> HC_{n+1}^(i)(E) -> K~_n^(i+1)(R) -> HC_n^(i)(Y) -> HC_n^(i)(E) -> K~_{n-1}^(i+1)(R) -> ...

with HC_n^(i)(Y) = H^{2i-n}(Y, Ω^{<=i}) and HC_n^(i)(E) a Hodge-number sum.
K~^(0) vanishes, and K~_n = 0 for n < -dim R.
"""
from dataclasses import dataclass, field
from typing import Iterable, Optional

from loguru import logger

from kblowup.algebra.graded import GradedAlgebraPresentation
from kblowup.algebra.rees import filtered_deformation_report
from kblowup.core.exceptions import HypothesisError, ValidationError
from kblowup.cyclic.hodge import dimension_value, form_engine, projective_hc_hodge
from kblowup.cyclic.six_term import DeRhamBounds, observed
from kblowup.differentials import FormSheaf, cech_sheaf_cohomology, truncated_derham_hyper
from kblowup.exactseq import DimensionValue, LESInstance, solve
from kblowup.geometry.blowup import BlowupSquare, ChartCover, blowup_square, proj_charts
from kblowup.geometry.smoothness import SingularityVerdict, is_smooth, isolated_singularity_at_origin
from kblowup.groebner.ideals import krull_dimension
from kblowup.poly.ring import Ideal


@dataclass
class HypothesisReport:
    """Verdicts for the main sequence; failures are recorded, not raised."""
    i_min: Ideal
    imin_proper: bool
    graded_isomorphic: bool
    e_smooth: bool
    y_smooth: bool
    isolated: SingularityVerdict
    dimension: int
    exceptional: ChartCover
    square: Optional[BlowupSquare] = None
    reasons: list[str] = field(default_factory=list)

    @property
    def passes(self) -> bool:
        return not self.reasons

    @property
    def smooth_case(self) -> bool:
        return self.isolated is SingularityVerdict.SMOOTH

    def summary(self) -> dict:
        return {
            "imin_proper": self.imin_proper,
            "graded_isomorphic": self.graded_isomorphic,
            "E_smooth": self.e_smooth,
            "Y_smooth": self.y_smooth,
            "isolated_at_origin": self.isolated.value,
            "dimension": self.dimension,
            "passes": self.passes,
        }


def verify_hypotheses(ideal: Ideal) -> HypothesisReport:
    """
    Check the hypotheses of the main sequence for R = k[x]/I.

    Y-chart smoothness is measured independently of E-smoothness.

    Raises:
        OriginNotOnSchemeError: if a generator has a nonzero constant term
    """
    deformation = filtered_deformation_report(ideal)
    i_min = deformation.i_min
    reasons: list[str] = []
    if not deformation.is_proper:
        reasons.append("I_min is the unit ideal")

    cone = GradedAlgebraPresentation(ambient=i_min.ring, relations=i_min, weights=(1,) * i_min.ring.ngens)
    exceptional = ChartCover(cone, proj_charts(cone))
    e_smooth = all(is_smooth(chart.ring_relations) for chart in exceptional.charts)
    if not e_smooth:
        reasons.append("Proj(k[x]/I_min) is singular")

    verdict = isolated_singularity_at_origin(ideal)
    if verdict is SingularityVerdict.SMOOTH:
        reasons.append("Spec R is smooth: K~ vanishes identically")
    elif verdict is SingularityVerdict.OTHER:
        reasons.append("singular locus is not exactly the origin")

    dimension = krull_dimension(ideal)
    square = blowup_square(ideal, Ideal.maximal_at_origin(ideal.ring))
    y_smooth = square.y_smooth()
    if e_smooth and not y_smooth and verdict is SingularityVerdict.ISOLATED_AT_ORIGIN:
        logger.warning("E is smooth but a Y chart is singular")
    report = HypothesisReport(
        i_min=i_min,
        imin_proper=deformation.is_proper,
        graded_isomorphic=deformation.isomorphism.isomorphic,
        e_smooth=e_smooth,
        y_smooth=y_smooth,
        isolated=verdict,
        dimension=dimension,
        exceptional=exceptional,
        square=square,
        reasons=reasons,
    )
    logger.info(f"Hypotheses: {report.summary()}")
    return report


def ktilde_label(n: int, j: int) -> str:
    return f"K~^({j})_{n}"


def _require(report: HypothesisReport) -> None:
    if not report.passes:
        raise HypothesisError("; ".join(report.reasons))


def main_les(
    ideal: Ideal,
    i: int,
    n_range: Iterable[int],
    bounds: DeRhamBounds = DeRhamBounds(),
    report: Optional[HypothesisReport] = None,
) -> LESInstance:
    """
    Populate and solve the sequence for Hodge index i over the degrees in n_range.

    Raises:
        ValidationError: if some n >= 0 or i < 0
        HypothesisError: if the hypotheses fail
    """
    given = list(n_range)
    if not given:
        raise ValidationError("empty degree range")
    if max(given) >= 0:
        raise ValidationError("the sequence is only identified for n < 0")
    if i < 0:
        raise ValidationError(f"negative Hodge index {i}")
    report = report or verify_hypotheses(ideal)
    _require(report)
    y_cover = report.square.y_cover
    e_cover = report.exceptional
    window = bounds.cech_window

    def y_term(n: int) -> tuple[DimensionValue, str]:
        return observed(
            lambda: dimension_value(truncated_derham_hyper(y_cover, i, 2 * i - n, window, engine=form_engine(y_cover))),
            f"HC_{n}^({i})(Y)",
        )

    def e_term(n: int) -> tuple[DimensionValue, str]:
        return observed(lambda: projective_hc_hodge(e_cover, n, i, window), f"HC_{n}^({i})(E)")

    degrees = list(range(max(given), min(given) - 1, -1))
    value, note = e_term(degrees[0] + 1)
    entries = [(f"HC_{degrees[0] + 1}^({i})(E)", value, note)]
    for n in degrees:
        entries.append((ktilde_label(n, i + 1), DimensionValue.unknown(), "cdh hypercohomology"))
        value, note = y_term(n)
        entries.append((f"HC_{n}^({i})(Y)", value, note))
        value, note = e_term(n)
        entries.append((f"HC_{n}^({i})(E)", value, note))
    outcome = solve(LESInstance.build(entries, name=f"main sequence i={i}"))
    outcome.instance.notes.extend(str(d) for d in outcome.log)
    return outcome.instance


@dataclass
class KTildeLowDegree:
    """K~_n = 0 below -d and the surjection K~_{-d} -> H^d(Y, O_Y)."""
    dimension: int
    vanishing_below: Optional[int]
    surjection_target: DimensionValue
    smooth_case: bool = False
    note: str = ""

    @property
    def stabilized(self) -> bool:
        return self.surjection_target.is_finite

    def vanishes(self, n: int) -> bool:
        """True when K~_n(R) = 0 is certified."""
        return self.smooth_case or (self.vanishing_below is not None and n < self.vanishing_below)


def ktilde_low_degree(
    ideal: Ideal,
    bounds: DeRhamBounds = DeRhamBounds(),
    report: Optional[HypothesisReport] = None,
) -> KTildeLowDegree:
    """
    Vanishing range and surjection target of the low-degree K~ groups.

    A smooth Spec R is reported as the smooth case: K~ vanishes in every degree.

    Raises:
        HypothesisError: if a hypothesis other than singularity fails
    """
    report = report or verify_hypotheses(ideal)
    d = report.dimension
    if report.smooth_case:
        logger.info("Smooth input: K~ vanishes in every degree")
        return KTildeLowDegree(dimension=d, vanishing_below=None,
                               surjection_target=DimensionValue.zero(), smooth_case=True,
                               note="smooth case")
    _require(report)
    y_cover = report.square.y_cover
    target, note = observed(
        lambda: dimension_value(cech_sheaf_cohomology(
            y_cover, FormSheaf(p=0), d, bounds.cech_window, engine=form_engine(y_cover),
        )),
        f"H^{d}(Y, O)",
    )
    logger.info(f"K~_n = 0 for n < {-d}; K~_{-d} surjects onto H^{d}(Y, O) of dim {target} ({note})")
    return KTildeLowDegree(dimension=d, vanishing_below=-d, surjection_target=target, note=note)


@dataclass
class MainTheoremReport:
    hypotheses: HypothesisReport
    les_per_i: dict[int, LESInstance] = field(default_factory=dict)
    ktilde: dict[tuple[int, int], DimensionValue] = field(default_factory=dict)
    low_degree: Optional[KTildeLowDegree] = None
    log: list[str] = field(default_factory=list)

    @property
    def surjection_target_dim(self) -> DimensionValue:
        return self.low_degree.surjection_target if self.low_degree else DimensionValue.unknown()


def main_theorem(
    ideal: Ideal,
    i_range: Iterable[int],
    n_range: Iterable[int],
    bounds: DeRhamBounds = DeRhamBounds(),
    report: Optional[HypothesisReport] = None,
) -> MainTheoremReport:
    """
    Run the whole pipeline: hypotheses, one sequence per Hodge index, K~ deductions.

    K~^(0)_n is recorded as zero without computation.

    Raises:
        HypothesisError: if the hypotheses fail
    """
    degrees = list(n_range)
    report = report or verify_hypotheses(ideal)
    _require(report)
    result = MainTheoremReport(hypotheses=report)
    for n in degrees:
        result.ktilde[(n, 0)] = DimensionValue.zero()
    for i in i_range:
        instance = main_les(ideal, i, degrees, bounds, report)
        result.les_per_i[i] = instance
        result.log += [f"{instance.name}: {line}" for line in instance.notes]
        for n in degrees:
            result.ktilde[(n, i + 1)] = instance.value(ktilde_label(n, i + 1))
    low = ktilde_low_degree(ideal, bounds, report)
    result.low_degree = low
    for (n, j), value in list(result.ktilde.items()):
        if not low.vanishes(n):
            continue
        if value.is_unknown:
            result.ktilde[(n, j)] = DimensionValue.zero()
            result.log.append(f"{ktilde_label(n, j)} = 0 below degree {low.vanishing_below}")
        elif not value.is_zero:
            logger.warning(f"{ktilde_label(n, j)} = {value} below the vanishing range")
    return result
