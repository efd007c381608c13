"""
KBlowup Engine - Job Service

Wires the algebra, geometry, cyclic and K-theory pipelines to the CLI.
A JobSpec names one command plus its ring, ideal and bounds; the service
runs it and returns a Report carrying every intermediate verdict.
"""
import re
import shlex
from enum import Enum
from pathlib import Path
from typing import Optional

from loguru import logger
from pydantic import BaseModel, Field, field_validator

from kblowup.algebra import filtered_deformation_report, rees_presentation, tangent_cone_at_origin
from kblowup.core.config import settings
from kblowup.core.exceptions import HypothesisError, KBlowupException, ParseError, StabilizationError
from kblowup.core.report import Report
from kblowup.core.stability import StabilizedDimension
from kblowup.cyclic import (
    CyclicTheory,
    DeRhamBounds,
    FDAlgebra,
    bicomplex_homology,
    hp_six_term,
    michler_hc,
    smooth_hodge_table,
)
from kblowup.differentials import de_rham_cohomology
from kblowup.geometry import blowup_square, is_smooth, isolated_singularity_at_origin, singular_locus
from kblowup.groebner import is_unit_ideal, krull_dimension, reduced
from kblowup.ktheory import ktilde_label, ktilde_low_degree, main_theorem, verify_hypotheses
from kblowup.poly import Ideal, format_polynomial, parse_polynomial, parse_variables, polynomial_ring, split_generators


class Command(str, Enum):
    TANGENT_CONE = "tangent-cone"
    GR = "gr"
    REES = "rees"
    BLOWUP = "blowup"
    SMOOTH_CHECK = "smooth-check"
    DERHAM = "derham"
    HC_BICOMPLEX = "hc-bicomplex"
    HODGE = "hodge"
    MICHLER = "michler"
    HP_SIX_TERM = "hp-six-term"
    MAIN_THEOREM = "main-theorem"
    KTILDE = "ktilde"


_RANGE = re.compile(r"^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$")


def parse_range(text: str) -> list[int]:
    """"a..b" (inclusive, either order) or a single integer."""
    match = _RANGE.match(text or "")
    if not match:
        raise ParseError(f"invalid range {text!r}; expected a..b or an integer")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    lo, hi = min(lo, hi), max(lo, hi)
    return list(range(lo, hi + 1))


def read_spec_file(path: Path) -> list[str]:
    """Tokens of a job file: command-line grammar, `#` comments, UTF-8."""
    tokens: list[str] = []
    for line in path.read_text(encoding="utf-8").splitlines():
        tokens.extend(shlex.split(line, comments=True))
    return tokens


class JobSpec(BaseModel):
    """One command with its ring, ideal and bounds."""
    command: Command
    variables: tuple[str, ...]
    ideal: list[str] = Field(default_factory=list)
    center: list[str] = Field(default_factory=list)
    i_range: Optional[str] = None
    n_range: Optional[str] = None
    degree_bound: Optional[int] = Field(default=None, ge=0)
    truncation: Optional[int] = Field(default=None, ge=0)
    cech_window: Optional[int] = Field(default=None, ge=0)
    output: Optional[Path] = None

    @field_validator("variables", mode="before")
    @classmethod
    def _split_variables(cls, value):
        if isinstance(value, str):
            return parse_variables(value)
        return parse_variables(",".join(value))

    @field_validator("ideal", "center", mode="before")
    @classmethod
    def _split_generators(cls, value):
        if value is None:
            return []
        if isinstance(value, str):
            value = [value]
        return [g for text in value for g in split_generators(text)]

    def ring(self):
        return polynomial_ring(self.variables)

    def parsed_ideal(self) -> Ideal:
        ring = self.ring()
        return Ideal(ring, tuple(parse_polynomial(t, ring) for t in self.ideal))

    def parsed_center(self) -> Ideal:
        ring = self.ring()
        if not self.center:
            return Ideal.maximal_at_origin(ring)
        return Ideal(ring, tuple(parse_polynomial(t, ring) for t in self.center))

    def degrees(self, default: str) -> list[int]:
        return parse_range(self.n_range or default)

    def hodge_indices(self, default: str) -> list[int]:
        return parse_range(self.i_range or default)

    @property
    def bounds(self) -> DeRhamBounds:
        return DeRhamBounds(cech_window=self.cech_window, degree_bound=self.degree_bound)


def generator_text(ideal: Ideal) -> list[str]:
    return [format_polynomial(g) for g in ideal.nonzero_generators]


def _stabilized_row(label: str, dim: StabilizedDimension) -> dict:
    return {
        "term": label,
        "dim": dim.value,
        "stable": dim.stable,
        "bound": dim.bound,
        "history": list(dim.history),
    }


def _not_stabilized(report: Report, message: str) -> None:
    logger.warning(f"Not stabilized: {message}")
    report.fail("not-stabilized", 3, message)


class JobService:
    """Dispatches a JobSpec to its pipeline and records the outcome."""

    def __init__(self):
        self._handlers = {
            Command.TANGENT_CONE: self._tangent_cone,
            Command.GR: self._gr,
            Command.REES: self._rees,
            Command.BLOWUP: self._blowup,
            Command.SMOOTH_CHECK: self._smooth_check,
            Command.DERHAM: self._derham,
            Command.HC_BICOMPLEX: self._hc_bicomplex,
            Command.HODGE: self._hodge,
            Command.MICHLER: self._michler,
            Command.HP_SIX_TERM: self._hp_six_term,
            Command.MAIN_THEOREM: self._main_theorem,
            Command.KTILDE: self._ktilde,
        }

    def run(self, spec: JobSpec) -> Report:
        """
        Execute one job. Errors become exit codes on the report:
        2 for hypothesis failures, 3 for non-stabilization, 1 otherwise.
        """
        report = Report(command=spec.command.value)
        report.section("input", {
            "variables": list(spec.variables),
            "ideal": list(spec.ideal),
            "version": settings.APP_VERSION,
        })
        logger.info(f"Running {spec.command.value} over {spec.variables}")
        try:
            ideal = spec.parsed_ideal()
            report.section("input", {"canonical": generator_text(ideal)})
            self._handlers[spec.command](spec, ideal, report)
        except HypothesisError as exc:
            logger.warning(f"Hypothesis failure: {exc}")
            report.fail("hypothesis-failure", 2, str(exc))
        except StabilizationError as exc:
            _not_stabilized(report, str(exc))
        except KBlowupException as exc:
            logger.error(f"{type(exc).__name__}: {exc}")
            report.fail("error", 1, f"{type(exc).__name__}: {exc}")
        return report

    # ------------------------------------------------------------------
    # Filtered deformations
    # ------------------------------------------------------------------

    def _tangent_cone(self, spec: JobSpec, ideal: Ideal, report: Report) -> None:
        i_min = tangent_cone_at_origin(ideal)
        report.section("tangent_cone", {
            "i_min": generator_text(reduced(i_min)),
            "proper": not is_unit_ideal(i_min),
        })

    def _gr(self, spec: JobSpec, ideal: Ideal, report: Report) -> None:
        deformation = filtered_deformation_report(ideal, spec.degree_bound)
        gr = deformation.assoc_graded
        check = deformation.isomorphism
        report.section("assoc_graded", {
            "variables": list(gr.names),
            "weights": list(gr.weights),
            "relations": generator_text(reduced(gr.relations)),
            "hilbert": list(check.hilbert_left),
        })
        report.section("comparison", {
            "i_min": generator_text(reduced(deformation.i_min)),
            "proper": deformation.is_proper,
            "hilbert_agree": check.hilbert_agree,
            "map_agree": check.map_agree,
            "isomorphic": check.isomorphic,
            "bound": check.bound,
        })

    def _rees(self, spec: JobSpec, ideal: Ideal, report: Report) -> None:
        rees = rees_presentation(ideal, spec.parsed_center())
        report.section("rees", {
            "variables": list(rees.names),
            "weights": list(rees.weights),
            "relations": generator_text(reduced(rees.relations)),
        })

    # ------------------------------------------------------------------
    # Geometry
    # ------------------------------------------------------------------

    def _blowup(self, spec: JobSpec, ideal: Ideal, report: Report) -> None:
        square = blowup_square(ideal, spec.parsed_center())
        report.section("blowup", {
            "center": generator_text(square.center),
            "charts": len(square.y_charts),
            "Y_smooth": square.y_smooth(),
            "E_smooth": square.e_smooth(),
            "Z": generator_text(square.z_relations),
        })
        for name, charts in (("Y_charts", square.y_charts), ("E_charts", square.e_charts)):
            report.table(name, [
                {
                    "chart": chart.description,
                    "variables": list(chart.ring_relations.names),
                    "relations": generator_text(chart.ring_relations),
                    "smooth": is_smooth(chart.ring_relations),
                }
                for chart in charts
            ])

    def _smooth_check(self, spec: JobSpec, ideal: Ideal, report: Report) -> None:
        locus = singular_locus(ideal)
        empty = is_unit_ideal(locus)
        report.section("smoothness", {
            "smooth": empty,
            "singular_locus": generator_text(reduced(locus)),
            "singular_locus_dim": -1 if empty else krull_dimension(locus),
            "verdict": isolated_singularity_at_origin(ideal),
            "dimension": -1 if is_unit_ideal(ideal) else krull_dimension(ideal),
        })

    def _derham(self, spec: JobSpec, ideal: Ideal, report: Report) -> None:
        rows = [
            _stabilized_row(f"H^{p}", de_rham_cohomology(ideal, p, spec.degree_bound))
            for p in range(len(spec.variables) + 1)
        ]
        report.table("de_rham", rows)
        unsettled = [row["term"] for row in rows if not row["stable"]]
        if unsettled:
            _not_stabilized(report, f"{', '.join(unsettled)} did not settle within the filtration window")

    # ------------------------------------------------------------------
    # Cyclic homology
    # ------------------------------------------------------------------

    def _hc_bicomplex(self, spec: JobSpec, ideal: Ideal, report: Report) -> None:
        algebra = FDAlgebra.from_quotient(ideal)
        degrees = spec.degrees("0..4")
        report.section("algebra", {
            "dimension": algebra.dimension,
            "basis": list(algebra.basis_labels),
            "commutative": algebra.is_commutative(),
        })
        values = {
            theory: bicomplex_homology(algebra, theory, degrees, spec.truncation)
            for theory in CyclicTheory
        }
        cut = settings.BICOMPLEX_TRUNCATION if spec.truncation is None else spec.truncation
        report.table("cyclic_homology", [
            {
                "n": n,
                **{theory.value: values[theory][n] for theory in CyclicTheory},
                "status": f"converged at {cut}/{cut + 2}",
            }
            for n in degrees
        ])

    def _hodge(self, spec: JobSpec, ideal: Ideal, report: Report) -> None:
        table = smooth_hodge_table(
            ideal, spec.degrees("-2..2"), spec.hodge_indices("0..2"), degree_bound=spec.degree_bound,
        )
        report.section("hodge", {"hp_periodic": table.is_periodic})
        report.table("hodge_components", table.to_records())

    def _michler(self, spec: JobSpec, ideal: Ideal, report: Report) -> None:
        rows = []
        for n in spec.degrees("0..3"):
            for i in spec.hodge_indices("0..3"):
                value = michler_hc(ideal, n, i, spec.degree_bound)
                rows.append({"n": n, "i": i, "HC": str(value), "state": value.state})
        report.table("hypersurface_hc", rows)

    def _hp_six_term(self, spec: JobSpec, ideal: Ideal, report: Report) -> None:
        square = blowup_square(ideal, spec.parsed_center())
        result = hp_six_term(square, spec.bounds)
        report.section("periodic", {"HP_0": str(result.hp0), "HP_1": str(result.hp1)})
        report.table("six_term", result.six_term.to_records())
        report.table("de_rham_refinement", result.refinement.to_records())
        report.log.extend(str(d) for d in result.log)

    # ------------------------------------------------------------------
    # K-theory
    # ------------------------------------------------------------------

    def _hypotheses(self, ideal: Ideal, report: Report):
        hypotheses = verify_hypotheses(ideal)
        report.section("hypotheses", hypotheses.summary())
        if hypotheses.reasons:
            report.section("hypotheses", {"reasons": hypotheses.reasons})
        return hypotheses

    def _main_theorem(self, spec: JobSpec, ideal: Ideal, report: Report) -> None:
        hypotheses = self._hypotheses(ideal, report)
        degrees = spec.degrees("-3..-1")
        result = main_theorem(ideal, spec.hodge_indices("0"), degrees, spec.bounds, hypotheses)
        low = result.low_degree
        report.section("low_degree", {
            "dimension": low.dimension,
            "vanishing_below": low.vanishing_below,
            "surjection_target": str(low.surjection_target),
            "stabilized": low.stabilized,
        })
        report.table("ktilde", [
            {"label": ktilde_label(n, j), "n": n, "j": j, "value": str(value), "state": value.state}
            for (n, j), value in sorted(result.ktilde.items())
        ])
        for i, instance in result.les_per_i.items():
            report.table(f"main_sequence_i{i}", instance.to_records())
        report.log.extend(result.log)
        if not low.stabilized:
            _not_stabilized(report, f"H^{low.dimension}(Y, O) {low.surjection_target}: {low.note}")

    def _ktilde(self, spec: JobSpec, ideal: Ideal, report: Report) -> None:
        hypotheses = self._hypotheses(ideal, report)
        low = ktilde_low_degree(ideal, spec.bounds, hypotheses)
        report.section("low_degree", {
            "dimension": low.dimension,
            "smooth_case": low.smooth_case,
            "vanishing_below": low.vanishing_below,
            "surjection_target": str(low.surjection_target),
            "stabilized": low.stabilized,
            "note": low.note,
        })
        if not low.stabilized:
            _not_stabilized(report, f"H^{low.dimension}(Y, O) {low.surjection_target}: {low.note}")


# Singleton instance
job_service = JobService()
