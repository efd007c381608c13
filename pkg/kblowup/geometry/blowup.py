"""
KBlowup Geometry - Blowup Squares

For X = Spec k[x]/J blown up along Z = V(I):
    Y = Proj R[It]   covered by the charts a_i = 1
    E = Proj gr_I(R) covered by the same charts
Each Y-chart is saturated by its inverted center generator.

PURE MATH - No I/O
"""
from dataclasses import dataclass, field
from typing import Optional, Sequence

from loguru import logger

from kblowup.algebra.graded import GradedAlgebraPresentation
from kblowup.algebra.rees import assoc_graded, rees_presentation
from kblowup.core.exceptions import ValidationError
from kblowup.geometry.smoothness import is_smooth
from kblowup.groebner.ideals import reduced, saturate_by_element
from kblowup.poly.ring import (
    Ideal,
    fresh_name,
    polynomial_ring,
    substitute_one,
    transfer,
    variable_names,
)


@dataclass(frozen=True)
class AffineChart:
    """The affine piece of a Proj where one positive-weight variable is 1."""
    ring_relations: Ideal
    inverted: str
    index: int

    @property
    def description(self) -> str:
        return f"{self.inverted} = 1"


@dataclass(frozen=True)
class ChartCover:
    """A graded presentation together with its standard affine charts."""
    presentation: GradedAlgebraPresentation
    charts: tuple[AffineChart, ...]

    @property
    def size(self) -> int:
        return len(self.charts)


def proj_charts(presentation: GradedAlgebraPresentation, saturate_by: Optional[Sequence] = None) -> tuple[AffineChart, ...]:
    """
    Standard charts of Proj(S) for S generated in degree one over S_0.

    Args:
        presentation: Graded presentation with weights 0/1
        saturate_by: Optional polynomial per chart (in the chart ring) to saturate by
    """
    if not presentation.has_positive_variable:
        raise ValidationError("Proj needs at least one variable of positive weight")
    if any(w > 1 for w in presentation.weights):
        raise ValidationError("standard charts need weights in {0, 1}")
    names = presentation.names
    charts = []
    for k, idx in enumerate(presentation.positive_indices):
        chart_names = names[:idx] + names[idx + 1:]
        ring = polynomial_ring(chart_names)
        gens = tuple(
            h for h in (substitute_one(g, idx, ring) for g in presentation.relations.generators) if h
        )
        ideal = Ideal(ring, gens)
        if saturate_by is not None:
            ideal = saturate_by_element(ideal, transfer(saturate_by[k], ring))
        charts.append(AffineChart(ring_relations=reduced(ideal), inverted=names[idx], index=k))
    return tuple(charts)


def single_chart_cover(relations: Ideal) -> ChartCover:
    """Spec A viewed as Proj A[a] with one chart."""
    names = variable_names(relations.ring)
    a = fresh_name(names, "a")
    ring = polynomial_ring(names + (a,))
    presentation = GradedAlgebraPresentation(
        ambient=ring,
        relations=reduced(relations.transfer(ring)),
        weights=(0,) * len(names) + (1,),
    )
    chart = AffineChart(ring_relations=reduced(relations), inverted=a, index=0)
    return ChartCover(presentation=presentation, charts=(chart,))


@dataclass(frozen=True)
class BlowupSquare:
    """E -> Y, Z -> X with Y the blowup of X along Z and E the exceptional divisor."""
    x_relations: Ideal
    center: Ideal
    rees: GradedAlgebraPresentation
    y_charts: tuple[AffineChart, ...]
    exceptional: GradedAlgebraPresentation
    e_charts: tuple[AffineChart, ...]
    smooth_flags: dict = field(default_factory=dict, compare=False)

    @property
    def y_cover(self) -> ChartCover:
        return ChartCover(self.rees, self.y_charts)

    @property
    def e_cover(self) -> ChartCover:
        return ChartCover(self.exceptional, self.e_charts)

    @property
    def z_relations(self) -> Ideal:
        return reduced(self.x_relations + self.center)

    def y_smooth(self) -> bool:
        if "y" not in self.smooth_flags:
            self.smooth_flags["y"] = all(is_smooth(c.ring_relations) for c in self.y_charts)
        return self.smooth_flags["y"]

    def e_smooth(self) -> bool:
        if "e" not in self.smooth_flags:
            self.smooth_flags["e"] = all(is_smooth(c.ring_relations) for c in self.e_charts)
        return self.smooth_flags["e"]


def blowup_square(x_relations: Ideal, center: Ideal) -> BlowupSquare:
    """
    Blowup square of X along the closed subscheme cut out by `center`.

    The chart count of Y and E equals the number of center generators.
    """
    center = center.transfer(x_relations.ring)
    gens = center.nonzero_generators
    if not gens:
        raise ValidationError("empty blowup center")
    rees = rees_presentation(x_relations, Ideal(x_relations.ring, gens))
    y_charts = proj_charts(rees, saturate_by=gens)
    exceptional = assoc_graded(x_relations, Ideal(x_relations.ring, gens)).pruned()
    e_charts = proj_charts(exceptional)
    logger.info(f"Blowup square: {len(y_charts)} charts for Y and E")
    return BlowupSquare(
        x_relations=x_relations,
        center=Ideal(x_relations.ring, gens),
        rees=rees,
        y_charts=y_charts,
        exceptional=exceptional,
        e_charts=e_charts,
    )
