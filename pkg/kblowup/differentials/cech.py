"""
KBlowup Differentials - Čech and Hypercohomology on Proj

Sections of Ω^p over the chart intersection D+(a_I) are fractions
m / a_I^K with m in the a_I-saturated forms module of S, primary degree
K|I| (+ twist), killed by contraction with the Euler field. Pole order K
and a bound on total degree filter every Čech group by finite pieces;
dimensions are read off growing windows and checked for stabilization.

PURE MATH - No I/O
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from loguru import logger
from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement

from kblowup.core import linalg
from kblowup.core.config import settings
from kblowup.core.exceptions import ValidationError
from kblowup.core.stability import StabilizedDimension, is_stable
from kblowup.differentials.kaehler import forms, wedge_sign
from kblowup.geometry.blowup import ChartCover
from kblowup.groebner.modules import ModulePresentation

Form = dict[tuple[int, ...], PolyElement]


@dataclass(frozen=True)
class FormSheaf:
    """Ω^p(twist) on Proj; p = 0 is the structure sheaf."""
    p: int = 0
    twist: int = 0


@dataclass
class Piece:
    """Finite piece of one Čech component: ambient basis plus basic-form kernel."""
    p: int
    charts: tuple[int, ...]
    pole: int
    basis: tuple
    kernel: DomainMatrix

    @property
    def ambient_dim(self) -> int:
        return len(self.basis)

    @property
    def dim(self) -> int:
        return self.kernel.shape[1]


class ProjectiveFormComplex:
    """
    Čech pieces of Ω^p on Proj(S) for a cover by positive-weight variables.

    Args:
        cover: Graded presentation and its charts
        chart_order: Optional permutation of the cover's charts
    """

    def __init__(self, cover: ChartCover, chart_order: Optional[Sequence[int]] = None):
        pres = cover.presentation
        self.presentation = pres
        self.ring = pres.ambient
        self.weights = pres.weights
        positive = list(pres.positive_indices)
        if not positive:
            raise ValidationError("Proj needs at least one variable of positive weight")
        if chart_order is not None:
            if sorted(chart_order) != list(range(len(positive))):
                raise ValidationError(f"chart order {chart_order} is not a permutation")
            positive = [positive[k] for k in chart_order]
        self.chart_vars = tuple(positive)
        self.r = len(positive)
        self._forms: dict[int, tuple] = {}
        self._modules: dict[tuple[int, tuple[int, ...]], ModulePresentation] = {}
        self._pieces: dict[tuple, Piece] = {}

    # -- modules ----------------------------------------------------------

    def subsets(self, p: int) -> tuple[tuple[int, ...], ...]:
        if p not in self._forms:
            module = forms(self.presentation.relations, p)
            self._forms[p] = (module, {J: k for k, J in enumerate(module.generator_subsets)})
        return self._forms[p][0].generator_subsets

    def _subset_index(self, p: int) -> dict[tuple[int, ...], int]:
        self.subsets(p)
        return self._forms[p][1]

    def module(self, p: int, charts: tuple[int, ...]) -> ModulePresentation:
        key = (p, charts)
        if key not in self._modules:
            self.subsets(p)
            module = self._forms[p][0]
            n = self.ring.ngens
            presentation = module.presentation(
                weights=self.weights,
                shifts=[sum(self.weights[v] for v in J) for J in module.generator_subsets],
                secondary=(1,) * n,
                secondary_shifts=(p,) * module.rank,
            )
            self._modules[key] = presentation.saturate(self.chart_product(charts))
        return self._modules[key]

    def chart_product(self, charts: tuple[int, ...]) -> PolyElement:
        g = self.ring.one
        for k in charts:
            g *= self.ring.gens[self.chart_vars[k]]
        return g

    # -- forms as dictionaries subset -> coefficient -------------------------

    def _to_form(self, p: int, key) -> Form:
        j, m = key
        J = self.subsets(p)[j]
        return {J: self.ring.from_dict({m: QQ.one})}

    def _encode(self, p: int, module: ModulePresentation, form: Form) -> PolyElement:
        index = self._subset_index(p)
        vector = {}
        for J, coeff in form.items():
            if coeff:
                vector[index[J]] = vector.get(index[J], self.ring.zero) + coeff
        return module.encode(vector)

    def contract(self, form: Form) -> Form:
        """Contraction with the Euler field Σ w_v v ∂/∂v."""
        out: Form = {}
        for J, coeff in form.items():
            for k, v in enumerate(J):
                w = self.weights[v]
                if not w:
                    continue
                rest = J[:k] + J[k + 1:]
                term = ((-1) ** k * w) * self.ring.gens[v] * coeff
                out[rest] = out.get(rest, self.ring.zero) + term
        return out

    def exterior_derivative(self, form: Form) -> Form:
        out: Form = {}
        for J, coeff in form.items():
            for v, x in enumerate(self.ring.gens):
                partial = coeff.diff(x)
                if not partial:
                    continue
                sign, K = wedge_sign(v, J)
                if sign:
                    out[K] = out.get(K, self.ring.zero) + sign * partial
        return out

    @staticmethod
    def wedge_left(v: int, coeff: PolyElement, form: Form) -> Form:
        """(coeff dv) ∧ form."""
        out: Form = {}
        for J, c in form.items():
            sign, K = wedge_sign(v, J)
            if sign:
                out[K] = out.get(K, coeff.ring.zero) + sign * coeff * c
        return out

    @staticmethod
    def _add(target: Form, source: Form, scale=1) -> Form:
        for J, c in source.items():
            target[J] = target.get(J, c.ring.zero) + scale * c
        return target

    # -- pieces -----------------------------------------------------------

    def piece(self, p: int, charts: tuple[int, ...], pole: int, twist: int, lam: int) -> Piece:
        key = (p, charts, pole, twist, lam)
        if key in self._pieces:
            return self._pieces[key]
        module = self.module(p, charts)
        if module.rank == 0:
            basis: tuple = ()
        else:
            size = len(charts)
            basis = module.standard_basis(primary=pole * size + twist, secondary_max=pole * size + lam)
        if p == 0 or not basis:
            kernel = linalg.identity(len(basis))
        else:
            lower = self.piece(p - 1, charts, pole, twist, lam)
            lower_module = self.module(p - 1, charts)
            index = lower_module.index(lower.basis)
            columns = []
            for key_ in basis:
                image = self.contract(self._to_form(p, key_))
                columns.append(lower_module.coordinates(self._encode(p - 1, lower_module, image), index))
            kernel = linalg.nullspace(linalg.from_columns(columns, len(lower.basis)))
        result = Piece(p=p, charts=charts, pole=pole, basis=basis, kernel=kernel)
        self._pieces[key] = result
        return result

    def cech_columns(self, p: int, q: int, pole: int, twist: int, lam: int) -> list[Piece]:
        return [self.piece(p, I, pole, twist, lam) for I in combinations(range(self.r), q + 1)]

    def cech_matrix(self, source: list[Piece], target: list[Piece]) -> DomainMatrix:
        """Čech differential between the ambient coordinates of two columns."""
        offsets, indices, total = {}, {}, 0
        for pc in target:
            offsets[pc.charts] = total
            indices[pc.charts] = self.module(pc.p, pc.charts).index(pc.basis)
            total += pc.ambient_dim
        columns = []
        for pc in source:
            for key in pc.basis:
                col: dict[int, object] = {}
                for j in range(self.r):
                    if j in pc.charts:
                        continue
                    J = tuple(sorted(pc.charts + (j,)))
                    if J not in offsets:
                        continue
                    module = self.module(pc.p, J)
                    sign = (-1) ** J.index(j)
                    form = self._to_form(pc.p, key)
                    factor = self.ring.gens[self.chart_vars[j]] ** pc.pole
                    element = self._encode(pc.p, module, {K: sign * factor * c for K, c in form.items()})
                    for idx, c in module.coordinates(element, indices[J], offsets[J]).items():
                        col[idx] = col.get(idx, QQ.zero) + c
                columns.append(col)
        return linalg.from_columns(columns, total)

    def derivative_matrix(self, source: list[Piece], target: list[Piece], sign: int) -> DomainMatrix:
        """m / a_I^K  ->  (a_I dm - K d(a_I) ∧ m) / a_I^(K+1), times sign."""
        offsets, total = {}, 0
        for pc in target:
            offsets[pc.charts] = total
            total += pc.ambient_dim
        columns = []
        for pc in source:
            tgt = next(t for t in target if t.charts == pc.charts)
            module = self.module(pc.p + 1, pc.charts)
            index = module.index(tgt.basis)
            a_I = self.chart_product(pc.charts)
            for key in pc.basis:
                form = self._to_form(pc.p, key)
                image: Form = {}
                self._add(image, {J: a_I * c for J, c in self.exterior_derivative(form).items()})
                for k in pc.charts:
                    v = self.chart_vars[k]
                    cofactor = self.chart_product(tuple(c for c in pc.charts if c != k))
                    self._add(image, self.wedge_left(v, cofactor, form), -pc.pole)
                element = self._encode(pc.p + 1, module, {J: sign * c for J, c in image.items()})
                columns.append(module.coordinates(element, index, offsets[pc.charts]))
        return linalg.from_columns(columns, total)


def _kernel_block(pieces: list[Piece]) -> DomainMatrix:
    return linalg.block_diagonal([pc.kernel for pc in pieces])


def _ambient(pieces: list[Piece]) -> int:
    return sum(pc.ambient_dim for pc in pieces)


def _cech_value(engine: ProjectiveFormComplex, sheaf: FormSheaf, q: int, level: int) -> int:
    lam = max(level, sheaf.twist)
    column = lambda k: engine.cech_columns(sheaf.p, k, level, sheaf.twist, lam) if 0 <= k < engine.r else []
    here, below, above = column(q), column(q - 1), column(q + 1)
    dim = sum(pc.dim for pc in here)
    rank_out = rank_in = 0
    if here and above:
        rank_out = linalg.restricted_rank(engine.cech_matrix(here, above), _kernel_block(here))
    if below and here:
        rank_in = linalg.restricted_rank(engine.cech_matrix(below, here), _kernel_block(below))
    return dim - rank_out - rank_in


def _window(compute, window: int, label: str, start: int = 1) -> StabilizedDimension:
    history: list[int] = []
    for level in range(start, window + 1):
        history.append(compute(level))
        if is_stable(history):
            break
    stable = is_stable(history)
    if not stable:
        logger.warning(f"{label} not stable up to pole order {window}: {history}")
    else:
        logger.debug(f"{label} = {history[-1]} (history {history})")
    return StabilizedDimension(value=history[-1] if history else 0, stable=stable,
                               history=history, bound=window, label=label)


def cech_sheaf_cohomology(
    cover: ChartCover,
    sheaf: FormSheaf,
    q: int,
    window: Optional[int] = None,
    chart_order: Optional[Sequence[int]] = None,
    engine: Optional[ProjectiveFormComplex] = None,
) -> StabilizedDimension:
    """
    dim H^q(Proj S, Ω^p(twist)) from the Čech complex of the standard cover.

    Args:
        cover: Presentation of S and its charts
        sheaf: Form degree and twist
        q: Cohomological degree
        window: Largest pole order tried
        chart_order: Permutation of the charts (results do not depend on it)
    """
    if q < 0:
        raise ValidationError(f"negative cohomological degree {q}")
    window = settings.CECH_WINDOW if window is None else window
    engine = engine or ProjectiveFormComplex(cover, chart_order)
    if q >= engine.r:
        return StabilizedDimension.exact(0, f"H^{q}")
    return _window(lambda L: _cech_value(engine, sheaf, q, L), window, f"H^{q}(Omega^{sheaf.p}({sheaf.twist}))")


def _total_column(engine: ProjectiveFormComplex, m: int, i: int, level: int) -> list[list[Piece]]:
    """Pieces of Tot^m, grouped by form degree p = 0..i."""
    groups = []
    for p in range(i + 1):
        q = m - p
        if 0 <= q < engine.r:
            groups.append(engine.cech_columns(p, q, level + p, 0, level))
        else:
            groups.append([])
    return groups


def _total_matrix(engine: ProjectiveFormComplex, m: int, i: int, level: int) -> tuple[DomainMatrix, DomainMatrix]:
    """(D: Tot^m -> Tot^{m+1} in ambient coordinates, kernel basis of Tot^m)."""
    source = _total_column(engine, m, i, level)
    target = _total_column(engine, m + 1, i, level)
    row_offsets, nrows = [], 0
    for group in target:
        row_offsets.append(nrows)
        nrows += _ambient(group)
    blocks = []
    for p, group in enumerate(source):
        ncols = _ambient(group)
        if not ncols:
            continue
        q = m - p
        dod: dict[int, dict[int, object]] = {}
        if p < len(target) and target[p]:
            part = engine.cech_matrix(group, target[p])
            for r_, row in part.to_dod().items():
                dod.setdefault(r_ + row_offsets[p], {}).update(row)
        if p + 1 <= i and target[p + 1]:
            part = engine.derivative_matrix(group, target[p + 1], (-1) ** q)
            for r_, row in part.to_dod().items():
                slot = dod.setdefault(r_ + row_offsets[p + 1], {})
                for c, v in row.items():
                    slot[c] = slot.get(c, QQ.zero) + v
        blocks.append(DomainMatrix.from_dod(dod, (nrows, ncols), QQ))
    kernel = linalg.block_diagonal([_kernel_block(group) for group in source if group])
    return linalg.hstack(blocks, nrows), kernel


def _hyper_value(engine: ProjectiveFormComplex, i: int, m: int, level: int) -> int:
    dim = sum(pc.dim for group in _total_column(engine, m, i, level) for pc in group)
    if not dim:
        return 0
    D_out, K_here = _total_matrix(engine, m, i, level)
    rank_out = linalg.restricted_rank(D_out, K_here)
    rank_in = 0
    if m >= 1:
        D_in, K_below = _total_matrix(engine, m - 1, i, level)
        rank_in = linalg.restricted_rank(D_in, K_below)
    return dim - rank_out - rank_in


def truncated_derham_hyper(
    cover: ChartCover,
    i: int,
    m: int,
    window: Optional[int] = None,
    engine: Optional[ProjectiveFormComplex] = None,
) -> StabilizedDimension:
    """
    dim ℍ^m(Proj S, Ω^{≤i}) from the Čech double complex of the truncated de Rham complex.

    Column p uses pole order L + p and every column bounds total degree by
    pole·|I| + L, so δ and d preserve the filtration level L.
    """
    if i < 0 or m < 0:
        return StabilizedDimension.exact(0, f"H^{m}(Omega^<={i})")
    window = settings.CECH_WINDOW if window is None else window
    engine = engine or ProjectiveFormComplex(cover)
    if m > i + engine.r - 1:
        return StabilizedDimension.exact(0, f"H^{m}(Omega^<={i})")
    return _window(lambda L: _hyper_value(engine, i, m, L), window, f"H^{m}(Omega^<={i})", start=0)


def hodge_number(cover: ChartCover, p: int, q: int, window: Optional[int] = None,
                 engine: Optional[ProjectiveFormComplex] = None) -> StabilizedDimension:
    """h^q(Ω^p)."""
    return cech_sheaf_cohomology(cover, FormSheaf(p=p), q, window, engine=engine)
