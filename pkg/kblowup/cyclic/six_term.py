"""
KBlowup Cyclic - Blowup Sequences for Periodic Cyclic Homology

For a blowup square E -> Y, Z -> X with Y, Z, E smooth:

    HP_0(X) -> HP_0(Y) ⊕ HP_0(Z) -> HP_0(E) -> HP_1(X) -> ...   (six terms, cyclic)

It is refined by the de Rham Mayer-Vietoris sequence

    0 -> H^0(X) -> H^0(Y) ⊕ H^0(Z) -> H^0(E) -> H^1(X) -> ...

whose X terms fold back into HP_0 = H^even and HP_1 = H^odd, and split
into one sequence per Hodge index i with HP_n^(i)(X) in place of H^{2i-n}(X).

PURE MATH - No I/O
"""
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from loguru import logger

from kblowup.core.exceptions import NotSmoothError, StabilizationError, ValidationError
from kblowup.cyclic.bicomplex import CyclicTheory
from kblowup.cyclic.hodge import cover_dimension, dimension_value, form_engine, projective_de_rham
from kblowup.differentials import de_rham_cohomology, naive_de_rham_cohomology, truncated_derham_hyper
from kblowup.exactseq import DimensionValue, Deduction, LESInstance, solve
from kblowup.geometry.blowup import BlowupSquare
from kblowup.geometry.smoothness import is_smooth
from kblowup.groebner.ideals import is_unit_ideal, krull_dimension


@dataclass(frozen=True)
class DeRhamBounds:
    """Windows used for the de Rham terms of a blowup square."""
    cech_window: Optional[int] = None
    degree_bound: Optional[int] = None


def observed(compute: Callable[[], DimensionValue], label: str) -> tuple[DimensionValue, str]:
    try:
        return compute(), "computed"
    except StabilizationError as exc:
        logger.warning(f"{label} left unknown: {exc}")
        return DimensionValue.unknown(), f"not stabilized: {exc}"


class BlowupDeRham:
    """
    Cached de Rham dimensions of Y, Z and E for one blowup square.

    Raises:
        NotSmoothError: if Y, Z or E has a singular chart
    """

    def __init__(self, square: BlowupSquare, bounds: DeRhamBounds = DeRhamBounds()):
        if not square.y_smooth():
            raise NotSmoothError("blowup Y has a singular chart")
        if not square.e_smooth():
            raise NotSmoothError("exceptional fiber E has a singular chart")
        if not is_smooth(square.z_relations):
            raise NotSmoothError("center Z is singular")
        self.square = square
        self.bounds = bounds
        self.dim_y = cover_dimension(square.y_cover)
        self.dim_e = cover_dimension(square.e_cover)
        self.dim_z = -1 if is_unit_ideal(square.z_relations) else krull_dimension(square.z_relations)
        self.dim_x = krull_dimension(square.x_relations)
        self._cache: dict[tuple[str, int], tuple[DimensionValue, str]] = {}

    @property
    def top_degree(self) -> int:
        """Every H^m of X, Y, Z, E vanishes above this degree."""
        return 2 * max(self.dim_x, self.dim_y, 0) + 1

    def _lookup(self, key: str, m: int, compute: Callable[[], DimensionValue]) -> tuple[DimensionValue, str]:
        if m < 0:
            return DimensionValue.zero(), "negative degree"
        if (key, m) not in self._cache:
            self._cache[(key, m)] = observed(compute, f"H^{m}({key})")
        return self._cache[(key, m)]

    def y(self, m: int) -> tuple[DimensionValue, str]:
        cover = self.square.y_cover
        return self._lookup("Y", m, lambda: dimension_value(truncated_derham_hyper(
            cover, self.dim_y, m, self.bounds.cech_window, engine=form_engine(cover),
        )))

    def z(self, m: int) -> tuple[DimensionValue, str]:
        if self.dim_z < 0 or m > self.dim_z:
            return DimensionValue.zero(), "empty or above dimension"
        return self._lookup("Z", m, lambda: dimension_value(
            de_rham_cohomology(self.square.z_relations, m, self.bounds.degree_bound)
        ))

    def e(self, m: int) -> tuple[DimensionValue, str]:
        if m > 2 * self.dim_e:
            return DimensionValue.zero(), "above dimension"
        return self._lookup("E", m, lambda: projective_de_rham(self.square.e_cover, m, self.bounds.cech_window))

    def y_plus_z(self, m: int) -> tuple[DimensionValue, str]:
        (vy, py), (vz, pz) = self.y(m), self.z(m)
        return DimensionValue.direct_sum(vy, vz), f"Y: {py}; Z: {pz}"


def mayer_vietoris_de_rham(square: BlowupSquare, bounds: DeRhamBounds = DeRhamBounds(),
                           terms: Optional[BlowupDeRham] = None) -> LESInstance:
    """
    0 -> H^0(X) -> H^0(Y)⊕H^0(Z) -> H^0(E) -> H^1(X) -> ... -> 0.

    H^0(X) is the naive count of connected components; higher H^m(X) are unknowns.
    """
    terms = terms or BlowupDeRham(square, bounds)
    entries = [("0", DimensionValue.zero(), "start")]
    h0 = naive_de_rham_cohomology(square.x_relations, 0, bounds.degree_bound)
    x0, x0_note = (DimensionValue.known(h0.value), "connected components") if h0.stable else (
        DimensionValue.unknown(), "component count not stabilized")
    for m in range(terms.top_degree + 1):
        if m == 0:
            entries.append(("H^0(X)", x0, x0_note))
        else:
            entries.append((f"H^{m}(X)", DimensionValue.unknown(), "cdh de Rham"))
        value, note = terms.y_plus_z(m)
        entries.append((f"H^{m}(Y)+H^{m}(Z)", value, note))
        value, note = terms.e(m)
        entries.append((f"H^{m}(E)", value, note))
    entries.append(("end", DimensionValue.zero(), "above dimension"))
    return LESInstance.build(entries, name="de Rham Mayer-Vietoris")


@dataclass
class SixTermResult:
    """The cyclic six-term sequence together with its de Rham refinement."""
    six_term: LESInstance
    refinement: LESInstance
    log: list[Deduction] = field(default_factory=list)

    @property
    def hp0(self) -> DimensionValue:
        return self.six_term.value("HP_0(X)")

    @property
    def hp1(self) -> DimensionValue:
        return self.six_term.value("HP_1(X)")


def _fold(instance: LESInstance, label: Callable[[int], str], top: int, parity: int) -> DimensionValue:
    return DimensionValue.direct_sum(
        *(instance.value(label(m)) for m in range(parity, top + 1, 2))
    )


def hp_six_term(square: BlowupSquare, bounds: DeRhamBounds = DeRhamBounds()) -> SixTermResult:
    """
    Populate and solve the six-term HP sequence of a blowup square.

    Raises:
        NotSmoothError: if Y, Z or E is singular
        InconsistentSequenceError: if the computed corners violate exactness
    """
    terms = BlowupDeRham(square, bounds)
    refined = solve(mayer_vietoris_de_rham(square, bounds, terms))
    refinement = refined.instance
    top = terms.top_degree

    def corner(getter: Callable[[int], tuple[DimensionValue, str]], parity: int) -> DimensionValue:
        return DimensionValue.direct_sum(*(getter(m)[0] for m in range(parity, top + 1, 2)))

    hp_x = [_fold(refinement, lambda m: f"H^{m}(X)", top, parity) for parity in (0, 1)]
    entries = []
    for parity in (0, 1):
        entries += [
            (f"HP_{parity}(X)", DimensionValue.unknown(), "unknown"),
            (f"HP_{parity}(Y)+HP_{parity}(Z)", corner(terms.y_plus_z, parity), "de Rham of Y and Z"),
            (f"HP_{parity}(E)", corner(terms.e, parity), "de Rham of E"),
        ]
    six = LESInstance.build(entries, cyclic=True, name="six-term HP")
    for parity in (0, 1):
        if hp_x[parity].is_finite:
            six.set(f"HP_{parity}(X)", hp_x[parity], "de Rham refinement")
    outcome = solve(six)
    log = refined.log + outcome.log
    logger.info(f"Six-term HP: HP_0(X) = {outcome.instance.value('HP_0(X)')}, "
                f"HP_1(X) = {outcome.instance.value('HP_1(X)')}")
    return SixTermResult(six_term=outcome.instance, refinement=refinement, log=log)


def hodge_label(theory: CyclicTheory | str, i: int, n: int) -> str:
    return f"{CyclicTheory(theory).value}^({i})_{n}"


def hodge_mayer_vietoris(
    square: BlowupSquare,
    i: int,
    n_range: Iterable[int],
    theory: CyclicTheory | str = CyclicTheory.HP,
    bounds: DeRhamBounds = DeRhamBounds(),
    terms: Optional[BlowupDeRham] = None,
) -> LESInstance:
    """
    ... -> H^{2i-n-1}(E) -> T^(i)_n(X) -> H^{2i-n}(Y)⊕H^{2i-n}(Z) -> H^{2i-n}(E) -> T^(i)_{n-1}(X) -> ...

    for T = HP, or T = HN with every n < 0; highest n first.

    Raises:
        ValidationError: for HN with a degree n >= 0
    """
    theory = CyclicTheory(theory)
    given = list(n_range)
    if not given:
        raise ValidationError("empty degree range")
    degrees = list(range(max(given), min(given) - 1, -1))
    if theory is CyclicTheory.HC:
        raise ValidationError("no Mayer-Vietoris sequence for HC")
    if theory is CyclicTheory.HN and degrees[0] >= 0:
        raise ValidationError("the HN Mayer-Vietoris sequence needs n < 0")
    terms = terms or BlowupDeRham(square, bounds)
    m0 = 2 * i - degrees[0]
    value, note = terms.e(m0 - 1)
    entries = [(f"H^{m0 - 1}(E)", value, note)]
    for n in degrees:
        m = 2 * i - n
        entries.append((hodge_label(theory, i, n), DimensionValue.unknown(), "unknown"))
        value, note = terms.y_plus_z(m)
        entries.append((f"H^{m}(Y)+H^{m}(Z)", value, note))
        value, note = terms.e(m)
        entries.append((f"H^{m}(E)", value, note))
    return LESInstance.build(entries, name=f"Hodge Mayer-Vietoris {theory.value} i={i}")
