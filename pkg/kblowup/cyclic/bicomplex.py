"""
KBlowup Cyclic - The (b, B) Bicomplex

Column p of the bicomplex holds the Hochschild chains C_{n-2p} in total
degree n. b stays inside a column and B moves from column p to p - 1:

    HC   columns p >= 0
    HN   columns p <= 0      (product, cut at p >= -T)
    HP   all columns         (product, cut at p >= -T)

A cut product is a quotient complex, so HN/HP are read off as the image of
H_n(cut at -(T+2)) in H_n(cut at -T) and the answer at T must agree with
the answer at T + 2.

PURE MATH - No I/O
"""
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Optional

from loguru import logger
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from kblowup.core import linalg
from kblowup.core.config import settings
from kblowup.core.exceptions import ConvergenceError, InconsistentSequenceError, ValidationError
from kblowup.cyclic.fdalgebra import FDAlgebra
from kblowup.exactseq import DimensionValue, LESInstance, solve

Chain = tuple[int, ...]
ChainVector = dict[Chain, object]


class CyclicTheory(str, Enum):
    """Cyclic, negative cyclic and periodic cyclic homology"""
    HC = "HC"
    HN = "HN"
    HP = "HP"


def _accumulate(target: ChainVector, source: ChainVector, scale=1) -> None:
    for chain, c in source.items():
        target[chain] = target.get(chain, QQ.zero) + scale * c


class CyclicBicomplex:
    """
    Hochschild chains of a finite-dimensional algebra with Connes' operator.

    Normalized chains live in A ⊗ Ā^{⊗m}, with Ā = A / k·1; a basis chain
    (i0, i1, ..., im) has every ik >= 1 for k >= 1. Unnormalized chains are
    all of A^{⊗(m+1)} and B = (1 - t) s N, with s(a0, ..., an) = (1, a0, ..., an)
    and t the signed rotation; on C_{n+1} it carries (-1)^{n+1}, which is the
    sign B picks up. Dropping chains with a unit in positions >= 1 turns this B
    into the normalized one, B(a0, ..., an) = sum_i (-1)^{ni} (1, ai, ..., a_{i-1}).

    Args:
        algebra: The algebra (rebased so that e_0 is the unit)
        normalized: Use the normalized complex
        check_degree: Degrees in which b² = B² = bB + Bb = 0 is verified
    """

    def __init__(self, algebra: FDAlgebra, normalized: bool = True, check_degree: int = 3):
        self.algebra = algebra.rebased_unit_first()
        self.normalized = normalized
        self.d = self.algebra.dimension
        self.grows = self.d >= 3 if normalized else self.d >= 2
        self._products = [
            [{k: c for k, c in enumerate(v) if c} for v in row]
            for row in self.algebra.structure_constants
        ]
        self._chains: dict[int, tuple[Chain, ...]] = {}
        self._index: dict[int, dict[Chain, int]] = {}
        self._b: dict[int, DomainMatrix] = {}
        self._B: dict[int, DomainMatrix] = {}
        top = check_degree
        if self.grows:
            top = min(top, settings.MAX_TENSOR_DEGREE - 2)
        self.check_identities(top)

    # -- chains --------------------------------------------------------------

    def chains(self, m: int) -> tuple[Chain, ...]:
        if m < 0:
            return ()
        if m not in self._chains:
            if self.grows and m > settings.MAX_TENSOR_DEGREE:
                raise ValidationError(
                    f"chain degree {m} exceeds MAX_TENSOR_DEGREE={settings.MAX_TENSOR_DEGREE} "
                    f"for a {self.d}-dimensional algebra"
                )
            tail = range(1, self.d) if self.normalized else range(self.d)
            self._chains[m] = tuple(
                (i0,) + rest for i0 in range(self.d) for rest in product(tail, repeat=m)
            )
            self._index[m] = {c: k for k, c in enumerate(self._chains[m])}
        return self._chains[m]

    def dimension(self, m: int) -> int:
        return len(self.chains(m))

    def _add(self, out: ChainVector, chain: Chain, coeff) -> None:
        if self.normalized and 0 in chain[1:]:
            return
        out[chain] = out.get(chain, QQ.zero) + coeff

    # -- operators on basis chains ---------------------------------------------

    def _b_chain(self, chain: Chain) -> ChainVector:
        m = len(chain) - 1
        out: ChainVector = {}
        if m == 0:
            return out
        for i in range(m):
            for k, c in self._products[chain[i]][chain[i + 1]].items():
                self._add(out, chain[:i] + (k,) + chain[i + 2:], (-1) ** i * c)
        for k, c in self._products[chain[m]][chain[0]].items():
            self._add(out, (k,) + chain[1:m], (-1) ** m * c)
        return out

    def _B_chain(self, chain: Chain) -> ChainVector:
        n = len(chain) - 1
        out: ChainVector = {}
        if self.normalized:
            for i in range(n + 1):
                self._add(out, (0,) + chain[i:] + chain[:i], (-1) ** (n * i))
            return out
        norm: ChainVector = {}
        current: ChainVector = {chain: QQ.one}
        for _ in range(n + 1):
            _accumulate(norm, current)
            current = _rotate(current)
        shifted = {(0,) + c: v for c, v in norm.items()}
        _accumulate(out, shifted)
        _accumulate(out, _rotate(shifted), -1)
        return out

    def _matrix(self, source_degree: int, target_degree: int, image: Callable[[Chain], ChainVector]) -> DomainMatrix:
        source = self.chains(source_degree)
        target = self.chains(target_degree)
        if not target:
            return linalg.zeros(0, len(source))
        index = self._index[target_degree]
        columns = [{index[c]: v for c, v in image(ch).items() if v} for ch in source]
        return linalg.from_columns(columns, len(target))

    def hochschild_b(self, m: int) -> DomainMatrix:
        """b: C_m -> C_{m-1}."""
        if m not in self._b:
            self._b[m] = self._matrix(m, m - 1, self._b_chain)
        return self._b[m]

    def connes_B(self, m: int) -> DomainMatrix:
        """B: C_m -> C_{m+1}."""
        if m not in self._B:
            self._B[m] = self._matrix(m, m + 1, self._B_chain)
        return self._B[m]

    def check_identities(self, top: int) -> None:
        """
        Verify b² = 0, B² = 0 and bB + Bb = 0 on C_0 .. C_top.

        Raises:
            ValidationError: if an identity fails
        """
        for m in range(top + 1):
            checks = {
                "b^2": linalg.matmul(self.hochschild_b(m + 1), self.hochschild_b(m + 2)),
                "B^2": linalg.matmul(self.connes_B(m + 1), self.connes_B(m)),
            }
            anti = linalg.matmul(self.hochschild_b(m + 1), self.connes_B(m))
            if m >= 1:
                anti = anti + linalg.matmul(self.connes_B(m - 1), self.hochschild_b(m))
            checks["bB+Bb"] = anti
            for name, matrix in checks.items():
                if not linalg.is_zero(matrix):
                    raise ValidationError(f"cyclic identity {name} = 0 fails in degree {m}")
        logger.debug(f"b, B identities hold through degree {top} (normalized={self.normalized})")


def _rotate(vector: ChainVector) -> ChainVector:
    """t(a0, ..., an) = (-1)^n (an, a0, ..., a_{n-1})."""
    out: ChainVector = {}
    for chain, c in vector.items():
        n = len(chain) - 1
        rotated = (chain[-1],) + chain[:-1]
        out[rotated] = out.get(rotated, QQ.zero) + (-1) ** n * c
    return out


class TotalComplex:
    """Tot of the bicomplex over columns lo..hi (hi=None: no upper cut)."""

    def __init__(self, bicomplex: CyclicBicomplex, lo: int, hi: Optional[int] = None):
        self.bicomplex = bicomplex
        self.lo = lo
        self.hi = hi
        self._differentials: dict[int, DomainMatrix] = {}

    def blocks(self, n: int) -> list[tuple[int, int]]:
        """(column p, chain degree n - 2p) pairs of Tot_n."""
        top = n // 2 if self.hi is None else min(self.hi, n // 2)
        return [(p, n - 2 * p) for p in range(self.lo, top + 1)]

    def layout(self, n: int) -> tuple[dict[int, tuple[int, int]], int]:
        offsets, total = {}, 0
        for p, m in self.blocks(n):
            size = self.bicomplex.dimension(m)
            offsets[p] = (total, size)
            total += size
        return offsets, total

    def dimension(self, n: int) -> int:
        return self.layout(n)[1]

    def differential(self, n: int) -> DomainMatrix:
        """Tot_n -> Tot_{n-1}: b inside each column plus B into the next column down."""
        if n not in self._differentials:
            bc = self.bicomplex
            self._differentials[n] = block_map(
                self, n, self, n - 1,
                lambda p, m: [(p, bc.hochschild_b(m)), (p - 1, bc.connes_B(m))],
            )
        return self._differentials[n]

    def cycles(self, n: int) -> DomainMatrix:
        return linalg.nullspace(self.differential(n))

    def homology(self, n: int) -> int:
        dim = self.dimension(n)
        if not dim:
            return 0
        return dim - linalg.rank(self.differential(n)) - linalg.rank(self.differential(n + 1))


def block_map(
    source: TotalComplex,
    source_degree: int,
    target: TotalComplex,
    target_degree: int,
    rule: Callable[[int, int], Iterable[tuple[int, DomainMatrix]]],
) -> DomainMatrix:
    """Assemble a map between total degrees from per-column pieces; pieces landing outside the target are dropped."""
    src, ncols = source.layout(source_degree)
    dst, nrows = target.layout(target_degree)
    dod: dict[int, dict[int, object]] = {}
    for p, m in source.blocks(source_degree):
        col_off = src[p][0]
        for q, piece in rule(p, m):
            if q not in dst:
                continue
            row_off = dst[q][0]
            for i, row in piece.to_dod().items():
                slot = dod.setdefault(i + row_off, {})
                for j, value in row.items():
                    slot[j + col_off] = slot.get(j + col_off, QQ.zero) + value
    return DomainMatrix.from_dod(dod, (nrows, ncols), QQ)


def _identity_rule(bicomplex: CyclicBicomplex, shift: int = 0, first: Optional[int] = None):
    def rule(p: int, m: int):
        if first is not None and p < first:
            return []
        return [(p + shift, linalg.identity(bicomplex.dimension(m)))]
    return rule


def induced_rank(chain_map: DomainMatrix, cycles: DomainMatrix, boundaries: DomainMatrix) -> int:
    """Rank of the map on homology induced by `chain_map` (cycles of the source, boundaries of the target)."""
    nrows = chain_map.shape[0]
    image = linalg.matmul(chain_map, cycles)
    base = linalg.rank(boundaries)
    return linalg.rank(linalg.hstack([image, boundaries], nrows)) - base


@lru_cache(maxsize=32)
def cyclic_bicomplex(algebra: FDAlgebra, normalized: bool = True) -> CyclicBicomplex:
    return CyclicBicomplex(algebra, normalized)


def _upper(theory: CyclicTheory) -> Optional[int]:
    return 0 if theory is CyclicTheory.HN else None


def _limit_dimension(bicomplex: CyclicBicomplex, theory: CyclicTheory, n: int, truncation: int) -> int:
    small = TotalComplex(bicomplex, -truncation, _upper(theory))
    large = TotalComplex(bicomplex, -truncation - 2, _upper(theory))
    restrict = block_map(large, n, small, n, _identity_rule(bicomplex))
    return induced_rank(restrict, large.cycles(n), small.differential(n + 1))


def bicomplex_homology(
    algebra: FDAlgebra,
    theory: CyclicTheory | str,
    n_range: Iterable[int],
    truncation: Optional[int] = None,
    normalized: bool = True,
) -> dict[int, int]:
    """
    Dimensions of HC_n, HN_n or HP_n of a finite-dimensional algebra.

    Args:
        algebra: The algebra
        theory: HC, HN or HP
        n_range: Total degrees to compute
        truncation: Column cut T for the products (HN, HP)
        normalized: Use normalized Hochschild chains

    Returns:
        Mapping n -> dimension

    Raises:
        ConvergenceError: if HN/HP at cut T and T + 2 disagree
    """
    theory = CyclicTheory(theory)
    cut = settings.BICOMPLEX_TRUNCATION if truncation is None else truncation
    if cut < 0:
        raise ValidationError(f"negative truncation {cut}")
    bicomplex = cyclic_bicomplex(algebra, normalized)
    out: dict[int, int] = {}
    if theory is CyclicTheory.HC:
        total = TotalComplex(bicomplex, 0)
        for n in n_range:
            out[n] = total.homology(n)
    else:
        for n in n_range:
            first = _limit_dimension(bicomplex, theory, n, cut)
            second = _limit_dimension(bicomplex, theory, n, cut + 2)
            if first != second:
                raise ConvergenceError(
                    f"{theory.value}_{n} changes from {first} to {second} between truncation {cut} and {cut + 2}"
                )
            out[n] = first
    logger.info(f"{theory.value} of {algebra.basis_labels}: {out}")
    return out


@dataclass(frozen=True)
class _Arrow:
    matrix: DomainMatrix
    source_cycles: DomainMatrix
    target_boundaries: DomainMatrix

    def rank(self) -> int:
        return induced_rank(self.matrix, self.source_cycles, self.target_boundaries)


def _exact_at(name: str, dim: int, incoming: _Arrow, outgoing: _Arrow) -> bool:
    composite = linalg.matmul(outgoing.matrix, incoming.matrix)
    if induced_rank(composite, incoming.source_cycles, outgoing.target_boundaries):
        logger.warning(f"SBI: composite through {name} is not zero")
        return False
    rank_in, rank_out = incoming.rank(), outgoing.rank()
    if rank_in + rank_out != dim:
        logger.warning(f"SBI: at {name} dim {dim} != rank in {rank_in} + rank out {rank_out}")
        return False
    return True


def sbi_dimension_check(
    algebra: FDAlgebra,
    window: tuple[int, int],
    truncation: Optional[int] = None,
) -> bool:
    """
    Check the sequence HN_n -> HP_n -> HC_{n-2} -> HN_{n-1} over a window of n.

    The maps I (inclusion), S (projection onto columns p >= 1) and the
    connecting map (B out of column 0) are built on the cut total complexes
    and checked for exactness at every node. The converged dimensions are
    then checked for exactness as a dimension sequence.
    """
    lo, hi = window
    if lo > hi:
        raise ValidationError(f"empty window {window}")
    cut = settings.BICOMPLEX_TRUNCATION if truncation is None else truncation
    bicomplex = cyclic_bicomplex(algebra)
    negative = TotalComplex(bicomplex, -cut, 0)
    periodic = TotalComplex(bicomplex, -cut)
    cyclic = TotalComplex(bicomplex, 0)

    def inclusion(n: int) -> _Arrow:
        return _Arrow(
            block_map(negative, n, periodic, n, _identity_rule(bicomplex)),
            negative.cycles(n),
            periodic.differential(n + 1),
        )

    def periodicity(n: int) -> _Arrow:
        return _Arrow(
            block_map(periodic, n, cyclic, n - 2, _identity_rule(bicomplex, shift=-1, first=1)),
            periodic.cycles(n),
            cyclic.differential(n - 1),
        )

    def connecting(n: int) -> _Arrow:
        """HC_{n-2} -> HN_{n-1}."""
        return _Arrow(
            block_map(
                cyclic, n - 2, negative, n - 1,
                lambda p, m: [(0, bicomplex.connes_B(m))] if p == 0 else [],
            ),
            cyclic.cycles(n - 2),
            negative.differential(n),
        )

    maps_exact = True
    for n in range(lo, hi + 1):
        maps_exact &= _exact_at(f"HN_{n}", negative.homology(n), connecting(n + 1), inclusion(n))
        maps_exact &= _exact_at(f"HP_{n}", periodic.homology(n), inclusion(n), periodicity(n))
        maps_exact &= _exact_at(f"HC_{n - 2}", cyclic.homology(n - 2), periodicity(n), connecting(n))

    degrees = range(lo, hi + 1)
    hn = bicomplex_homology(algebra, CyclicTheory.HN, degrees, cut)
    hp = bicomplex_homology(algebra, CyclicTheory.HP, degrees, cut)
    hc = bicomplex_homology(algebra, CyclicTheory.HC, [n - 2 for n in degrees])
    entries = []
    for n in range(hi, lo - 1, -1):
        entries += [
            (f"HN_{n}", DimensionValue.known(hn[n])),
            (f"HP_{n}", DimensionValue.known(hp[n])),
            (f"HC_{n - 2}", DimensionValue.known(hc[n - 2])),
        ]
    try:
        solve(LESInstance.build(entries, name="SBI"))
        dims_exact = True
    except InconsistentSequenceError as exc:
        logger.warning(f"SBI dimensions inconsistent: {exc}")
        dims_exact = False
    logger.info(f"SBI check on {window}: maps {maps_exact}, dimensions {dims_exact}")
    return maps_exact and dims_exact
