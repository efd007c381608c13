"""
KBlowup Poly - Monomial Orders

Admissible orders pluggable into sympy's PolyRing: the two named orders
plus block-elimination and weighted-degree orders built on grevlex ties.

PURE MATH - No I/O
"""
from enum import Enum
from typing import Optional, Sequence

from sympy.polys.orderings import MonomialOrder, grevlex, lex

from kblowup.core.exceptions import ValidationError


class MonomialOrderKind(str, Enum):
    """Named monomial orders accepted on the command line"""
    DEGREVLEX = "degrevlex"
    LEX = "lex"


def grevlex_key(monomial: Sequence[int]) -> tuple:
    return (sum(monomial), tuple(reversed([-e for e in monomial])))


class BlockEliminationOrder(MonomialOrder):
    """
    Eliminates the first `block_size` variables.

    Monomials compare by degrevlex on the first block, then degrevlex on
    the rest, so anything involving the first block beats anything free of it.
    """

    alias = "block"
    is_global = True

    def __init__(self, block_size: int):
        if block_size < 0:
            raise ValidationError(f"block size must be >= 0, got {block_size}")
        self.block_size = block_size

    def __call__(self, monomial):
        k = self.block_size
        return (grevlex_key(monomial[:k]), grevlex_key(monomial[k:]))

    def __repr__(self):
        return f"BlockEliminationOrder({self.block_size})"

    def __eq__(self, other):
        return isinstance(other, BlockEliminationOrder) and other.block_size == self.block_size

    def __hash__(self):
        return hash((self.__class__, self.block_size))


class WeightedDegreeOrder(MonomialOrder):
    """
    Compare by a primary weight, then an optional secondary weight, then degrevlex.

    Weights are non-negative; zero weights are allowed for the primary
    grading as long as the secondary grading (or degrevlex) keeps the order global.
    """

    alias = "wdeg"
    is_global = True

    def __init__(self, weights: Sequence[int], secondary: Optional[Sequence[int]] = None):
        if any(w < 0 for w in weights):
            raise ValidationError(f"weights must be non-negative, got {tuple(weights)}")
        if secondary is not None:
            if len(secondary) != len(weights):
                raise ValidationError("primary and secondary weights differ in length")
            if any(w < 0 for w in secondary):
                raise ValidationError(f"weights must be non-negative, got {tuple(secondary)}")
        self.weights = tuple(int(w) for w in weights)
        self.secondary = tuple(int(w) for w in secondary) if secondary is not None else None

    def __call__(self, monomial):
        primary = sum(w * e for w, e in zip(self.weights, monomial))
        if self.secondary is None:
            return (primary, 0, grevlex_key(monomial))
        second = sum(w * e for w, e in zip(self.secondary, monomial))
        return (primary, second, grevlex_key(monomial))

    def __repr__(self):
        return f"WeightedDegreeOrder({self.weights}, {self.secondary})"

    def __eq__(self, other):
        return (
            isinstance(other, WeightedDegreeOrder)
            and other.weights == self.weights
            and other.secondary == self.secondary
        )

    def __hash__(self):
        return hash((self.__class__, self.weights, self.secondary))


def order_from_kind(kind: MonomialOrderKind | str) -> MonomialOrder:
    kind = MonomialOrderKind(kind)
    return grevlex if kind is MonomialOrderKind.DEGREVLEX else lex


__all__ = [
    "MonomialOrderKind",
    "BlockEliminationOrder",
    "WeightedDegreeOrder",
    "grevlex",
    "lex",
    "grevlex_key",
    "order_from_kind",
]
