"""
KBlowup Poly - Rings, Polynomials and Ideals

Polynomial rings over QQ are sympy PolyRings; ideals are frozen
generator lists tied to a ring.

PURE MATH - No I/O
"""
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from sympy import QQ, Symbol
from sympy.polys.orderings import MonomialOrder, grevlex
from sympy.polys.rings import PolyElement, PolyRing

from kblowup.core.exceptions import (
    RingMismatchError,
    ValidationError,
    VariableCollisionError,
)

RingContext = PolyRing
Polynomial = PolyElement
Monomial = tuple[int, ...]

_NAME = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


def polynomial_ring(names: Sequence[str], order: MonomialOrder = grevlex) -> PolyRing:
    """
    Create QQ[names] with the given monomial order.

    Args:
        names: Distinct variable names (letters, digits, underscores)
        order: Monomial order, degrevlex by default

    Returns:
        sympy PolyRing
    """
    names = tuple(names)
    if not names:
        raise ValidationError("a polynomial ring needs at least one variable")
    for name in names:
        if not _NAME.match(name):
            raise ValidationError(f"invalid variable name {name!r}")
    if len(set(names)) != len(names):
        raise ValidationError(f"duplicate variable names in {names}")
    return PolyRing([Symbol(n) for n in names], QQ, order)


def variable_names(ring: PolyRing) -> tuple[str, ...]:
    return tuple(str(s) for s in ring.symbols)


def with_order(ring: PolyRing, order: MonomialOrder) -> PolyRing:
    if ring.order == order:
        return ring
    return PolyRing(ring.symbols, ring.domain, order)


def fresh_name(taken: Iterable[str], base: str) -> str:
    """First of base, base_1, base_2, ... not in `taken`."""
    taken = set(taken)
    if base not in taken:
        return base
    k = 1
    while f"{base}_{k}" in taken:
        k += 1
    return f"{base}_{k}"


def total_degree(f: PolyElement) -> int:
    """Total degree; -1 for the zero polynomial."""
    return max((sum(m) for m in f.keys()), default=-1)


def weighted_degree(monomial: Monomial, weights: Sequence[int]) -> int:
    return sum(w * e for w, e in zip(weights, monomial))


def min_form(f: PolyElement) -> PolyElement:
    """Lowest-total-degree homogeneous component; zero maps to zero."""
    if not f:
        return f
    low = min(sum(m) for m in f.keys())
    return f.ring.from_dict({m: c for m, c in f.items() if sum(m) == low})


def is_homogeneous(f: PolyElement) -> tuple[bool, Optional[int]]:
    """Return (homogeneous?, degree); the zero polynomial is homogeneous of no degree."""
    if not f:
        return True, None
    degrees = {sum(m) for m in f.keys()}
    if len(degrees) == 1:
        return True, degrees.pop()
    return False, None


def is_weighted_homogeneous(f: PolyElement, weights: Sequence[int]) -> bool:
    return len({weighted_degree(m, weights) for m in f.keys()}) <= 1


def homogenize(f: PolyElement, aux: str) -> PolyElement:
    """
    Homogenize f with a new last variable `aux`.

    Raises:
        VariableCollisionError: if `aux` already names a variable
    """
    names = variable_names(f.ring)
    if aux in names:
        raise VariableCollisionError(f"auxiliary variable {aux!r} already in ring {names}")
    target = polynomial_ring(names + (aux,), f.ring.order)
    top = total_degree(f)
    return target.from_dict({m + (top - sum(m),): c for m, c in f.items()})


def transfer(f: PolyElement, target: PolyRing) -> PolyElement:
    """
    Re-express f in `target`, matching variables by name.

    Variables of f's ring missing from `target` must not occur in f.
    """
    if f.ring == target:
        return f
    source_names = variable_names(f.ring)
    target_index = {name: k for k, name in enumerate(variable_names(target))}
    positions = []
    for k, name in enumerate(source_names):
        positions.append(target_index.get(name))
    n = target.ngens
    terms = {}
    for m, c in f.items():
        exps = [0] * n
        for k, e in enumerate(m):
            if not e:
                continue
            pos = positions[k]
            if pos is None:
                raise RingMismatchError(
                    f"variable {source_names[k]!r} does not exist in target ring {variable_names(target)}"
                )
            exps[pos] = e
        terms[tuple(exps)] = c
    return target.from_dict(terms)


def substitute_one(f: PolyElement, index: int, target: PolyRing) -> PolyElement:
    """Set variable `index` to 1 and transfer the result to `target`."""
    terms: dict[Monomial, object] = {}
    for m, c in f.items():
        key = m[:index] + (0,) + m[index + 1:]
        terms[key] = terms.get(key, QQ.zero) + c
    return transfer(f.ring.from_dict({m: c for m, c in terms.items() if c}), target)


def substitute_zero(f: PolyElement, indices: Iterable[int]) -> PolyElement:
    indices = tuple(indices)
    return f.ring.from_dict({m: c for m, c in f.items() if all(m[i] == 0 for i in indices)})


def constant_term(f: PolyElement):
    return f.get(f.ring.zero_monom, QQ.zero)


def check_same_ring(*polys: PolyElement) -> PolyRing:
    rings = {p.ring for p in polys}
    if len(rings) > 1:
        raise RingMismatchError(f"polynomials from {len(rings)} different rings")
    return rings.pop()


@dataclass(frozen=True)
class Ideal:
    """A finitely generated ideal of a polynomial ring over QQ."""
    ring: PolyRing
    generators: tuple[PolyElement, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatchError(
                    f"generator {g} lives in {variable_names(g.ring)}, ideal in {variable_names(self.ring)}"
                )

    @classmethod
    def of(cls, ring: PolyRing, generators: Iterable[PolyElement]) -> "Ideal":
        return cls(ring, tuple(transfer(g, ring) for g in generators))

    @classmethod
    def zero(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, (ring.one,))

    @classmethod
    def maximal_at_origin(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, tuple(ring.gens))

    @property
    def names(self) -> tuple[str, ...]:
        return variable_names(self.ring)

    @property
    def nonzero_generators(self) -> tuple[PolyElement, ...]:
        return tuple(g for g in self.generators if g)

    @property
    def is_zero(self) -> bool:
        return not self.nonzero_generators

    def transfer(self, target: PolyRing) -> "Ideal":
        return Ideal(target, tuple(transfer(g, target) for g in self.generators))

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatchError("cannot add ideals of different rings")
        return Ideal(self.ring, self.generators + other.generators)

    def __str__(self):
        from kblowup.poly.parser import format_polynomial

        inner = ", ".join(format_polynomial(g) for g in self.generators)
        return f"<{inner}> in QQ[{', '.join(self.names)}]"
