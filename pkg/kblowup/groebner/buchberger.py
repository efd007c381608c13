"""
KBlowup Groebner - Buchberger's Algorithm

Improved Buchberger with normal selection and the Gebauer-Moeller
criteria, over sympy PolyElements in a ring carrying the desired order.
An optional pair filter restricts S-pairs, which is how submodules of
free modules (encoded with position variables) reuse the same engine.

PURE MATH - No I/O
"""
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from loguru import logger
from sympy.polys.orderings import MonomialOrder
from sympy.polys.rings import PolyElement, PolyRing

from kblowup.core.exceptions import RingMismatchError
from kblowup.poly.ring import Ideal, with_order

PairFilter = Callable[[tuple[int, ...]], bool]


def s_polynomial(p1: PolyElement, p2: PolyElement) -> PolyElement:
    """lcm/LM(p1)*p1 - lcm/LM(p2)*p2 for monic p1, p2."""
    ring = p1.ring
    lcm = ring.monomial_lcm(p1.LM, p2.LM)
    return p1.mul_monom(ring.monomial_div(lcm, p1.LM)) - p2.mul_monom(ring.monomial_div(lcm, p2.LM))


def groebner_polys(
    polys: Sequence[PolyElement],
    ring: PolyRing,
    admissible: Optional[PairFilter] = None,
) -> list[PolyElement]:
    """
    Reduced Groebner basis of the polynomials under `ring.order`.

    Args:
        polys: Generators, already elements of `ring`
        ring: Ring whose order is used
        admissible: Keeps an S-pair only if it accepts the pair's lcm

    Returns:
        Monic reduced basis sorted by leading monomial, largest first
    """
    order = ring.order
    monomial_mul = ring.monomial_mul
    monomial_div = ring.monomial_div
    monomial_lcm = ring.monomial_lcm
    accept = admissible or (lambda _lcm: True)

    f = [p for p in polys if p]
    if not f:
        return []
    if any(p.ring != ring for p in f):
        raise RingMismatchError("generators do not belong to the basis ring")

    def select(pairs):
        return min(pairs, key=lambda pair: order(monomial_lcm(f[pair[0]].LM, f[pair[1]].LM)))

    def normal(g, indices):
        h = g.rem([f[j] for j in indices])
        if not h:
            return None
        h = h.monic()
        if h not in index_of:
            index_of[h] = len(f)
            f.append(h)
        return h.LM, index_of[h]

    def update(G, B, ih):
        h = f[ih]
        mh = h.LM

        C = G.copy()
        D = set()
        while C:
            ig = C.pop()
            mg = f[ig].LM
            lcm_hg = monomial_lcm(mh, mg)

            def lcm_divides(ip):
                return monomial_div(lcm_hg, monomial_lcm(mh, f[ip].LM))

            if monomial_mul(mh, mg) == lcm_hg or (
                not any(lcm_divides(ipx) for ipx in C)
                and not any(lcm_divides(pr[1]) for pr in D)
            ):
                D.add((ih, ig))

        E = set()
        while D:
            ih_, ig = D.pop()
            mg = f[ig].LM
            lcm_hg = monomial_lcm(mh, mg)
            if monomial_mul(mh, mg) != lcm_hg and accept(lcm_hg):
                E.add((ih_, ig))

        B_new = set()
        while B:
            ig1, ig2 = B.pop()
            mg1, mg2 = f[ig1].LM, f[ig2].LM
            lcm12 = monomial_lcm(mg1, mg2)
            if (
                not monomial_div(lcm12, mh)
                or monomial_lcm(mg1, mh) == lcm12
                or monomial_lcm(mg2, mh) == lcm12
            ):
                B_new.add((ig1, ig2))
        B_new |= E

        G_new = {ig for ig in G if not monomial_div(f[ig].LM, mh)}
        G_new.add(ih)
        return G_new, B_new

    # inter-reduce the input first
    f1 = f[:]
    while True:
        f = f1[:]
        f1 = []
        for i, p in enumerate(f):
            r = p.rem(f[:i])
            if r:
                f1.append(r.monic())
        if f == f1:
            break
    if not f:
        return []

    index_of: dict[PolyElement, int] = {}
    pending = set()
    G: set[int] = set()
    pairs: set[tuple[int, int]] = set()
    for i, h in enumerate(f):
        index_of[h] = i
        pending.add(i)

    while pending:
        h = min((f[x] for x in pending), key=lambda p: order(p.LM))
        ih = index_of[h]
        pending.remove(ih)
        G, pairs = update(G, pairs, ih)

    zero_reductions = 0
    while pairs:
        ig1, ig2 = select(pairs)
        pairs.remove((ig1, ig2))
        h = s_polynomial(f[ig1], f[ig2])
        divisors = sorted(G, key=lambda g: order(f[g].LM))
        ht = normal(h, divisors)
        if ht:
            G, pairs = update(G, pairs, ht[1])
        else:
            zero_reductions += 1

    reduced = set()
    for ig in G:
        ht = normal(f[ig], G - {ig})
        if ht:
            reduced.add(ht[1])

    basis = sorted((f[ig] for ig in reduced), key=lambda p: order(p.LM), reverse=True)
    logger.debug(f"Groebner basis: {len(basis)} elements, {zero_reductions} zero reductions")
    return basis


def is_groebner(basis: Sequence[PolyElement], admissible: Optional[PairFilter] = None) -> bool:
    """Buchberger's criterion: every admissible S-pair reduces to zero."""
    basis = [g.monic() for g in basis if g]
    accept = admissible or (lambda _lcm: True)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            ring = basis[i].ring
            if not accept(ring.monomial_lcm(basis[i].LM, basis[j].LM)):
                continue
            if s_polynomial(basis[i], basis[j]).rem(basis):
                return False
    return True


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis of an ideal under a fixed order."""
    ideal: Ideal
    order: MonomialOrder
    basis: tuple[PolyElement, ...]

    @property
    def ring(self) -> PolyRing:
        return with_order(self.ideal.ring, self.order)

    @property
    def leading_monomials(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.LM for g in self.basis)

    @property
    def is_unit(self) -> bool:
        return any(g.is_ground and g for g in self.basis)

    def reduce(self, f: PolyElement) -> PolyElement:
        """Normal form of f, expressed back in the ideal's ring."""
        if f.ring != self.ideal.ring and f.ring != self.ring:
            raise RingMismatchError("polynomial and basis live in different rings")
        nf = f.set_ring(self.ring).rem(list(self.basis)) if self.basis else f.set_ring(self.ring)
        return nf.set_ring(self.ideal.ring)

    def as_ideal(self) -> Ideal:
        ring = self.ideal.ring
        return Ideal(ring, tuple(g.set_ring(ring) for g in self.basis))
