"""Factorization of ideals into a generator class, with replayable certificates.

The multiplicative closure of a generator set is explored with a worklist
(known ideals are multiplied by generators only, which spans the same
semigroup with a smaller frontier); predecessor links turn any reachable
ideal back into an explicit factor list.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .core import RingTable
from .errors import RingMismatchError
from .ideals import IdealSet, ideal_product, is_prime, proper_ideals
from .classify import ClassReport, is_n_oa_fast, list_n_oa_ideals


@dataclass
class ClosureIndex:
    """Reachability index of the semigroup generated by a set of ideals.

    ``parent[mask] = (predecessor mask or None, generator index)``; following
    the links from any reachable mask terminates at a generator and the
    collected generators multiply back to the ideal.
    """

    ring: Optional[RingTable]
    generators: Tuple[IdealSet, ...]
    parent: Dict[int, Tuple[Optional[int], int]] = field(default_factory=dict)

    def __contains__(self, ideal: IdealSet) -> bool:
        return ideal.mask in self.parent

    def factor_indices(self, ideal: IdealSet) -> List[int]:
        if ideal.mask not in self.parent:
            raise KeyError("ideal is not representable from the generators")
        out: List[int] = []
        mask: Optional[int] = ideal.mask
        while mask is not None:
            mask, gi = self.parent[mask]
            out.append(gi)
        return list(reversed(out))


@dataclass
class Certificate:
    """A replayable factorization: product of ``factors`` equals ``target``."""

    target: IdealSet
    factors: Tuple[IdealSet, ...]
    class_tag: str
    reports: Tuple[ClassReport, ...] = ()

    def replay(self) -> bool:
        if not self.factors:
            return False
        acc = self.factors[0]
        for f in self.factors[1:]:
            acc = ideal_product(acc, f)
        return acc == self.target


def multiplicative_closure(generators: Sequence[IdealSet]) -> ClosureIndex:
    """Least set of ideals containing the generators and closed under product
    with a generator (worklist to fixpoint; finite, bounded by the lattice)."""
    gens = sorted({g.mask: g for g in generators}.values(), key=lambda g: g.sort_key)
    if not gens:
        return ClosureIndex(ring=None, generators=())
    ring = gens[0].ring
    for g in gens:
        if g.ring is not ring:
            raise RingMismatchError("generators belong to different rings")
        if not g.is_proper:
            raise ValueError("closure generators must be proper ideals")
    index = ClosureIndex(ring=ring, generators=tuple(gens))
    work: deque = deque()
    for gi, g in enumerate(gens):
        if g.mask not in index.parent:
            index.parent[g.mask] = (None, gi)
            work.append(g.mask)
    while work:
        mask = work.popleft()
        current = IdealSet(ring, mask)
        for gi, g in enumerate(gens):
            child = ideal_product(current, g).mask
            if child not in index.parent:
                index.parent[child] = (mask, gi)
                work.append(child)
    return index


def find_factorization(
    ideal: IdealSet,
    generators: Sequence[IdealSet],
    class_tag: str = "",
    n: Optional[int] = None,
    index: Optional[ClosureIndex] = None,
) -> Optional[Certificate]:
    """Certificate for ``ideal`` as a product of generators, or ``None``.

    Factors come from the closure's predecessor links and are canonicalized
    by lattice order (the product is commutative); the certificate is
    replayed before being returned.
    """
    if not ideal.is_proper:
        raise ValueError("only proper ideals are factored")
    if index is None:
        index = multiplicative_closure(generators)
    if ideal not in index:
        return None
    factors = tuple(
        sorted(
            (index.generators[gi] for gi in index.factor_indices(ideal)),
            key=lambda f: f.sort_key,
        )
    )
    reports = tuple(
        ClassReport(
            ideal=f,
            n=n or 1,
            is_prime=is_prime(f),
            is_n_oa=is_n_oa_fast(f, n) if n else None,
        )
        for f in factors
    )
    cert = Certificate(target=ideal, factors=factors, class_tag=class_tag, reports=reports)
    if not cert.replay():
        raise AssertionError("closure produced a non-replaying certificate")
    return cert


def is_n_oaf(ring: RingTable, n: int) -> Tuple[bool, Optional[IdealSet]]:
    """Every proper ideal (the zero ideal included) is a product of n-OA
    ideals; on failure returns the canonically least unrepresentable ideal."""
    gens = list_n_oa_ideals(ring, n)
    index = multiplicative_closure(gens)
    for ideal in proper_ideals(ring):
        if ideal not in index:
            return False, ideal
    return True, None


def is_general_zpi(ring: RingTable) -> Tuple[bool, Optional[IdealSet]]:
    """Every proper ideal is a product of prime ideals."""
    primes = [p for p in proper_ideals(ring) if is_prime(p)]
    index = multiplicative_closure(primes)
    for ideal in proper_ideals(ring):
        if ideal not in index:
            return False, ideal
    return True, None


def oaf_dim(ring: RingTable, n_max: int) -> Optional[int]:
    """Least n ≤ n_max with every proper ideal n-OA-factorable, else None.

    The scan stops at the first success: the factorization property is
    monotone in n because every n-OA ideal is (n+1)-OA."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    for n in range(1, n_max + 1):
        if is_n_oaf(ring, n)[0]:
            return n
    return None
