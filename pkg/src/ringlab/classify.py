"""Deciding the absorbing-style ideal classes.

Two routes are provided for the "n nonunit factors" class: a definition-level
brute force over nonunit tuples (the oracle, with a tuple-visit budget) and a
fast path through the local/non-local characterization (prime, or squeezed
between M^n and M).  Witnesses are the lexicographically least violating
tuples, which keeps report files stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .core import RingTable, local_decomposition
from .errors import BudgetExceededError
from .ideals import (
    IdealSet,
    all_ideals,
    ideal_power,
    is_idempotent,
    is_prime,
    proper_ideals,
)

DEFAULT_TUPLE_BUDGET = 10**8


@dataclass
class ClassReport:
    """Classification of one ideal at one n, with a replayable witness."""

    ideal: IdealSet
    n: int
    is_prime: bool
    is_n_absorbing: Optional[bool] = None
    is_n_oa: Optional[bool] = None
    witness: Optional[Tuple[int, ...]] = None
    witness_kind: Optional[str] = None  # "n-oa" or "n-absorbing"


def _require_proper(ideal: IdealSet) -> None:
    if not ideal.is_proper:
        raise ValueError("ideal must be proper")


def _sorted_insert(tup: Tuple[int, ...], a: int) -> Tuple[int, ...]:
    for i, t in enumerate(tup):
        if a <= t:
            return tup[:i] + (a,) + tup[i:]
    return tup + (a,)


def is_n_oa(
    ideal: IdealSet, n: int, budget: int = DEFAULT_TUPLE_BUDGET
) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    """Definition-level check: every product of n+1 nonunits landing in I has
    its first-n product or its last factor in I.

    Multisets are iterated for the first n slots (the product is commutative
    there) with per-product memoization; the last slot stays free.  Returns
    ``(verdict, witness)`` with the witness the lex-least violating tuple.
    """
    _require_proper(ideal)
    if n < 1:
        raise ValueError("n must be a positive integer")
    ring = ideal.ring
    mul = ring.mul
    nonunits = ring.nonunits
    visits = 0
    # level[p] = lex-least nondecreasing k-tuple of nonunits with product p
    level = {}
    for a in nonunits:
        if a not in level:
            level[a] = (a,)
    for _ in range(n - 1):
        nxt: dict = {}
        for p, tup in level.items():
            row = mul[p]
            for a in nonunits:
                visits += 1
                if visits > budget:
                    raise BudgetExceededError(
                        f"n-OA sweep exceeded budget of {budget} tuple visits"
                    )
                q = row[a]
                cand = _sorted_insert(tup, a)
                cur = nxt.get(q)
                if cur is None or cand < cur:
                    nxt[q] = cand
        level = nxt
    best: Optional[Tuple[int, ...]] = None
    for p, tup in level.items():
        if p in ideal:
            continue
        row = mul[p]
        for b in nonunits:
            visits += 1
            if visits > budget:
                raise BudgetExceededError(
                    f"n-OA sweep exceeded budget of {budget} tuple visits"
                )
            if b not in ideal and row[b] in ideal:
                cand = tup + (b,)
                if best is None or cand < best:
                    best = cand
                break
    return best is None, best


def is_n_absorbing(
    ideal: IdealSet, n: int, budget: int = DEFAULT_TUPLE_BUDGET
) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    """Definition-level check: any product of n+1 ring elements in I has an
    n-subproduct in I.  Fully symmetric, so multisets suffice."""
    _require_proper(ideal)
    if n < 1:
        raise ValueError("n must be a positive integer")
    ring = ideal.ring
    mul = ring.mul
    size = ring.size
    target = n + 1
    chosen: List[int] = []
    pref: List[int] = [ring.one]
    visits = 0

    def rec(start: int) -> Optional[Tuple[int, ...]]:
        nonlocal visits
        if len(chosen) == target:
            visits += 1
            if visits > budget:
                raise BudgetExceededError(
                    f"n-absorbing sweep exceeded budget of {budget} tuple visits"
                )
            if pref[-1] not in ideal:
                return None
            suf = [ring.one] * (target + 1)
            for i in range(target - 1, -1, -1):
                suf[i] = mul[chosen[i]][suf[i + 1]]
            for i in range(target):
                if mul[pref[i]][suf[i + 1]] in ideal:
                    return None
            return tuple(chosen)
        for a in range(start, size):
            chosen.append(a)
            pref.append(mul[pref[-1]][a])
            hit = rec(a)
            chosen.pop()
            pref.pop()
            if hit is not None:
                return hit
        return None

    witness = rec(0)
    return witness is None, witness


def is_n_oa_fast(ideal: IdealSet, n: int) -> bool:
    """Characterization path, no tuple sweep: in a non-local ring the class
    collapses to prime; in a local ring it is prime or M^n ⊆ I ⊆ M."""
    _require_proper(ideal)
    if n < 1:
        raise ValueError("n must be a positive integer")
    ring = ideal.ring
    if not ring.is_local:
        return is_prime(ideal)
    if is_prime(ideal):
        return True
    return ideal_power(ring.maximal_ideals[0], n) <= ideal


def list_n_oa_ideals(ring: RingTable, n: int) -> List[IdealSet]:
    """All proper ideals passing the fast path, canonical lattice order."""
    return [i for i in proper_ideals(ring) if is_n_oa_fast(i, n)]


def classify_ideal(
    ideal: IdealSet, n: int, budget: int = DEFAULT_TUPLE_BUDGET
) -> ClassReport:
    prime = is_prime(ideal)
    absorbing, wit_abs = is_n_absorbing(ideal, n, budget)
    oa, wit_oa = is_n_oa(ideal, n, budget)
    if not oa:
        witness, kind = wit_oa, "n-oa"
    elif not absorbing:
        witness, kind = wit_abs, "n-absorbing"
    else:
        witness, kind = None, None
    return ClassReport(
        ideal=ideal,
        n=n,
        is_prime=prime,
        is_n_absorbing=absorbing,
        is_n_oa=oa,
        witness=witness,
        witness_kind=kind,
    )


def is_von_neumann_regular(ring: RingTable) -> Tuple[bool, Optional[IdealSet]]:
    """Every proper ideal idempotent; witness is the least non-idempotent one."""
    for ideal in proper_ideals(ring):
        if not is_idempotent(ideal):
            return False, ideal
    return True, None


def is_product_of_fields(ring: RingTable) -> bool:
    return all(factor.is_field for factor, _ in local_decomposition(ring))
