"""Ideals of a finite commutative ring as element bitmasks.

An ideal is stored as an integer bitmask over element ids, together with a
lazily computed canonical generator list.  All lattice-wide outputs are sorted
by ``(popcount, bitmask)`` so reports are reproducible.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterable, List, Optional, Sequence, Tuple

from .errors import LatticeGuardError, RingMismatchError

if TYPE_CHECKING:  # pragma: no cover
    from .core import RingTable

DEFAULT_MAX_IDEALS = 100_000


def _bits(mask: int) -> List[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


class IdealSet:
    """An ideal of a :class:`~ringlab.core.RingTable`, identified by bitmask."""

    __slots__ = ("ring", "mask", "_generators")

    def __init__(self, ring: "RingTable", mask: int):
        self.ring = ring
        self.mask = mask
        self._generators: Optional[Tuple[int, ...]] = None

    # -- set views ----------------------------------------------------------

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(_bits(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, elem: int) -> bool:
        return bool((self.mask >> elem) & 1)

    def __iter__(self):
        return iter(_bits(self.mask))

    @property
    def is_proper(self) -> bool:
        return self.mask != (1 << self.ring.size) - 1

    @property
    def is_zero(self) -> bool:
        return self.mask == 1 << self.ring.zero

    @property
    def sort_key(self) -> Tuple[int, int]:
        return (self.mask.bit_count(), self.mask)

    # -- comparisons (same ring only) ---------------------------------------

    def _check_ring(self, other: "IdealSet") -> None:
        if self.ring is not other.ring:
            raise RingMismatchError("ideals belong to different rings")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IdealSet):
            return NotImplemented
        return self.ring is other.ring and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((id(self.ring), self.mask))

    def __le__(self, other: "IdealSet") -> bool:
        self._check_ring(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "IdealSet") -> bool:
        return self <= other and self.mask != other.mask

    # -- presentation --------------------------------------------------------

    @property
    def generators(self) -> Tuple[int, ...]:
        """Canonical generators: greedily pick least uncovered element ids."""
        if self._generators is None:
            gens: List[int] = []
            covered = 1 << self.ring.zero
            while covered != self.mask:
                least = (self.mask & ~covered & -(self.mask & ~covered)).bit_length() - 1
                gens.append(least)
                covered = generate_ideal(self.ring, gens).mask
            self._generators = tuple(gens)
        return self._generators

    def describe(self) -> str:
        names = self.ring.element_names
        if not self.generators:
            return "(" + names[self.ring.zero] + ")"
        return "(" + ", ".join(names[g] for g in self.generators) + ")"

    def __repr__(self) -> str:  # pragma: no cover
        return f"IdealSet({self.describe()}, size={len(self)})"


# -- construction -------------------------------------------------------------


def _additive_closure(ring: "RingTable", mask: int) -> int:
    """Close a set of elements (assumed closed under ring multiplication)
    under addition; the result is then an ideal bitmask."""
    add = ring.add
    members = set(_bits(mask))
    members.add(ring.zero)
    work = list(members)
    while work:
        x = work.pop()
        row = add[x]
        for y in tuple(members):
            z = row[y]
            if z not in members:
                members.add(z)
                work.append(z)
    out = 0
    for m in members:
        out |= 1 << m
    return out


def generate_ideal(ring: "RingTable", gens: Iterable[int]) -> IdealSet:
    """Smallest ideal containing ``gens`` (empty ``gens`` gives the zero ideal)."""
    mul = ring.mul
    mask = 1 << ring.zero
    for g in gens:
        for r in range(ring.size):
            mask |= 1 << mul[r][g]
    return IdealSet(ring, _additive_closure(ring, mask))


def zero_ideal(ring: "RingTable") -> IdealSet:
    return IdealSet(ring, 1 << ring.zero)


def unit_ideal(ring: "RingTable") -> IdealSet:
    return IdealSet(ring, (1 << ring.size) - 1)


def all_ideals(ring: "RingTable", max_ideals: int = DEFAULT_MAX_IDEALS) -> List[IdealSet]:
    """Every ideal of ``ring``, sorted by (popcount, bitmask).

    Computed as the closure of the principal ideals under pairwise sum, which
    is exhaustive because every ideal of a finite ring is a finite sum of
    principal ideals.  Results are cached on the ring.
    """
    cached = getattr(ring, "_ideal_cache", None)
    if cached is not None:
        return list(cached)

    principal = sorted({generate_ideal(ring, [a]).mask for a in range(ring.size)})
    masks = set(principal)
    if len(masks) > max_ideals:
        raise LatticeGuardError(
            f"ideal lattice exceeds cap of {max_ideals} ideals"
        )
    work = list(principal)
    while work:
        m = work.pop()
        for p in principal:
            if p & ~m == 0:
                continue
            s = _additive_closure(ring, m | p)
            if s not in masks:
                if len(masks) >= max_ideals:
                    raise LatticeGuardError(
                        f"ideal lattice exceeds cap of {max_ideals} ideals"
                    )
                masks.add(s)
                work.append(s)
    out = sorted((IdealSet(ring, m) for m in masks), key=lambda i: i.sort_key)
    ring._ideal_cache = tuple(out)
    return list(out)


def proper_ideals(ring: "RingTable", max_ideals: int = DEFAULT_MAX_IDEALS) -> List[IdealSet]:
    return [i for i in all_ideals(ring, max_ideals) if i.is_proper]


# -- arithmetic ----------------------------------------------------------------


def ideal_sum(left: IdealSet, right: IdealSet) -> IdealSet:
    left._check_ring(right)
    return IdealSet(left.ring, _additive_closure(left.ring, left.mask | right.mask))


def ideal_product(left: IdealSet, right: IdealSet) -> IdealSet:
    left._check_ring(right)
    mul = left.ring.mul
    mask = 1 << left.ring.zero
    for a in left:
        row = mul[a]
        for b in right:
            mask |= 1 << row[b]
    return IdealSet(left.ring, _additive_closure(left.ring, mask))


def ideal_power(ideal: IdealSet, k: int) -> IdealSet:
    if k < 0:
        raise ValueError("negative ideal power")
    out = unit_ideal(ideal.ring)
    for _ in range(k):
        out = ideal_product(out, ideal)
    return out


def ideal_colon(ideal: IdealSet, x: int) -> IdealSet:
    """The residual (I : x) = {r : r*x in I}."""
    mul = ideal.ring.mul
    mask = 0
    for r in range(ideal.ring.size):
        if mul[r][x] in ideal:
            mask |= 1 << r
    return IdealSet(ideal.ring, mask)


def radical(ideal: IdealSet) -> IdealSet:
    """sqrt(I): elements with some power in I (exponent bounded by |R|)."""
    ring = ideal.ring
    mul = ring.mul
    mask = 0
    for r in range(ring.size):
        p = r
        for _ in range(ring.size):
            if p in ideal:
                mask |= 1 << r
                break
            p = mul[p][r]
    return IdealSet(ring, mask)


# -- classical predicates --------------------------------------------------------


def _require_proper(ideal: IdealSet) -> None:
    if not ideal.is_proper:
        raise ValueError("ideal must be proper")


def is_prime(ideal: IdealSet) -> bool:
    _require_proper(ideal)
    mul = ideal.ring.mul
    outside = [a for a in range(ideal.ring.size) if a not in ideal]
    for i, a in enumerate(outside):
        row = mul[a]
        for b in outside[i:]:
            if row[b] in ideal:
                return False
    return True


def is_maximal(ideal: IdealSet) -> bool:
    _require_proper(ideal)
    for other in all_ideals(ideal.ring):
        if other.is_proper and ideal < other:
            return False
    return True


def is_primary(ideal: IdealSet) -> bool:
    _require_proper(ideal)
    rad = radical(ideal)
    mul = ideal.ring.mul
    for a in range(ideal.ring.size):
        if a in ideal:
            continue
        row = mul[a]
        for b in range(ideal.ring.size):
            if row[b] in ideal and b not in rad:
                return False
    return True


def min_primes(ideal: IdealSet) -> List[IdealSet]:
    """Minimal elements among the primes containing the ideal."""
    _require_proper(ideal)
    primes = [
        p
        for p in all_ideals(ideal.ring)
        if p.is_proper and ideal <= p and is_prime(p)
    ]
    return [p for p in primes if not any(q < p for q in primes)]


def is_idempotent(ideal: IdealSet) -> bool:
    return ideal_product(ideal, ideal) == ideal


def is_simple_ideal(ideal: IdealSet) -> bool:
    """Only ideals between I^2 and I are I^2 and I."""
    square = ideal_product(ideal, ideal)
    for other in all_ideals(ideal.ring):
        if square <= other and other <= ideal and other not in (square, ideal):
            return False
    return True


def is_divided(ideal: IdealSet, principal_only: bool = False) -> Tuple[bool, Optional[IdealSet]]:
    """Comparability with every ideal (or every principal ideal).

    Returns ``(verdict, witness)`` where the witness is an incomparable ideal.
    The two variants coincide; the principal-only form is kept as a cross-check.
    """
    ring = ideal.ring
    if principal_only:
        others: Sequence[IdealSet] = sorted(
            {generate_ideal(ring, [a]).mask for a in range(ring.size)}
        )
        others = [IdealSet(ring, m) for m in others]
    else:
        others = all_ideals(ring)
    for other in others:
        if not (other <= ideal or ideal <= other):
            return False, other
    return True, None


def is_multiplication_ideal(ideal: IdealSet) -> bool:
    """Every ideal J inside I factors as J = I*L for some ideal L."""
    lattice = all_ideals(ideal.ring)
    products = {ideal_product(ideal, l).mask for l in lattice}
    for other in lattice:
        if other <= ideal and other.mask not in products:
            return False
    return True


# -- trivial-extension views ------------------------------------------------------


def homogeneous_view(ring: "RingTable", ideal: IdealSet):
    """Split an ideal of a trivial extension A∝E into (I, V) with H = I∝V.

    Returns ``(IdealSet over A, frozenset of module element ids)`` when the
    ideal is homogeneous (the containment I·E ⊆ V is replayed), else ``None``.
    """
    ext = ring.extension
    if ext is None:
        raise ValueError("ring was not built as a trivial extension")
    base, module = ext
    esize = module.size
    ring_part = set()
    module_part = set()
    for pair in ideal:
        a, e = divmod(pair, esize)
        ring_part.add(a)
        if a == base.zero:
            module_part.add(e)
    if len(ideal) != len(ring_part) * len(module_part):
        return None
    for a in ring_part:
        for e in module_part:
            if a * esize + e not in ideal:
                return None
    for a in ring_part:
        for e in range(esize):
            if module.action[a][e] not in module_part:
                return None
    mask = 0
    for a in ring_part:
        mask |= 1 << a
    return IdealSet(base, mask), frozenset(module_part)
