"""Explicit finite commutative rings and finite modules over them.

Rings are stored as full addition/negation/multiplication tables over element
ids ``0..size-1``.  Builders validate the ring axioms exhaustively at desk
sizes (configurable) and attach construction metadata used by pretty-printing
and by the trivial-extension views.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import ConstructionError, RingMismatchError, SizeGuardError
from .ideals import IdealSet, generate_ideal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GuardConfig:
    """Resource guards shared by the builders and the sweeps."""

    max_ring_size: int = 4096
    full_check_size: int = 1024  # exhaustive triple validation up to this size
    max_ideals: int = 100_000
    tuple_budget: int = 10**8


DEFAULT_GUARDS = GuardConfig()


def _check_size(size: int, guards: GuardConfig, what: str = "ring") -> None:
    if size > guards.max_ring_size:
        raise SizeGuardError(
            f"{what} of size {size} exceeds guard {guards.max_ring_size}"
        )


class RingTable:
    """A finite commutative ring with explicit operation tables.

    Immutable after construction; caches (units, maximal ideals, the ideal
    lattice) are filled once on first use and all queries are pure.
    """

    def __init__(
        self,
        size: int,
        add: Sequence[Sequence[int]],
        neg: Sequence[int],
        mul: Sequence[Sequence[int]],
        zero: int,
        one: int,
        element_names: Optional[Sequence[str]] = None,
        name: str = "R",
        validate: bool = True,
        guards: GuardConfig = DEFAULT_GUARDS,
    ):
        self.size = size
        self.add = [list(row) for row in add]
        self.neg = list(neg)
        self.mul = [list(row) for row in mul]
        self.zero = zero
        self.one = one
        self.element_names = (
            list(element_names) if element_names is not None else [str(i) for i in range(size)]
        )
        self.name = name
        # construction metadata, set by the builders
        self.kind: str = "raw"
        self.factors: Optional[Tuple["RingTable", ...]] = None
        self.extension: Optional[Tuple["RingTable", "ModuleTable"]] = None
        self.quotient_of: Optional[Tuple["RingTable", IdealSet, List[int]]] = None
        self.basis: Optional[Tuple[str, ...]] = None
        self.modulus: Optional[int] = None
        if validate:
            validate_ring_axioms(self, guards)

    def elements(self) -> range:
        return range(self.size)

    @cached_property
    def unit_flags(self) -> Tuple[bool, ...]:
        one = self.one
        return tuple(any(row[b] == one for b in range(self.size)) for row in self.mul)

    @cached_property
    def units(self) -> Tuple[int, ...]:
        return tuple(a for a in range(self.size) if self.unit_flags[a])

    @cached_property
    def nonunits(self) -> Tuple[int, ...]:
        return tuple(a for a in range(self.size) if not self.unit_flags[a])

    @property
    def is_field(self) -> bool:
        return len(self.units) == self.size - 1

    @cached_property
    def maximal_ideal_masks(self) -> Tuple[int, ...]:
        """Bitmasks of all maximal ideals, in canonical (popcount, mask) order."""
        nonunit_mask = 0
        for a in self.nonunits:
            nonunit_mask |= 1 << a
        add = self.add
        closed = all(
            (nonunit_mask >> add[a][b]) & 1 for a in self.nonunits for b in self.nonunits
        )
        if closed:
            return (nonunit_mask,)
        masks = []
        for factor, onto in local_decomposition(self):
            flags = factor.unit_flags
            mask = 0
            for r in range(self.size):
                if not flags[onto[r]]:
                    mask |= 1 << r
            masks.append(mask)
        return tuple(sorted(set(masks), key=lambda m: (m.bit_count(), m)))

    @property
    def is_local(self) -> bool:
        return len(self.maximal_ideal_masks) == 1

    @cached_property
    def maximal_ideals(self) -> Tuple[IdealSet, ...]:
        return tuple(IdealSet(self, m) for m in self.maximal_ideal_masks)

    # -- product metadata helpers ---------------------------------------------

    def project(self, i: int, elem: int) -> int:
        """Component i of a product-ring element."""
        if self.factors is None:
            raise RingMismatchError("ring was not built as a product")
        sizes = [f.size for f in self.factors]
        for j in range(len(sizes) - 1, i, -1):
            elem //= sizes[j]
        return elem % sizes[i]

    def inject(self, i: int, elem: int) -> int:
        """Element of the product with component i set and zeros elsewhere."""
        if self.factors is None:
            raise RingMismatchError("ring was not built as a product")
        comps = [f.zero for f in self.factors]
        comps[i] = elem
        idx = 0
        for f, c in zip(self.factors, comps):
            idx = idx * f.size + c
        return idx

    def __repr__(self) -> str:  # pragma: no cover
        return f"RingTable({self.name}, size={self.size})"


class ModuleTable:
    """A finite module over a RingTable, given by explicit tables."""

    def __init__(
        self,
        ring: RingTable,
        size: int,
        add: Sequence[Sequence[int]],
        neg: Sequence[int],
        zero: int,
        action: Sequence[Sequence[int]],
        element_names: Optional[Sequence[str]] = None,
        name: str = "E",
        validate: bool = True,
        guards: GuardConfig = DEFAULT_GUARDS,
    ):
        self.ring = ring
        self.size = size
        self.add = [list(row) for row in add]
        self.neg = list(neg)
        self.zero = zero
        self.action = [list(row) for row in action]
        self.element_names = (
            list(element_names) if element_names is not None else [str(i) for i in range(size)]
        )
        self.name = name
        self.kind: str = "raw"
        if validate:
            validate_module_axioms(self, guards)

    @property
    def is_zero(self) -> bool:
        return self.size == 1

    def is_cyclic(self) -> bool:
        """True when E = A·e for a single element e."""
        for e in range(self.size):
            orbit = {self.action[a][e] for a in range(self.ring.size)}
            if len(orbit) == self.size:
                return True
        return self.size == 1

    def annihilator_mask(self) -> int:
        mask = 0
        for a in range(self.ring.size):
            if all(self.action[a][e] == self.zero for e in range(self.size)):
                mask |= 1 << a
        return mask

    def __repr__(self) -> str:  # pragma: no cover
        return f"ModuleTable({self.name}, size={self.size}, over={self.ring.name})"


# -- validation --------------------------------------------------------------


def _first_mismatch(lhs: np.ndarray, rhs: np.ndarray) -> Tuple[int, ...]:
    where = np.argwhere(lhs != rhs)
    return tuple(int(v) for v in where[0])


def _check_abelian_group(
    add: np.ndarray, neg: np.ndarray, zero: int, size: int, what: str, full: bool
) -> None:
    idx = np.arange(size)
    if add.shape != (size, size) or add.min() < 0 or add.max() >= size:
        raise ConstructionError(f"{what}: addition table malformed")
    if not np.array_equal(add, add.T):
        raise ConstructionError(f"{what}: addition not commutative")
    if not np.array_equal(add[zero], idx):
        raise ConstructionError(f"{what}: zero is not an additive identity")
    if not np.array_equal(add[idx, neg], np.full(size, zero)):
        raise ConstructionError(f"{what}: negation table is wrong")
    if full:
        for a in range(size):
            lhs = add[add[a]]  # (a+b)+c
            rhs = add[a][add]  # a+(b+c)
            if not np.array_equal(lhs, rhs):
                b, c = _first_mismatch(lhs, rhs)
                raise ConstructionError(
                    f"{what}: addition not associative at ({a},{b},{c})"
                )


def validate_ring_axioms(ring: RingTable, guards: GuardConfig = DEFAULT_GUARDS) -> None:
    """Exhaustively check the commutative-ring axioms on the tables.

    Triple checks (associativity, distributivity) run only up to
    ``guards.full_check_size``; above that a warning is recorded.
    """
    size = ring.size
    if size < 2 or ring.zero == ring.one:
        raise ConstructionError("ring must have 1 != 0")
    full = size <= guards.full_check_size
    if not full:
        logger.warning(
            "skipping exhaustive triple validation for %s (size %d > %d)",
            ring.name, size, guards.full_check_size,
        )
    add = np.asarray(ring.add)
    neg = np.asarray(ring.neg)
    mul = np.asarray(ring.mul)
    _check_abelian_group(add, neg, ring.zero, size, f"ring {ring.name}", full)
    idx = np.arange(size)
    if mul.shape != (size, size) or mul.min() < 0 or mul.max() >= size:
        raise ConstructionError(f"ring {ring.name}: multiplication table malformed")
    if not np.array_equal(mul, mul.T):
        a, b = _first_mismatch(mul, mul.T)
        raise ConstructionError(f"ring {ring.name}: multiplication not commutative at ({a},{b})")
    if not np.array_equal(mul[ring.one], idx):
        raise ConstructionError(f"ring {ring.name}: one is not a multiplicative identity")
    if full:
        for a in range(size):
            lhs = mul[mul[a]]  # (a*b)*c
            rhs = mul[a][mul]  # a*(b*c)
            if not np.array_equal(lhs, rhs):
                b, c = _first_mismatch(lhs, rhs)
                raise ConstructionError(
                    f"ring {ring.name}: multiplication not associative at ({a},{b},{c})"
                )
            lhs = mul[a][add]  # a*(b+c)
            rhs = add[mul[a][:, None], mul[a][None, :]]  # a*b + a*c
            if not np.array_equal(lhs, rhs):
                b, c = _first_mismatch(lhs, rhs)
                raise ConstructionError(
                    f"ring {ring.name}: distributivity fails at ({a},{b},{c})"
                )


def validate_module_axioms(module: ModuleTable, guards: GuardConfig = DEFAULT_GUARDS) -> None:
    """Exhaustively check the unital-module axioms for the action table."""
    size = module.size
    ring = module.ring
    full = size * ring.size <= guards.full_check_size ** 2
    add = np.asarray(module.add)
    neg = np.asarray(module.neg)
    act = np.asarray(module.action)
    _check_abelian_group(add, neg, module.zero, size, f"module {module.name}", full)
    if act.shape != (ring.size, size) or act.min() < 0 or act.max() >= size:
        raise ConstructionError(f"module {module.name}: action table malformed")
    if not np.array_equal(act[ring.one], np.arange(size)):
        raise ConstructionError(f"module {module.name}: action is not unital")
    radd = np.asarray(ring.add)
    rmul = np.asarray(ring.mul)
    for a in range(ring.size):
        if not np.array_equal(act[a][add], add[act[a][:, None], act[a][None, :]]):
            raise ConstructionError(
                f"module {module.name}: a*(e+f) != a*e+a*f at scalar {a}"
            )
        if not np.array_equal(act[radd[a]], add[act[a][None, :], act]):
            raise ConstructionError(
                f"module {module.name}: (a+b)*e != a*e+b*e at scalar {a}"
            )
        if not np.array_equal(act[rmul[a]], act[a][act]):
            raise ConstructionError(
                f"module {module.name}: (a*b)*e != a*(b*e) at scalar {a}"
            )


# -- builders -----------------------------------------------------------------


def build_zmod(n: int, guards: GuardConfig = DEFAULT_GUARDS) -> RingTable:
    """The ring Z/nZ, elements 0..n-1."""
    if n < 2:
        raise ConstructionError("no ring Z/nZ with 1 != 0 for n < 2")
    _check_size(n, guards)
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    neg = [(-a) % n for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    ring = RingTable(n, add, neg, mul, 0, 1, name=f"Z{n}", guards=guards)
    ring.kind = "zmod"
    ring.modulus = n
    return ring


def _vector_name(coeffs: Sequence[int], basis: Sequence[str]) -> str:
    terms = []
    for c, b in zip(coeffs, basis):
        if c == 0:
            continue
        if b == "1":
            terms.append(str(c))
        elif c == 1:
            terms.append(b)
        else:
            terms.append(f"{c}*{b}")
    return "+".join(terms) if terms else "0"


def build_algebra(
    modulus: int,
    basis: Sequence[str],
    table: Sequence[Sequence[Sequence[int]]],
    guards: GuardConfig = DEFAULT_GUARDS,
    name: Optional[str] = None,
) -> RingTable:
    """A commutative (Z/mZ)-algebra from basis-product structure constants.

    ``table[i][j]`` is the coefficient vector of ``basis[i] * basis[j]``.
    ``basis[0]`` must be the name ``"1"`` and act as the identity.  Validation
    runs on basis triples first, then on all elements at build (within the
    size guard); a failing basis triple is named in the error.
    """
    if modulus < 2:
        raise ConstructionError("algebra modulus must be at least 2")
    d = len(basis)
    if d == 0 or basis[0] != "1":
        raise ConstructionError('algebra basis must start with the name "1"')
    if len(set(basis)) != d:
        raise ConstructionError("algebra basis names must be distinct")
    size = modulus**d
    _check_size(size, guards)

    def norm(vec: Sequence[int]) -> Tuple[int, ...]:
        if len(vec) != d:
            raise ConstructionError("structure constant vector has wrong length")
        return tuple(int(v) % modulus for v in vec)

    tab = [[norm(table[i][j]) for j in range(d)] for i in range(d)]

    def unit_vec(i: int) -> Tuple[int, ...]:
        return tuple(1 if k == i else 0 for k in range(d))

    def vec_mul(u: Sequence[int], v: Sequence[int]) -> Tuple[int, ...]:
        out = [0] * d
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            for j, vj in enumerate(v):
                if vj == 0:
                    continue
                c = ui * vj
                for k, t in enumerate(tab[i][j]):
                    out[k] = (out[k] + c * t) % modulus
        return tuple(out)

    for j in range(d):
        if tab[0][j] != unit_vec(j):
            raise ConstructionError(
                f'basis product 1*{basis[j]} must equal {basis[j]}'
            )
    for i in range(d):
        for j in range(i + 1, d):
            if tab[i][j] != tab[j][i]:
                raise ConstructionError(
                    f"structure constants not commutative at ({basis[i]},{basis[j]})"
                )
    for i in range(d):
        for j in range(d):
            for k in range(d):
                if vec_mul(tab[i][j], unit_vec(k)) != vec_mul(unit_vec(i), tab[j][k]):
                    raise ConstructionError(
                        "structure constants not associative at basis triple "
                        f"({basis[i]},{basis[j]},{basis[k]})"
                    )

    # element order: lexicographic on coefficient vectors
    def to_index(vec: Sequence[int]) -> int:
        idx = 0
        for c in vec:
            idx = idx * modulus + c
        return idx

    def to_vec(idx: int) -> Tuple[int, ...]:
        out = []
        for _ in range(d):
            idx, c = divmod(idx, modulus)
            out.append(c)
        return tuple(reversed(out))

    vecs = [to_vec(i) for i in range(size)]
    add = [
        [to_index(tuple((a + b) % modulus for a, b in zip(u, v))) for v in vecs]
        for u in vecs
    ]
    neg = [to_index(tuple((-a) % modulus for a in u)) for u in vecs]
    mul = [[to_index(vec_mul(u, v)) for v in vecs] for u in vecs]
    names = [_vector_name(v, basis) for v in vecs]
    ring = RingTable(
        size, add, neg, mul, 0, to_index(unit_vec(0)),
        element_names=names,
        name=name or f"Z{modulus}[{','.join(basis[1:])}]",
        guards=guards,
    )
    ring.kind = "algebra"
    ring.basis = tuple(basis)
    ring.modulus = modulus
    return ring


def build_product(
    factors: Sequence[RingTable], guards: GuardConfig = DEFAULT_GUARDS
) -> RingTable:
    """Direct product with componentwise operations, tuple element order."""
    if not factors:
        raise ConstructionError("product needs at least one factor")
    size = 1
    for f in factors:
        size *= f.size
    _check_size(size, guards)
    sizes = [f.size for f in factors]

    def split(idx: int) -> List[int]:
        comps = []
        for s in reversed(sizes):
            idx, c = divmod(idx, s)
            comps.append(c)
        return list(reversed(comps))

    def join(comps: Sequence[int]) -> int:
        idx = 0
        for s, c in zip(sizes, comps):
            idx = idx * s + c
        return idx

    tuples = [split(i) for i in range(size)]
    add = [
        [join([f.add[a][b] for f, a, b in zip(factors, u, v)]) for v in tuples]
        for u in tuples
    ]
    neg = [join([f.neg[a] for f, a in zip(factors, u)]) for u in tuples]
    mul = [
        [join([f.mul[a][b] for f, a, b in zip(factors, u, v)]) for v in tuples]
        for u in tuples
    ]
    names = [
        "(" + ",".join(f.element_names[a] for f, a in zip(factors, u)) + ")"
        for u in tuples
    ]
    ring = RingTable(
        size, add, neg, mul,
        join([f.zero for f in factors]), join([f.one for f in factors]),
        element_names=names,
        name=" x ".join(f.name for f in factors),
        guards=guards,
    )
    ring.kind = "product"
    ring.factors = tuple(factors)
    return ring


def build_quotient(
    ring: RingTable, ideal: IdealSet, guards: GuardConfig = DEFAULT_GUARDS
) -> Tuple[RingTable, List[int]]:
    """Quotient ring on least-index coset representatives.

    Returns ``(Q, projection)`` where ``projection[x]`` is the Q-element id of
    the coset of ``x``; the projection is a surjective ring homomorphism.
    """
    if ideal.ring is not ring:
        raise RingMismatchError("ideal belongs to a different ring")
    if not ideal.is_proper:
        raise ConstructionError("cannot quotient by the whole ring")
    members = ideal.members
    rep = [min(ring.add[x][i] for i in members) for x in range(ring.size)]
    reps = sorted(set(rep))
    index = {r: i for i, r in enumerate(reps)}
    projection = [index[rep[x]] for x in range(ring.size)]
    size = len(reps)
    add = [[index[rep[ring.add[a][b]]] for b in reps] for a in reps]
    neg = [index[rep[ring.neg[a]]] for a in reps]
    mul = [[index[rep[ring.mul[a][b]]] for b in reps] for a in reps]
    names = [ring.element_names[r] for r in reps]
    quotient = RingTable(
        size, add, neg, mul, index[rep[ring.zero]], index[rep[ring.one]],
        element_names=names,
        name=f"{ring.name}/{ideal.describe()}",
        guards=guards,
    )
    quotient.kind = "quotient"
    quotient.quotient_of = (ring, ideal, projection)
    return quotient, projection


# -- module builders -----------------------------------------------------------


def module_from_ring(ring: RingTable, guards: GuardConfig = DEFAULT_GUARDS) -> ModuleTable:
    """The ring viewed as a module over itself."""
    module = ModuleTable(
        ring, ring.size, ring.add, ring.neg, ring.zero, ring.mul,
        element_names=ring.element_names, name=ring.name, guards=guards,
    )
    module.kind = "self"
    return module


def quotient_module(
    ring: RingTable, gens: Iterable[int], guards: GuardConfig = DEFAULT_GUARDS
) -> ModuleTable:
    """A/J as an A-module; J may be the whole ring (giving the zero module)."""
    gens = list(gens)
    for g in gens:
        if not 0 <= g < ring.size:
            raise ConstructionError(f"module generator id {g} outside the ring")
    sub = generate_ideal(ring, gens)
    members = sub.members
    rep = [min(ring.add[x][i] for i in members) for x in range(ring.size)]
    reps = sorted(set(rep))
    index = {r: i for i, r in enumerate(reps)}
    size = len(reps)
    add = [[index[rep[ring.add[a][b]]] for b in reps] for a in reps]
    neg = [index[rep[ring.neg[a]]] for a in reps]
    action = [[index[rep[ring.mul[a][e]]] for e in reps] for a in range(ring.size)]
    names = [ring.element_names[r] for r in reps]
    module = ModuleTable(
        ring, size, add, neg, index[rep[ring.zero]], action,
        element_names=names, name=f"{ring.name}/{sub.describe()}", guards=guards,
    )
    module.kind = "quotient"
    module.projection = [index[rep[x]] for x in range(ring.size)]
    return module


def direct_sum_module(
    parts: Sequence[ModuleTable], guards: GuardConfig = DEFAULT_GUARDS
) -> ModuleTable:
    """Finite direct sum of modules over the same ring."""
    if not parts:
        raise ConstructionError("direct sum needs at least one part")
    ring = parts[0].ring
    if any(p.ring is not ring for p in parts):
        raise RingMismatchError("direct-sum parts lie over different rings")
    sizes = [p.size for p in parts]
    size = 1
    for s in sizes:
        size *= s

    def split(idx: int) -> List[int]:
        comps = []
        for s in reversed(sizes):
            idx, c = divmod(idx, s)
            comps.append(c)
        return list(reversed(comps))

    def join(comps: Sequence[int]) -> int:
        idx = 0
        for s, c in zip(sizes, comps):
            idx = idx * s + c
        return idx

    tuples = [split(i) for i in range(size)]
    add = [
        [join([p.add[a][b] for p, a, b in zip(parts, u, v)]) for v in tuples]
        for u in tuples
    ]
    neg = [join([p.neg[a] for p, a in zip(parts, u)]) for u in tuples]
    action = [
        [join([p.action[a][e] for p, e in zip(parts, u)]) for u in tuples]
        for a in range(ring.size)
    ]
    names = [
        "(" + ",".join(p.element_names[e] for p, e in zip(parts, u)) + ")"
        for u in tuples
    ]
    module = ModuleTable(
        ring, size, add, neg, join([p.zero for p in parts]), action,
        element_names=names,
        name=" + ".join(p.name for p in parts), guards=guards,
    )
    module.kind = "direct_sum"
    module.parts = tuple(parts)
    return module


def build_trivial_extension(
    ring: RingTable, module: ModuleTable, guards: GuardConfig = DEFAULT_GUARDS
) -> RingTable:
    """The idealization A∝E on pairs (a,e) with (a,e)(b,f) = (ab, af+be)."""
    if module.ring is not ring:
        raise RingMismatchError("module lies over a different ring")
    esize = module.size
    size = ring.size * esize
    _check_size(size, guards)
    act = module.action
    eadd = module.add
    add = [[0] * size for _ in range(size)]
    mul = [[0] * size for _ in range(size)]
    neg = [0] * size
    names = [""] * size
    for a in range(ring.size):
        for e in range(esize):
            p = a * esize + e
            neg[p] = ring.neg[a] * esize + module.neg[e]
            names[p] = f"({ring.element_names[a]}|{module.element_names[e]})"
            for b in range(ring.size):
                arow = ring.add[a]
                mrow = ring.mul[a]
                for f in range(esize):
                    q = b * esize + f
                    add[p][q] = arow[b] * esize + eadd[e][f]
                    mul[p][q] = mrow[b] * esize + eadd[act[a][f]][act[b][e]]
    ext = RingTable(
        size, add, neg, mul,
        ring.zero * esize + module.zero, ring.one * esize + module.zero,
        element_names=names, name=f"{ring.name}∝{module.name}", guards=guards,
    )
    ext.kind = "trivial_extension"
    ext.extension = (ring, module)
    return ext


# -- global structural queries ---------------------------------------------------


def units(ring: RingTable) -> Tuple[int, ...]:
    """Element ids with a multiplicative inverse (brute-force scan)."""
    return ring.units


def is_local(ring: RingTable) -> Tuple[bool, List[IdealSet]]:
    """Locality plus the full list of maximal ideals.

    A finite ring is local exactly when its nonunits are closed under
    addition, in which case they form the unique maximal ideal.
    """
    return ring.is_local, list(ring.maximal_ideals)


def nilradical(ring: RingTable) -> IdealSet:
    """Nil(R): elements with some power zero (power chase bounded by |R|)."""
    mul = ring.mul
    mask = 0
    for r in range(ring.size):
        p = r
        for _ in range(ring.size):
            if p == ring.zero:
                mask |= 1 << r
                break
            p = mul[p][r]
    return IdealSet(ring, mask)


def jacobson(ring: RingTable) -> IdealSet:
    """Jacobson radical: intersection of the maximal ideals."""
    mask = (1 << ring.size) - 1
    for m in ring.maximal_ideal_masks:
        mask &= m
    return IdealSet(ring, mask)


def idempotents(ring: RingTable) -> List[int]:
    return [e for e in range(ring.size) if ring.mul[e][e] == e]


def primitive_idempotents(ring: RingTable) -> List[int]:
    """Nonzero idempotents with no nonzero idempotent strictly below them."""
    idem = idempotents(ring)
    out = []
    for e in idem:
        if e == ring.zero:
            continue
        below = [f for f in idem if f != ring.zero and ring.mul[e][f] == f]
        if below == [e]:
            out.append(e)
    return sorted(out)


def local_decomposition(
    ring: RingTable, guards: GuardConfig = DEFAULT_GUARDS
) -> List[Tuple[RingTable, List[int]]]:
    """Split R into its local factors R·e over the primitive idempotents e.

    Returns ``[(factor, surjection)]`` where ``surjection[r]`` is the factor
    element id of ``r·e``; the induced map into the product of the factors is
    a ring isomorphism.
    """
    prims = primitive_idempotents(ring)
    acc = ring.zero
    for i, e in enumerate(prims):
        for f in prims[i + 1 :]:
            if ring.mul[e][f] != ring.zero:
                raise ConstructionError("primitive idempotents are not orthogonal")
        acc = ring.add[acc][e]
    if acc != ring.one:
        raise ConstructionError("primitive idempotents do not sum to one")
    out = []
    for e in prims:
        elems = sorted({ring.mul[e][r] for r in range(ring.size)})
        index = {x: i for i, x in enumerate(elems)}
        add = [[index[ring.add[a][b]] for b in elems] for a in elems]
        neg = [index[ring.neg[a]] for a in elems]
        mul = [[index[ring.mul[a][b]] for b in elems] for a in elems]
        names = [ring.element_names[x] for x in elems]
        factor = RingTable(
            len(elems), add, neg, mul, index[ring.zero], index[e],
            element_names=names, name=f"{ring.name}·{ring.element_names[e]}",
            guards=guards,
        )
        factor.kind = "local_factor"
        onto = [index[ring.mul[e][r]] for r in range(ring.size)]
        out.append((factor, onto))
    return out
