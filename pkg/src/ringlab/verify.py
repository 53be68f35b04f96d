"""Executable checks for the structural facts the classifier relies on.

Each check runs one statement against one constructed ring and reports
pass/fail/skipped with a replayable witness payload.  Vacuous passes
(hypothesis unmet) are flagged separately from substantive ones.  Statements
whose hypotheses mention Noetherian-ness are automatically satisfied on
finite rings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .core import (
    DEFAULT_GUARDS,
    GuardConfig,
    ModuleTable,
    RingTable,
    build_product,
    build_quotient,
    build_trivial_extension,
    local_decomposition,
    nilradical,
)
from .errors import BudgetExceededError, RingLabError
from .ideals import (
    IdealSet,
    all_ideals,
    homogeneous_view,
    ideal_power,
    ideal_product,
    is_prime,
    min_primes,
    is_divided,
    proper_ideals,
)
from .classify import is_n_oa, is_n_oa_fast, list_n_oa_ideals
from .factorize import is_general_zpi, is_n_oaf, multiplicative_closure
from .specdoc import (
    AlgebraSpec,
    ProductSpec,
    QuotientModuleSpec,
    RingSpec,
    SelfModuleSpec,
    TrivialExtensionSpec,
    ZmodSpec,
    build_ring,
)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    spec: RingSpec
    tags: FrozenSet[str] = frozenset()


@dataclass
class CheckResult:
    check: str
    ring: str
    n: Optional[int]
    verdict: str  # "pass" | "fail" | "skipped"
    vacuous: bool = False
    detail: str = ""
    witness: Any = None

    def to_json(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "ring": self.ring,
            "n": self.n,
            "verdict": self.verdict,
            "vacuous": self.vacuous,
            "detail": self.detail,
            "witness": self.witness,
        }


def _ideal_payload(ideal: IdealSet) -> Dict[str, Any]:
    return {
        "generators": [ideal.ring.element_names[g] for g in ideal.generators],
        "size": len(ideal),
        "mask": ideal.mask,
    }


def _names(ring: RingTable, elems: Iterable[int]) -> List[str]:
    return [ring.element_names[e] for e in elems]


# -- submodule helpers ------------------------------------------------------------


def _module_closure(module: ModuleTable, subset: Iterable[int]) -> FrozenSet[int]:
    members = set(subset)
    members.add(module.zero)
    work = list(members)
    add = module.add
    while work:
        x = work.pop()
        row = add[x]
        for y in tuple(members):
            z = row[y]
            if z not in members:
                members.add(z)
                work.append(z)
    return frozenset(members)


def _ideal_times_module(ideal: IdealSet, module: ModuleTable) -> FrozenSet[int]:
    act = module.action
    return _module_closure(
        module, (act[a][e] for a in ideal for e in range(module.size))
    )


def _pair_mask(base: RingTable, module: ModuleTable,
               ring_part: Iterable[int], module_part: Iterable[int]) -> int:
    mask = 0
    mod = list(module_part)
    for a in ring_part:
        off = a * module.size
        for e in mod:
            mask |= 1 << (off + e)
    return mask


# -- individual checks --------------------------------------------------------------


def check_oa_characterization(
    ring: RingTable, n: int, budget: int = DEFAULT_GUARDS.tuple_budget
) -> CheckResult:
    """Brute-force n-OA must agree with the prime-or-M^n fast path everywhere."""
    oa_count = 0
    for ideal in proper_ideals(ring):
        try:
            brute, witness = is_n_oa(ideal, n, budget)
        except BudgetExceededError as exc:
            return CheckResult(
                "oa_characterization", ring.name, n, "skipped", detail=str(exc)
            )
        fast = is_n_oa_fast(ideal, n)
        if brute != fast:
            return CheckResult(
                "oa_characterization", ring.name, n, "fail",
                detail=f"brute={brute} fast={fast} on {ideal.describe()}",
                witness={
                    "ideal": _ideal_payload(ideal),
                    "tuple": _names(ring, witness) if witness else None,
                },
            )
        if brute:
            oa_count += 1
    return CheckResult(
        "oa_characterization", ring.name, n, "pass",
        detail=f"{oa_count} n-OA ideals, both routes agree",
    )


def check_min_unique(ring: RingTable, n: int) -> CheckResult:
    """Every n-OA ideal has exactly one minimal prime above it."""
    ideals = list_n_oa_ideals(ring, n)
    for ideal in ideals:
        primes = min_primes(ideal)
        if len(primes) != 1:
            return CheckResult(
                "min_unique", ring.name, n, "fail",
                detail=f"|Min| = {len(primes)} for {ideal.describe()}",
                witness={
                    "ideal": _ideal_payload(ideal),
                    "min_primes": [_ideal_payload(p) for p in primes],
                },
            )
    return CheckResult(
        "min_unique", ring.name, n, "pass", detail=f"checked {len(ideals)} ideals"
    )


def check_quotient_closure(
    ring: RingTable, n: int, guards: GuardConfig = DEFAULT_GUARDS
) -> CheckResult:
    """Factorability passes to every quotient of a factorable ring."""
    ok, _ = is_n_oaf(ring, n)
    if not ok:
        return CheckResult(
            "quotient_closure", ring.name, n, "pass", vacuous=True,
            detail="ring is not n-OAF; nothing to check",
        )
    for ideal in proper_ideals(ring):
        quotient, _ = build_quotient(ring, ideal, guards=guards)
        if not is_n_oaf(quotient, n)[0]:
            return CheckResult(
                "quotient_closure", ring.name, n, "fail",
                detail=f"quotient by {ideal.describe()} is not n-OAF",
                witness=_ideal_payload(ideal),
            )
    return CheckResult("quotient_closure", ring.name, n, "pass")


def check_localization(
    ring: RingTable, n: int, guards: GuardConfig = DEFAULT_GUARDS
) -> CheckResult:
    """Factorability passes to every local factor (finite-ring localization)."""
    ok, _ = is_n_oaf(ring, n)
    if not ok:
        return CheckResult(
            "localization", ring.name, n, "pass", vacuous=True,
            detail="ring is not n-OAF; nothing to check",
        )
    for factor, _ in local_decomposition(ring, guards):
        if not is_n_oaf(factor, n)[0]:
            return CheckResult(
                "localization", ring.name, n, "fail",
                detail=f"local factor {factor.name} is not n-OAF",
            )
    return CheckResult("localization", ring.name, n, "pass")


def check_product_rule(
    a: RingTable, b: RingTable, n: int,
    product: Optional[RingTable] = None,
    guards: GuardConfig = DEFAULT_GUARDS,
) -> CheckResult:
    """A×B is n-OAF exactly when both factors factor into primes."""
    ring = product if product is not None else build_product([a, b], guards=guards)
    lhs, lhs_witness = is_n_oaf(ring, n)
    rhs = is_general_zpi(a)[0] and is_general_zpi(b)[0]
    if lhs != rhs:
        return CheckResult(
            "product_rule", ring.name, n, "fail",
            detail=f"product n-OAF={lhs} but factors general-ZPI={rhs}",
            witness=_ideal_payload(lhs_witness) if lhs_witness else None,
        )
    return CheckResult(
        "product_rule", ring.name, n, "pass", detail=f"both sides {lhs}"
    )


def check_idealization_identities(
    a: RingTable, e: ModuleTable,
    extension: Optional[RingTable] = None,
    guards: GuardConfig = DEFAULT_GUARDS,
) -> CheckResult:
    """The four structure identities of the idealization, checked exhaustively."""
    ring = extension if extension is not None else build_trivial_extension(a, e, guards)

    def fail(which: str, witness: Any = None) -> CheckResult:
        return CheckResult(
            "idealization_identities", ring.name, None, "fail",
            detail=which, witness=witness,
        )

    # (1) nilpotents are exactly Nil(A) paired with everything
    nil_ring = nilradical(ring)
    nil_base = nilradical(a)
    expected = _pair_mask(a, e, nil_base.members, range(e.size))
    if nil_ring.mask != expected:
        return fail("Nil(A∝E) != Nil(A)∝E")
    # (2) (I∝E)(J∝E) = IJ∝(IE+JE) over all ideal pairs of A
    lattice = all_ideals(a)
    full_e = range(e.size)
    for left in lattice:
        left_ext = IdealSet(ring, _pair_mask(a, e, left.members, full_e))
        left_me = _ideal_times_module(left, e)
        for right in lattice:
            right_ext = IdealSet(ring, _pair_mask(a, e, right.members, full_e))
            prod = ideal_product(left_ext, right_ext)
            value = _ideal_times_module(right, e) | left_me
            expected = _pair_mask(
                a, e, ideal_product(left, right).members, _module_closure(e, value)
            )
            if prod.mask != expected:
                return fail(
                    "(I∝E)(J∝E) != IJ∝(IE+JE)",
                    witness={"I": _ideal_payload(left), "J": _ideal_payload(right)},
                )
    # (3) ideals above 0∝E are homogeneous with the full module part
    zero_ext_mask = _pair_mask(a, e, [a.zero], full_e)
    for ideal in all_ideals(ring):
        if zero_ext_mask & ~ideal.mask:
            continue
        view = homogeneous_view(ring, ideal)
        if view is None or len(view[1]) != e.size:
            return fail(
                "ideal above 0∝E is not of the form I∝E",
                witness=_ideal_payload(ideal),
            )
    # (4) locality transfers both ways
    if ring.is_local != a.is_local:
        return fail("locality does not transfer")
    # primes of A∝E all have the form P∝E with P prime
    for ideal in proper_ideals(ring):
        if not is_prime(ideal):
            continue
        view = homogeneous_view(ring, ideal)
        if view is None or len(view[1]) != e.size or not is_prime(view[0]):
            return fail("prime of A∝E is not P∝E", witness=_ideal_payload(ideal))
    return CheckResult("idealization_identities", ring.name, None, "pass")


def _nilpotency_index(ideal: IdealSet) -> Optional[int]:
    """Least k with I^k = 0, or None if the powers stabilize above zero."""
    power = ideal
    seen = set()
    k = 1
    while power.mask not in seen:
        if power.is_zero:
            return k
        seen.add(power.mask)
        power = ideal_product(power, ideal)
        k += 1
    return None


def check_pdiv1(ring: RingTable, n: int) -> CheckResult:
    """Local ring, nilpotent M, M^n divided: then every ideal factors.

    The factoring argument repeatedly divides by a principal ideal Rx with
    x taken in M \\ M^2 and outside M^n; such an x always exists for n >= 2
    (as M^n <= M^2), but at n = 1 only when M^n is already zero, so that
    side condition is part of the hypothesis here.
    """
    if not ring.is_local:
        return CheckResult(
            "divided_power_implies_oaf", ring.name, n, "pass", vacuous=True,
            detail="ring is not local",
        )
    maximal = ring.maximal_ideals[0]
    power_n = ideal_power(maximal, n)
    nilpotency = _nilpotency_index(maximal)
    divided, incomparable = is_divided(power_n)
    square = ideal_product(maximal, maximal)
    pivot_exists = power_n.is_zero or any(
        x not in square and x not in power_n for x in maximal
    )
    if nilpotency is None or not divided or not pivot_exists:
        if nilpotency is None:
            reason = "M is not nilpotent"
        elif not divided:
            reason = (
                f"M^{n} is not divided (incomparable with {incomparable.describe()})"
            )
        else:
            reason = f"no element of M outside both M^2 and M^{n}"
        return CheckResult(
            "divided_power_implies_oaf", ring.name, n, "pass", vacuous=True,
            detail=f"hypothesis unmet: {reason}",
        )
    ok, witness = is_n_oaf(ring, n)
    if not ok:
        return CheckResult(
            "divided_power_implies_oaf", ring.name, n, "fail",
            detail="hypotheses hold but the ring is not n-OAF",
            witness=_ideal_payload(witness) if witness else None,
        )
    return CheckResult("divided_power_implies_oaf", ring.name, n, "pass")


def _ann_is_product_of_idempotent_maximals(a: RingTable, e: ModuleTable) -> bool:
    ann = IdealSet(a, e.annihilator_mask())
    if not ann.is_proper:
        return e.is_zero
    idem_max = [
        m for m in a.maximal_ideals if ideal_product(m, m) == m
    ]
    if not idem_max:
        return False
    return ann in multiplicative_closure(idem_max)


def check_generalid(
    a: RingTable, e: ModuleTable, n: int,
    extension: Optional[RingTable] = None,
    guards: GuardConfig = DEFAULT_GUARDS,
) -> CheckResult:
    """Transfer of factorability between A∝E and (A, E).

    Local base: forward direction requires A n-OAF and (E=0 with M nilpotent,
    or M^n=0); the converse runs only when its sufficient side conditions
    hold.  Non-local base: equivalence with A general ZPI and E cyclic with
    the annihilator a product of idempotent maximal ideals (or E=0).
    """
    ring = extension if extension is not None else build_trivial_extension(a, e, guards)
    if not a.is_local:
        lhs, witness = is_n_oaf(ring, n)
        rhs = is_general_zpi(a)[0] and (
            e.is_zero
            or (e.is_cyclic() and _ann_is_product_of_idempotent_maximals(a, e))
        )
        if lhs != rhs:
            return CheckResult(
                "idealization_transfer", ring.name, n, "fail",
                detail=f"non-local route: extension n-OAF={lhs}, base criterion={rhs}",
                witness=_ideal_payload(witness) if witness else None,
            )
        return CheckResult(
            "idealization_transfer", ring.name, n, "pass",
            detail=f"non-local route, both sides {lhs}",
        )

    maximal = a.maximal_ideals[0]
    power_n = ideal_power(maximal, n)
    ring_oaf = is_n_oaf(ring, n)[0]
    applied = []
    if ring_oaf:
        forward_ok = is_n_oaf(a, n)[0] and (
            (e.is_zero and _nilpotency_index(maximal) is not None)
            or power_n.is_zero
        )
        if not forward_ok:
            return CheckResult(
                "idealization_transfer", ring.name, n, "fail",
                detail="extension is n-OAF but the necessary base conditions fail",
            )
        applied.append("forward")
    if e.is_zero:
        converse_hyp = is_n_oaf(a, n)[0]
    else:
        me_set = _ideal_times_module(ideal_power(maximal, n - 1), e)
        act = e.action
        converse_hyp = power_n.is_zero
        if converse_hyp:
            for x in range(e.size):
                if x in me_set:
                    continue
                orbit = {act[m][x] for m in maximal}
                if not me_set <= orbit:
                    converse_hyp = False
                    break
        if converse_hyp:
            for scalar in maximal:
                if scalar == a.zero:
                    continue
                image = {act[scalar][y] for y in range(e.size)}
                if not me_set <= image:
                    converse_hyp = False
                    break
    if converse_hyp:
        if not ring_oaf:
            return CheckResult(
                "idealization_transfer", ring.name, n, "fail",
                detail="converse side conditions hold but the extension is not n-OAF",
            )
        applied.append("converse")
    if not applied:
        return CheckResult(
            "idealization_transfer", ring.name, n, "pass", vacuous=True,
            detail="neither direction applicable",
        )
    return CheckResult(
        "idealization_transfer", ring.name, n, "pass",
        detail="checked: " + ", ".join(applied),
    )


def check_cid_cid2(
    a: RingTable, e: ModuleTable, n: int,
    extension: Optional[RingTable] = None,
    guards: GuardConfig = DEFAULT_GUARDS,
) -> CheckResult:
    """Three-way equivalences for field bases and for ME=0 bases.

    Field base (the only finite domains): n-OAF ⇔ A field ⇔ every proper
    ideal n-OA.  Local base with ME=0 and E≠0: n-OAF ⇔ M^n=0 ⇔ every proper
    ideal n-OA.  The nontrivial domain case needs infinite rings, so only the
    degenerate field instance is covered here.

    Both equivalences need n ≥ 2: they rest on the module part of (M∝E)^n
    vanishing, i.e. (M∝E)^n = M^n ∝ M^{n-1}E = 0, and at n = 1 the module
    part survives (F2∝F2 is 1-OAF over a field yet (0) is not prime).  At
    n = 1 the computed truth values are reported as a vacuous pass.
    """
    ring = extension if extension is not None else build_trivial_extension(a, e, guards)
    if e.is_zero:
        return CheckResult(
            "idealization_equivalences", ring.name, n, "pass", vacuous=True,
            detail="E = 0",
        )
    branches = []
    if a.is_field:
        branches.append(("field-base", True))
    if a.is_local:
        maximal = a.maximal_ideals[0]
        if _ideal_times_module(maximal, e) == frozenset({e.zero}):
            branches.append(("ME=0", ideal_power(maximal, n).is_zero))
    if not branches:
        return CheckResult(
            "idealization_equivalences", ring.name, n, "pass", vacuous=True,
            detail="no branch applicable (A not a field, ME != 0)",
        )
    cond_oaf = is_n_oaf(ring, n)[0]
    cond_all_oa = all(is_n_oa_fast(i, n) for i in proper_ideals(ring))
    if n < 2:
        values = "; ".join(
            f"{label}: n-OAF={cond_oaf}, middle={cond_mid}, "
            f"all-ideals-n-OA={cond_all_oa}"
            for label, cond_mid in branches
        )
        return CheckResult(
            "idealization_equivalences", ring.name, n, "pass", vacuous=True,
            detail=f"equivalence needs n >= 2; computed {values}",
        )
    for label, cond_mid in branches:
        if not (cond_oaf == cond_mid == cond_all_oa):
            return CheckResult(
                "idealization_equivalences", ring.name, n, "fail",
                detail=(
                    f"{label}: n-OAF={cond_oaf}, middle={cond_mid}, "
                    f"all-ideals-n-OA={cond_all_oa}"
                ),
            )
    return CheckResult(
        "idealization_equivalences", ring.name, n, "pass",
        detail="; ".join(f"{label}: all {cond_oaf}" for label, _ in branches),
    )


# -- corpus -----------------------------------------------------------------------


def _truncated_poly(modulus: int, var: str, k: int, name: str) -> AlgebraSpec:
    """F_p[X]/(X^k) as a structure-constant algebra."""
    basis = ["1"] + [f"{var}{i if i > 1 else ''}" for i in range(1, k)]
    products = {}
    for i in range(1, k):
        for j in range(i, k):
            value = basis[i + j] if i + j < k else "0"
            products[f"{basis[i]}*{basis[j]}"] = value
    return AlgebraSpec(
        modulus=modulus, basis=tuple(basis),
        products=tuple((key.split("*")[0], key.split("*")[1], value)
                       for key, value in sorted(products.items())),
        name=name,
    )


def _two_var_truncated(k: int, name: str) -> AlgebraSpec:
    """F2[x,y]/(x,y)^k for k in {2,3}."""
    if k == 2:
        basis = ("1", "x", "y")
        products = {"x*x": "0", "x*y": "0", "y*y": "0"}
    elif k == 3:
        basis = ("1", "x", "y", "x2", "xy", "y2")
        products = {
            "x*x": "x2", "x*y": "xy", "y*y": "y2",
            "x*x2": "0", "x*xy": "0", "x*y2": "0",
            "y*x2": "0", "y*xy": "0", "y*y2": "0",
            "x2*x2": "0", "x2*xy": "0", "x2*y2": "0",
            "xy*xy": "0", "xy*y2": "0", "y2*y2": "0",
        }
    else:
        raise ValueError("only k in {2,3} is prepared")
    return AlgebraSpec(
        modulus=2, basis=basis,
        products=tuple((key.split("*")[0], key.split("*")[1], value)
                       for key, value in sorted(products.items())),
        name=name,
    )


def example_local_algebra_spec() -> AlgebraSpec:
    """Z2[X,Y]/(X^2, XY, Y^4): the 32-element local ring used throughout."""
    products = {
        "x*x": "0", "x*y": "0", "x*y2": "0", "x*y3": "0",
        "y*y": "y2", "y*y2": "y3", "y*y3": "0",
        "y2*y2": "0", "y2*y3": "0", "y3*y3": "0",
    }
    return AlgebraSpec(
        modulus=2, basis=("1", "x", "y", "y2", "y3"),
        products=tuple((key.split("*")[0], key.split("*")[1], value)
                       for key, value in sorted(products.items())),
        name="Z2[x,y]/(x2,xy,y4)",
    )


def default_corpus() -> List[CorpusEntry]:
    ex1 = example_local_algebra_spec()
    fxy2 = _two_var_truncated(2, "F2[x,y]/(x,y)^2")
    fxy3 = _two_var_truncated(3, "F2[x,y]/(x,y)^3")
    entries = [
        CorpusEntry("Z2", ZmodSpec(2), frozenset({"local", "field", "chain"})),
        CorpusEntry("Z3", ZmodSpec(3), frozenset({"local", "field", "chain"})),
        CorpusEntry("Z4", ZmodSpec(4), frozenset({"local", "chain"})),
        CorpusEntry("Z8", ZmodSpec(8), frozenset({"local", "chain"})),
        CorpusEntry("Z16", ZmodSpec(16), frozenset({"local", "chain"})),
        CorpusEntry("Z9", ZmodSpec(9), frozenset({"local", "chain"})),
        CorpusEntry("Z27", ZmodSpec(27), frozenset({"local", "chain"})),
        CorpusEntry("Z81", ZmodSpec(81), frozenset({"local", "chain"})),
        CorpusEntry("Z12", ZmodSpec(12), frozenset()),
        CorpusEntry("Z60", ZmodSpec(60), frozenset()),
        CorpusEntry("F2[X]/(X^2)", _truncated_poly(2, "x", 2, "F2[X]/(X^2)"),
                    frozenset({"local", "chain"})),
        CorpusEntry("F2[X]/(X^3)", _truncated_poly(2, "x", 3, "F2[X]/(X^3)"),
                    frozenset({"local", "chain"})),
        CorpusEntry("F2[X]/(X^4)", _truncated_poly(2, "x", 4, "F2[X]/(X^4)"),
                    frozenset({"local", "chain"})),
        CorpusEntry("F3[X]/(X^2)", _truncated_poly(3, "x", 2, "F3[X]/(X^2)"),
                    frozenset({"local", "chain"})),
        CorpusEntry("F2[x,y]/(x,y)^2", fxy2, frozenset({"local"})),
        CorpusEntry("F2[x,y]/(x,y)^3", fxy3, frozenset({"local"})),
        CorpusEntry("Z2[x,y]/(x2,xy,y4)", ex1, frozenset({"local"})),
        CorpusEntry("Z2xZ3", ProductSpec((ZmodSpec(2), ZmodSpec(3))),
                    frozenset({"product"})),
        CorpusEntry("Z4xZ9", ProductSpec((ZmodSpec(4), ZmodSpec(9))),
                    frozenset({"product"})),
        CorpusEntry("ex1xZ2", ProductSpec((ex1, ZmodSpec(2))), frozenset({"product"})),
        CorpusEntry("F2[x,y]/(x,y)^2xF2", ProductSpec((fxy2, ZmodSpec(2))),
                    frozenset({"product"})),
        CorpusEntry(
            "Z4~Z4/(2)",
            TrivialExtensionSpec(ZmodSpec(4), QuotientModuleSpec((2,))),
            frozenset({"local", "trivial-extension"}),
        ),
        CorpusEntry(
            "Z9~Z9/(3)",
            TrivialExtensionSpec(ZmodSpec(9), QuotientModuleSpec((3,))),
            frozenset({"local", "trivial-extension"}),
        ),
        CorpusEntry(
            "F2~F2",
            TrivialExtensionSpec(ZmodSpec(2), SelfModuleSpec()),
            frozenset({"local", "trivial-extension", "chain"}),
        ),
        CorpusEntry(
            "F2[X]/(X^2)~self",
            TrivialExtensionSpec(_truncated_poly(2, "x", 2, "F2[X]/(X^2)"),
                                 SelfModuleSpec()),
            frozenset({"local", "trivial-extension"}),
        ),
        CorpusEntry(
            "F2[X]/(X^3)~self",
            TrivialExtensionSpec(_truncated_poly(2, "x", 3, "F2[X]/(X^3)"),
                                 SelfModuleSpec()),
            frozenset({"local", "trivial-extension"}),
        ),
        CorpusEntry(
            "Z6~Z6/(2)",
            TrivialExtensionSpec(ZmodSpec(6), QuotientModuleSpec((2,))),
            frozenset({"trivial-extension"}),
        ),
    ]
    return entries


def _is_chain_ring(ring: RingTable) -> bool:
    lattice = all_ideals(ring)
    for i, left in enumerate(lattice):
        for right in lattice[i + 1 :]:
            if not (left <= right or right <= left):
                return False
    return True


def _check_tags(entry: CorpusEntry, ring: RingTable) -> CheckResult:
    computed = set()
    if ring.is_local:
        computed.add("local")
    if ring.is_field:
        computed.add("field")
    if ring.factors is not None:
        computed.add("product")
    if ring.extension is not None:
        computed.add("trivial-extension")
    if "chain" in entry.tags or _is_chain_ring(ring):
        if _is_chain_ring(ring):
            computed.add("chain")
    if computed != set(entry.tags):
        return CheckResult(
            "tags", entry.name, None, "fail",
            detail=f"declared {sorted(entry.tags)} vs computed {sorted(computed)}",
        )
    return CheckResult("tags", entry.name, None, "pass")


def run_corpus(
    corpus: Sequence[CorpusEntry],
    n_range: Sequence[int] = (1, 2, 3, 4),
    guards: GuardConfig = DEFAULT_GUARDS,
) -> List[CheckResult]:
    """Run every applicable check on every corpus entry, in corpus order.

    Build failures are reported per entry and do not stop the run.
    """
    results: List[CheckResult] = []
    for entry in corpus:
        try:
            ring = build_ring(entry.spec, guards)
        except RingLabError as exc:
            results.append(
                CheckResult("build", entry.name, None, "fail", detail=str(exc))
            )
            continue
        results.append(_check_tags(entry, ring))
        for n in n_range:
            results.append(check_oa_characterization(ring, n, guards.tuple_budget))
        for n in n_range:
            results.append(check_min_unique(ring, n))
        for n in n_range:
            results.append(check_quotient_closure(ring, n, guards))
        for n in n_range:
            results.append(check_localization(ring, n, guards))
        if ring.is_local:
            for n in n_range:
                results.append(check_pdiv1(ring, n))
        if ring.factors is not None and len(ring.factors) == 2:
            left, right = ring.factors
            for n in n_range:
                results.append(check_product_rule(left, right, n, product=ring))
        if ring.extension is not None:
            base, module = ring.extension
            results.append(
                check_idealization_identities(base, module, extension=ring)
            )
            for n in n_range:
                results.append(check_generalid(base, module, n, extension=ring))
            for n in n_range:
                results.append(check_cid_cid2(base, module, n, extension=ring))
    return results
