import itertools

import pytest

from ringlab.core import build_trivial_extension, build_zmod, quotient_module
from ringlab.errors import LatticeGuardError
from ringlab.ideals import (
    IdealSet,
    all_ideals,
    generate_ideal,
    homogeneous_view,
    ideal_colon,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_divided,
    is_idempotent,
    is_maximal,
    is_primary,
    is_prime,
    is_simple_ideal,
    min_primes,
    proper_ideals,
    radical,
    unit_ideal,
    zero_ideal,
)
from ringlab.specdoc import build_ring, resolve_ideal
from ringlab.verify import _two_var_truncated


def _small_rings():
    yield build_zmod(8)
    yield build_zmod(12)
    yield build_ring(_two_var_truncated(2, "F2[x,y]/(x,y)^2"))
    r = build_zmod(4)
    yield build_trivial_extension(r, quotient_module(r, [2]))


def _brute_ideal_masks(ring):
    """Every additively-closed absorbing subset containing 0, by subset scan."""
    size = ring.size
    masks = []
    for mask in range(1 << size):
        if not mask & 1 << ring.zero:
            continue
        members = [x for x in range(size) if mask >> x & 1]
        ok = all(mask >> ring.add[x][y] & 1 for x in members for y in members)
        ok = ok and all(
            mask >> ring.mul[r][x] & 1 for r in range(size) for x in members
        )
        if ok:
            masks.append(mask)
    return masks


def test_lattice_matches_exhaustive_subset_scan():
    for ring in _small_rings():
        assert sorted(i.mask for i in all_ideals(ring)) == sorted(
            _brute_ideal_masks(ring)
        )


def test_generated_ideal_is_sum_of_principal_orbits():
    for ring in _small_rings():
        elems = range(ring.size)
        for gens in itertools.combinations(range(ring.size), 2):
            orbit_sum = {ring.zero}
            for g in gens:
                orbit = {ring.mul[r][g] for r in elems}
                orbit_sum = {ring.add[s][o] for s in orbit_sum for o in orbit}
            assert set(generate_ideal(ring, gens).members) == orbit_sum


def test_canonical_lattice_order():
    ring = build_zmod(12)
    lattice = all_ideals(ring)
    keys = [i.sort_key for i in lattice]
    assert keys == sorted(keys)
    assert lattice[0].is_zero and lattice[-1] == unit_ideal(ring)


def test_lattice_cap_raises():
    with pytest.raises(LatticeGuardError):
        all_ideals(build_zmod(60), max_ideals=3)


def test_arithmetic_laws(z12, ex_local_32):
    for ring in (z12, ex_local_32):
        lattice = all_ideals(ring)
        for i in lattice:
            for j in lattice:
                assert ideal_sum(i, j) == ideal_sum(j, i)
                assert ideal_product(i, j) == ideal_product(j, i)
                assert ideal_product(i, j).mask & ~(i.mask & j.mask) == 0
                assert radical(ideal_product(i, j)).mask == (
                    radical(i).mask & radical(j).mask
                )
        i, j, k = lattice[1], lattice[len(lattice) // 2], lattice[-2]
        assert ideal_product(i, ideal_sum(j, k)) == ideal_sum(
            ideal_product(i, j), ideal_product(i, k)
        )


def test_prime_primary_maximal_hierarchy():
    for ring in _small_rings():
        for i in proper_ideals(ring):
            if is_maximal(i):
                assert is_prime(i)
            if is_prime(i):
                assert is_primary(i)
            if is_primary(i):
                assert is_prime(radical(i))


def test_power_and_colon():
    ring = build_zmod(16)
    m = generate_ideal(ring, [2])
    assert ideal_power(m, 0) == unit_ideal(ring)
    assert ideal_power(m, 3) == generate_ideal(ring, [8])
    assert ideal_power(m, 4).is_zero
    i = generate_ideal(ring, [8])
    colon = ideal_colon(i, 4)
    assert set(colon.members) == {x for x in range(16) if (4 * x) % 16 % 8 == 0}


def test_min_primes_examples(z12):
    zero = zero_ideal(z12)
    assert {p.describe() for p in min_primes(zero)} == {"(2)", "(3)"}
    for p in proper_ideals(z12):
        if is_prime(p):
            assert min_primes(p) == [p]


def test_divided_full_equals_principal_only(z12, ex_local_32):
    for ring in (z12, ex_local_32):
        for i in all_ideals(ring):
            full, _ = is_divided(i)
            principal, _ = is_divided(i, principal_only=True)
            assert full == principal


def test_divided_witness_on_local_example(ex_local_32):
    m = ex_local_32.maximal_ideals[0]
    divided, witness = is_divided(ideal_power(m, 2))
    assert not divided
    x_ideal = resolve_ideal(ex_local_32, ["x"])
    assert witness == x_ideal


def test_simple_and_idempotent():
    z4 = build_zmod(4)
    m = generate_ideal(z4, [2])
    assert is_simple_ideal(m)
    z6 = build_zmod(6)
    for i in proper_ideals(z6):
        assert is_idempotent(i)


def test_homogeneous_view_roundtrip():
    a = build_zmod(4)
    e = quotient_module(a, [2])
    r = build_trivial_extension(a, e)
    for h in all_ideals(r):
        view = homogeneous_view(r, h)
        if view is None:
            continue
        ideal_a, module_part = view
        rebuilt = {pa * e.size + pe for pa in ideal_a.members for pe in module_part}
        assert rebuilt == set(h.members)
    with pytest.raises(ValueError):
        homogeneous_view(a, generate_ideal(a, [2]))
