"""Property-based checks over a pool of small rings."""

import pytest

try:
    from hypothesis import given, settings, strategies as st
except ImportError:  # pragma: no cover
    pytest.skip("hypothesis not installed", allow_module_level=True)

from ringlab.core import build_trivial_extension, build_zmod, quotient_module
from ringlab.classify import is_n_oa, is_n_oa_fast
from ringlab.factorize import find_factorization
from ringlab.ideals import (
    all_ideals,
    generate_ideal,
    ideal_colon,
    ideal_product,
    ideal_sum,
    is_prime,
    proper_ideals,
    radical,
)
from ringlab.specdoc import build_ring
from ringlab.verify import _two_var_truncated


def _pool():
    rings = [build_zmod(n) for n in (4, 6, 8, 9, 12)]
    rings.append(build_ring(_two_var_truncated(2, "F2[x,y]/(x,y)^2")))
    z4 = build_zmod(4)
    rings.append(build_trivial_extension(z4, quotient_module(z4, [2])))
    return rings


POOL = _pool()

ring_st = st.sampled_from(POOL)


@st.composite
def ring_and_gens(draw):
    ring = draw(ring_st)
    gens = draw(st.lists(st.integers(0, ring.size - 1), min_size=0, max_size=3))
    return ring, gens


@st.composite
def ring_and_ideal_pair(draw):
    ring = draw(ring_st)
    lattice = all_ideals(ring)
    return (
        ring,
        draw(st.sampled_from(lattice)),
        draw(st.sampled_from(lattice)),
    )


@given(ring_and_gens())
@settings(max_examples=150, deadline=None)
def test_generated_ideal_is_least_ideal_containing_gens(case):
    ring, gens = case
    ideal = generate_ideal(ring, gens)
    members = set(ideal.members)
    assert set(gens) <= members
    for other in all_ideals(ring):
        if set(gens) <= set(other.members):
            assert members <= set(other.members)


@given(ring_and_ideal_pair())
@settings(max_examples=150, deadline=None)
def test_ideal_arithmetic_properties(case):
    ring, i, j = case
    assert ideal_sum(i, j) == ideal_sum(j, i)
    assert ideal_product(i, j) == ideal_product(j, i)
    assert ideal_product(i, j).mask & ~(i.mask & j.mask) == 0
    assert i.mask & ~radical(i).mask == 0
    assert radical(radical(i)) == radical(i)


@given(ring_and_ideal_pair(), st.data())
@settings(max_examples=150, deadline=None)
def test_colon_contains_ideal_and_multiplies_back(case, data):
    ring, i, _ = case
    x = data.draw(st.integers(0, ring.size - 1))
    colon = ideal_colon(i, x)
    assert i.mask & ~colon.mask == 0
    for r in colon.members:
        assert ring.mul[r][x] in i


@given(ring_and_ideal_pair(), st.integers(1, 3))
@settings(max_examples=100, deadline=None)
def test_sweep_and_characterization_agree(case, n):
    _, i, _ = case
    if not i.is_proper:
        return
    assert is_n_oa(i, n)[0] == is_n_oa_fast(i, n)


@given(ring_and_ideal_pair())
@settings(max_examples=100, deadline=None)
def test_prime_factorizations_replay(case):
    ring, i, _ = case
    if not i.is_proper:
        return
    primes = [p for p in proper_ideals(ring) if is_prime(p)]
    cert = find_factorization(i, primes, class_tag="prime")
    if cert is not None:
        assert cert.replay()
        assert all(is_prime(f) for f in cert.factors)
