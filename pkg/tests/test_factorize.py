import itertools

import pytest

from ringlab.core import build_product, build_zmod
from ringlab.errors import RingMismatchError
from ringlab.classify import is_n_oa, list_n_oa_ideals
from ringlab.factorize import (
    find_factorization,
    is_general_zpi,
    is_n_oaf,
    multiplicative_closure,
    oaf_dim,
)
from ringlab.ideals import (
    IdealSet,
    generate_ideal,
    ideal_product,
    is_prime,
    min_primes,
    proper_ideals,
    unit_ideal,
)
from ringlab.specdoc import resolve_ideal


def _products_up_to_length(gens, length):
    """All masks of products of 1..length generators (multisets suffice)."""
    masks = set()
    for k in range(1, length + 1):
        for combo in itertools.combinations_with_replacement(gens, k):
            acc = combo[0]
            for g in combo[1:]:
                acc = ideal_product(acc, g)
            masks.add(acc.mask)
    return masks


def test_closure_equals_bounded_product_enumeration(ex_local_32):
    cases = [
        (build_zmod(12), lambda r: [p for p in proper_ideals(r) if is_prime(p)]),
        (build_zmod(16), lambda r: [p for p in proper_ideals(r) if is_prime(p)]),
        (ex_local_32, lambda r: list_n_oa_ideals(r, 4)),
    ]
    for ring, pick in cases:
        gens = pick(ring)
        index = multiplicative_closure(gens)
        # powers of ideals stabilize well within |lattice| steps; length 8
        # saturates every case here (adding factors then changes nothing)
        expected = _products_up_to_length(gens, 8)
        assert expected == set(index.parent.keys())


def test_every_reachable_ideal_replays(ex_local_32):
    gens = list_n_oa_ideals(ex_local_32, 4)
    index = multiplicative_closure(gens)
    for mask in index.parent:
        target = IdealSet(ex_local_32, mask)
        cert = find_factorization(target, gens, class_tag="4-OA", n=4, index=index)
        assert cert is not None and cert.replay()


def test_certificate_factors_pass_the_brute_force_class(ex_local_32):
    x_ideal = resolve_ideal(ex_local_32, ["x"])
    cert = find_factorization(x_ideal, list_n_oa_ideals(ex_local_32, 4), n=4)
    assert cert is not None
    for factor, report in zip(cert.factors, cert.reports):
        assert is_n_oa(factor, 4)[0]
        assert report.is_n_oa is True


def test_minimal_primes_of_target_come_from_factors(z12, ex_local_32):
    for ring, n in ((z12, 1), (ex_local_32, 4)):
        gens = list_n_oa_ideals(ring, n)
        for ideal in proper_ideals(ring):
            cert = find_factorization(ideal, gens, n=n)
            if cert is None:
                continue
            union = set()
            for f in cert.factors:
                union.update(p.mask for p in min_primes(f))
            assert {p.mask for p in min_primes(ideal)} <= union


def test_prime_factorization_example(z12):
    cert = find_factorization(generate_ideal(z12, [4]),
                              [p for p in proper_ideals(z12) if is_prime(p)],
                              class_tag="prime")
    assert cert is not None
    assert [f.describe() for f in cert.factors] == ["(2)", "(2)"]


def test_unfactorable_ideal_returns_none(ex_local_32):
    x_ideal = resolve_ideal(ex_local_32, ["x"])
    assert find_factorization(x_ideal, list_n_oa_ideals(ex_local_32, 3), n=3) is None


def test_oaf_verdicts_on_local_example(ex_local_32):
    verdicts = [(n, is_n_oaf(ex_local_32, n)[0]) for n in range(1, 5)]
    assert verdicts == [(1, False), (2, False), (3, False), (4, True)]
    ok, witness = is_n_oaf(ex_local_32, 3)
    assert not ok and witness == resolve_ideal(ex_local_32, ["x"])
    assert oaf_dim(ex_local_32, 4) == 4
    assert oaf_dim(ex_local_32, 3) is None


def test_zero_ideal_must_be_representable():
    # in a field the zero ideal is prime, so every ring of prime order passes
    for p in (2, 3, 5, 7):
        assert is_general_zpi(build_zmod(p))[0]
    # Z4: (0) = (2)^2 is reachable even though (0) is not prime
    assert is_general_zpi(build_zmod(4))[0]


def test_zmod_rings_factor_into_primes():
    for n in range(2, 61):
        ok, witness = is_general_zpi(build_zmod(n))
        assert ok, f"Z{n} reported witness {witness}"


def test_product_rings_track_factor_structure():
    good = build_product([build_zmod(4), build_zmod(9)])
    assert is_general_zpi(good)[0]
    for n in (1, 2, 3):
        assert is_n_oaf(good, n)[0]


def test_closure_rejects_bad_generators(z12):
    with pytest.raises(RingMismatchError):
        multiplicative_closure(
            [generate_ideal(z12, [2]), generate_ideal(build_zmod(8), [2])]
        )
    with pytest.raises(ValueError):
        multiplicative_closure([unit_ideal(z12)])
    with pytest.raises(ValueError):
        find_factorization(unit_ideal(z12), [generate_ideal(z12, [2])])
