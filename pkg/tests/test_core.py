import pytest

from ringlab.core import (
    DEFAULT_GUARDS,
    GuardConfig,
    build_algebra,
    build_product,
    build_quotient,
    build_trivial_extension,
    build_zmod,
    direct_sum_module,
    idempotents,
    is_local,
    jacobson,
    local_decomposition,
    module_from_ring,
    nilradical,
    primitive_idempotents,
    quotient_module,
)
from ringlab.errors import ConstructionError, SizeGuardError
from ringlab.ideals import generate_ideal


def test_zmod_basic_structure():
    r = build_zmod(12)
    assert r.size == 12
    assert r.add[7][8] == 3 and r.mul[5][5] == 1 and r.neg[5] == 7
    assert set(r.units) == {1, 5, 7, 11}
    assert not r.is_local and not r.is_field
    assert build_zmod(7).is_field
    assert build_zmod(4).is_local


def test_zmod_rejects_degenerate_sizes():
    with pytest.raises(ConstructionError):
        build_zmod(1)


def test_size_guard():
    with pytest.raises(SizeGuardError):
        build_zmod(100, guards=GuardConfig(max_ring_size=64))


def test_locality_detection_matches_maximal_ideal_count():
    for n in range(2, 40):
        r = build_zmod(n)
        local, maximals = is_local(r)
        assert local == (len(maximals) == 1)
        assert local == r.is_local


def test_nilradical_jacobson_idempotents_z12():
    r = build_zmod(12)
    assert set(nilradical(r).members) == {0, 6}
    assert set(jacobson(r).members) == {0, 6}
    assert set(idempotents(r)) == {0, 1, 4, 9}
    assert set(primitive_idempotents(r)) == {4, 9}


def test_product_ring_componentwise():
    a, b = build_zmod(4), build_zmod(9)
    r = build_product([a, b])
    assert r.size == 36
    for x in range(r.size):
        for y in range(r.size):
            got = r.mul[x][y]
            assert r.project(0, got) == a.mul[r.project(0, x)][r.project(0, y)]
            assert r.project(1, got) == b.mul[r.project(1, x)][r.project(1, y)]
    # injections are sections of the projections
    for i, factor in enumerate((a, b)):
        for e in range(factor.size):
            assert r.project(i, r.inject(i, e)) == e


def test_quotient_projection_is_a_ring_map():
    r = build_zmod(12)
    ideal = generate_ideal(r, [4])
    q, pi = build_quotient(r, ideal)
    assert q.size == 4
    for x in range(r.size):
        for y in range(r.size):
            assert pi[r.add[x][y]] == q.add[pi[x]][pi[y]]
            assert pi[r.mul[x][y]] == q.mul[pi[x]][pi[y]]
    assert pi[r.one] == q.one and pi[r.zero] == q.zero


def test_algebra_builder_rejects_non_associative_table():
    # x*x=y, x*y=0, y*y=x breaks (x*x)*y = y*y = x versus x*(x*y) = 0
    basis = ["1", "x", "y"]
    unit = lambda i: [1 if k == i else 0 for k in range(3)]
    zero = [0, 0, 0]
    table = [
        [unit(0), unit(1), unit(2)],
        [unit(1), unit(2), zero],
        [unit(2), zero, unit(1)],
    ]
    with pytest.raises(ConstructionError):
        build_algebra(2, basis, table)


def test_algebra_element_names(ex_local_32):
    names = ex_local_32.element_names
    assert "0" in names and "1" in names and "x+y2" in names


def test_local_decomposition_z60_is_crt():
    r = build_zmod(60)
    parts = local_decomposition(r)
    assert sorted(f.size for f, _ in parts) == [3, 4, 5]
    images = set()
    for x in range(r.size):
        images.add(tuple(s[x] for _, s in parts))
    assert len(images) == r.size  # the combined map is bijective
    for factor, s in parts:
        for x in range(r.size):
            for y in range(r.size):
                assert s[r.mul[x][y]] == factor.mul[s[x]][s[y]]


def test_quotient_module_and_annihilator():
    r = build_zmod(4)
    e = quotient_module(r, [2])
    assert e.size == 2 and e.is_cyclic()
    ann = generate_ideal(r, [2])
    assert e.annihilator_mask() == ann.mask


def test_direct_sum_module():
    r = build_zmod(4)
    e = direct_sum_module([quotient_module(r, [2]), module_from_ring(r)])
    assert e.size == 8
    assert not e.is_cyclic()


def test_trivial_extension_multiplication_law():
    a = build_zmod(4)
    e = quotient_module(a, [2])
    r = build_trivial_extension(a, e)
    assert r.size == 8 and r.is_local
    for p in range(r.size):
        for q in range(r.size):
            pa, pe = divmod(p, e.size)
            qa, qe = divmod(q, e.size)
            ra, re = divmod(r.mul[p][q], e.size)
            assert ra == a.mul[pa][qa]
            assert re == e.add[e.action[pa][qe]][e.action[qa][pe]]
