"""Standard automorphisms: ring, inner, central factors and the torus commutant."""

import random

import pytest

from chevalley import make_ring
from chevalley.autos import (extend_unit_map, inner_auto, ring_auto,
                             ring_auto_apply, torus_commutant_shape,
                             verify_automorphism)

from conftest import group


def test_ring_auto_identity_and_eps_scaling():
    R = make_ring('dual:5')
    ident = ring_auto(R, 'identity')
    rho = ring_auto(R, 'eps:3')
    for a in R.elements():
        assert ident(a) == a
        assert rho(a) == (a[0], 3 * a[1] % 5)
    # a ring map: additive, multiplicative, unital
    els = list(R.elements())
    for a in els[:10]:
        for b in els[::3]:
            assert rho(R.add(a, b)) == R.add(rho(a), rho(b))
            assert rho(R.mul(a, b)) == R.mul(rho(a), rho(b))
    assert rho(R.one()) == R.one()


def test_ring_auto_rejects_non_units_and_wrong_kinds():
    with pytest.raises(ValueError):
        ring_auto(make_ring('dual:5'), 'eps:5')  # 5 = 0 is not a unit
    with pytest.raises(ValueError):
        ring_auto(make_ring('fp:7'), 'frobenius')
    with pytest.raises(ValueError):
        ring_auto(make_ring('fp:7'), 'nonsense')


@pytest.mark.parametrize('system', ['b2', 'g2'])
def test_eps_scaling_covariance(system):
    G = group(system, 'dual:5')
    rep = verify_automorphism(G, [('ring', 'eps:2')], random.Random(4))
    assert rep['status'] == 'pass' and rep['failures'] == []
    names = [n for n, _ in rep['checks']]
    assert any(n.startswith('ring covariance') for n in names)


def test_frobenius_covariance():
    G = group('b2', 'gf:5^2')
    rep = verify_automorphism(G, [('ring', 'frobenius')], random.Random(4))
    assert rep['status'] == 'pass' and rep['failures'] == []


def test_inner_factor_by_word_and_matrix():
    G = group('b2', 'zmod:5^2')
    rep = verify_automorphism(
        G, [('inner', ('word', ['w:a1:1', 'x:a2:3']))], random.Random(0))
    assert rep['status'] == 'pass'
    M = G.eval_word(G.parse_element('w:a2:1'))
    rep = verify_automorphism(G, [('inner', ('matrix', M))], random.Random(0))
    assert rep['status'] == 'pass'


def test_inner_factor_detects_a_non_group_conjugator():
    # conjugating by a random congruence unit does NOT normalize the root
    # subgroups, and the checker says so
    G = group('b2', 'zmod:5^2')
    R = G.R
    M = R.mat_id(G.n)
    M[0][1] = R.from_int(5)
    M[3][7] = R.from_int(10)
    M[0][0] = R.from_int(6)
    rep = verify_automorphism(G, [('inner', ('matrix', M))], random.Random(0))
    assert rep['status'] == 'fail'
    assert any('inner' in name for name in rep['failures'])


def test_composite_ring_then_inner():
    G = group('g2', 'dual:5')
    spec = [('ring', 'eps:4'), ('inner', ('word', ['x:a1:1', 'w:a2:1']))]
    rep = verify_automorphism(G, spec, random.Random(8))
    assert rep['status'] == 'pass'


def test_central_factor_must_kill_commutators():
    G = group('b2', 'zmod:5^2')
    R = G.R
    # tau into the center: scale nothing (trivial character) passes
    rep = verify_automorphism(G, [('central', {})], random.Random(0))
    assert rep['status'] == 'pass'
    # a non-central target value is rejected
    bad = {'x:a1:1': G.x_gen(G.rs.parse_root('a2'), R.one())}
    rep = verify_automorphism(G, [('central', bad)], random.Random(0))
    assert rep['status'] == 'fail'


def test_extend_unit_map_power_maps_on_zmod25():
    R = make_ring('zmod:5^2')
    units = [a for a in R.elements() if R.is_unit(a)]
    # k = 1 is the identity and extends; higher unit powers are
    # multiplicative on units but fail additivity on the full ring
    rho = extend_unit_map(R, {u: u for u in units})
    assert all(rho(a) == a for a in R.elements())
    for k in (3, 7, 9):
        png = {u: pow(u, k, 25) for u in units}
        if k % 20 == 1:
            continue
        with pytest.raises(ValueError):
            extend_unit_map(R, png)


def test_extend_unit_map_recovers_eps_scaling():
    R = make_ring('dual:5')
    rho0 = ring_auto(R, 'eps:2')
    units = {a: rho0(a) for a in R.elements() if R.is_unit(a)}
    rho = extend_unit_map(R, units)
    for a in R.elements():
        assert rho(a) == rho0(a)


@pytest.mark.parametrize('system,dim', [('b2', 12), ('g2', 16)])
def test_torus_commutant_shape(system, dim):
    G = group(system, 'fp:7')
    rep = torus_commutant_shape(G)
    assert rep['dimension'] == dim
    assert rep['matches_oracle']
    assert rep['block_split']
    assert rep['support'] == rep['oracle_support']


def test_torus_commutant_requires_prime_field():
    G = group('b2', 'zmod:5^2')
    with pytest.raises(ValueError):
        torus_commutant_shape(G)


def test_inner_auto_is_conjugation():
    R = make_ring('fp:7')
    G = group('b2', 'fp:7')
    g = G.w_gen(G.rs.parse_root('a1'), R.one())
    A = G.x_gen(G.rs.parse_root('a2'), R.from_int(3))
    B = inner_auto(R, g, A)
    assert R.mat_mul(B, g) == R.mat_mul(g, A)
