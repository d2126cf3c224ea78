"""Group generators: x/w/h well-formedness, words, commutator constants."""

import random
from fractions import Fraction

import pytest

from chevalley import ChevalleyGroup, make_ring
from chevalley.groups import rand_unit
from chevalley.roots import vneg

from conftest import group


@pytest.mark.parametrize('system,desc,unit', [
    ('b2', 'fp:2', 2), ('g2', 'fp:3', 3), ('g2', 'zmod:3^2', 3), ('g2', 'fp:2', 2),
])
def test_missing_required_unit_refused(system, desc, unit):
    with pytest.raises(ValueError, match='needs 1/%d' % unit):
        ChevalleyGroup(system, make_ring(desc))


@pytest.mark.parametrize('system', ['b2', 'g2'])
def test_x_at_zero_is_identity(system):
    G = group(system, 'zmod:5^2')
    R = G.R
    for a in G.rs.rootset:
        assert G.x_gen(a, R.zero()) == R.mat_id(G.n)


@pytest.mark.parametrize('system', ['b2', 'g2'])
def test_x_entries_polynomial_of_degree_le_3(system):
    # x_r(t) = 1 + t A1 + t^2 A2 (+ t^3 A3 for g2); check against Fractions
    G = group(system, 'zloc:5')
    R = G.R
    t = Fraction(7, 3)
    for a in G.rs.rootset:
        pows = G.table.xpows[a]
        assert 3 <= len(pows) <= 4
        want = [[Fraction(x) for x in row] for row in pows[0]]
        tp = Fraction(1)
        for k in range(1, len(pows)):
            tp *= t
            for i in range(G.n):
                for j in range(G.n):
                    want[i][j] += tp * pows[k][i][j]
        assert G.x_gen(a, t) == want


@pytest.mark.parametrize('system', ['b2', 'g2'])
def test_w_squares_to_h_minus_one(system):
    G = group(system, 'zloc:5')
    R = G.R
    one = R.one()
    for a in G.rs.rootset:
        W = G.w_gen(a, one)
        assert R.mat_mul(W, W) == G.h_gen(a, R.from_int(-1))
        assert R.mat_mul(W, G.w_inv(a, one)) == R.mat_id(G.n)


@pytest.mark.parametrize('system', ['b2', 'g2'])
def test_h_is_diagonal_with_pairing_exponents(system):
    G = group(system, 'zloc:5')
    t = Fraction(3, 7)
    for a in G.rs.rootset:
        H = G.h_gen(a, t)
        for i in range(G.n):
            for j in range(G.n):
                if i != j:
                    assert H[i][j] == 0
        for i, b in enumerate(G.rs.order):
            assert H[i][i] == t ** G.rs.pairing(b, a)
        assert H[G.n - 2][G.n - 2] == 1 and H[G.n - 1][G.n - 1] == 1
        assert G.R.mat_mul(H, G.h_inv(a, t)) == G.R.mat_id(G.n)


def test_torus_element_is_coordinate_character():
    G = group('b2', 'fp:7')
    R = G.R
    t = (R.from_int(3), R.from_int(2))
    T = G.torus_element(t)
    for i, b in enumerate(G.rs.order):
        c1, c2 = G.rs.coords[b]
        assert T[i][i] == R.mul(R.pow(t[0], c1), R.pow(t[1], c2))
    # multiplicative in the parameters
    u = (R.from_int(2), R.from_int(4))
    Tu = G.torus_element(u)
    Ttu = G.torus_element((R.mul(t[0], u[0]), R.mul(t[1], u[1])))
    assert R.mat_mul(T, Tu) == Ttu
    with pytest.raises(ZeroDivisionError):
        G.torus_element((R.zero(), R.one()))


def test_parse_element_and_eval_word():
    G = group('b2', 'zloc:5')
    R = G.R
    w = G.parse_element('x:a1+2a2:3/7')
    assert w == ('x', G.rs.parse_root('a1+2a2'), Fraction(3, 7))
    M = G.eval_word(('mul', [G.parse_element('x:a1:1'),
                             G.parse_element('x:a1:-1')]))
    assert M == R.mat_id(G.n)
    P = G.eval_word(('pow', G.parse_element('x:a2:1'), 3))
    assert P == G.x_gen(G.rs.parse_root('a2'), R.from_int(3))
    Inv = G.eval_word(('inv', G.parse_element('w:a2:1')))
    assert R.mat_mul(Inv, G.w_gen(G.rs.parse_root('a2'), R.one())) == R.mat_id(G.n)
    for bad in ['x:a1', 'y:a1:1', 'x:a1:1:2', 'x:zz:1']:
        with pytest.raises(ValueError):
            G.parse_element(bad)


def test_commutator_constants_frozen_values():
    Gb = group('b2', 'zloc:5')
    Gg = group('g2', 'zloc:5')
    a1b, a2b = Gb.rs.simple
    a1g, a2g = Gg.rs.simple
    assert Gb.commutator_constants(a1b, a2b) == [((1, 1), -1), ((1, 2), -1)]
    assert Gb.commutator_constants(a2b, a1b) == [((1, 1), 1), ((2, 1), 1)]
    assert Gg.commutator_constants(a1g, a2g) == \
        [((1, 1), -1), ((2, 1), -1), ((3, 1), -1), ((3, 2), -2)]
    assert Gg.commutator_constants(a2g, a1g) == \
        [((1, 1), 1), ((1, 2), 1), ((1, 3), 1), ((2, 3), -1)]


@pytest.mark.parametrize('system', ['b2', 'g2'])
def test_commutator_constants_independent_of_parameters(system):
    # re-extract each constant from ring-valued commutators at 20 random (t, u)
    G = group(system, 'zloc:5')
    R = G.R
    rng = random.Random(17)
    rs = G.rs
    pairs = [(a, b) for a in rs.rootset for b in rs.rootset
             if b != a and b != vneg(a)]
    for a, b in pairs:
        claimed = dict(G.commutator_constants(a, b))
        chain = G.chain_roots(a, b)
        for _ in range(20 // max(1, len(pairs) // 8)):
            t, u = rand_unit(R, rng), rand_unit(R, rng)
            C = R.mat_mul(R.mat_mul(G.x_gen(a, t), G.x_gen(b, u)),
                          R.mat_mul(G.x_gen(a, R.neg(t)), G.x_gen(b, R.neg(u))))
            rem = C
            for (i, j, g) in chain:
                s = R.mul(R.from_int(claimed.get((i, j), 0)),
                          R.mul(R.pow(t, i), R.pow(u, j)))
                rem = R.mat_mul(G.x_gen(g, R.neg(s)), rem)
            assert rem == R.mat_id(G.n), (a, b, t, u)


def test_congruence_detection():
    G = group('b2', 'zmod:5^2')
    R = G.R
    assert G.in_congruence(R.mat_id(G.n))
    assert G.in_congruence(G.x_gen(G.rs.parse_root('a1'), R.from_int(5)))
    assert not G.in_congruence(G.x_gen(G.rs.parse_root('a1'), R.from_int(1)))
    K = R.residue_field()
    assert G.reduce_mod_J(G.x_gen(G.rs.parse_root('a1'), R.from_int(10))) \
        == K.mat_id(G.n)


@pytest.mark.parametrize('system,dim', [('b2', 10), ('g2', 14)])
def test_dimensions(system, dim):
    G = group(system, 'fp:7')
    assert G.n == dim
    assert len(G.x_gen(G.rs.simple[0], G.R.one())) == dim
