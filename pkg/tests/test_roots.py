"""Root systems: counts, pairings, reflections, name round trips."""

import pytest

from chevalley import build_root_system
from chevalley.roots import vadd, vneg, smul


@pytest.mark.parametrize('name,nroots,dim', [('b2', 8, 10), ('g2', 12, 14)])
def test_counts(name, nroots, dim):
    rs = build_root_system(name)
    assert len(rs.rootset) == nroots
    assert len(rs.positive) == nroots // 2
    assert len(rs.order) == nroots
    assert rs.n == dim
    assert len(rs.simple) == 2


@pytest.mark.parametrize('name', ['b2', 'g2'])
def test_rootset_closed_under_negation_and_reflection(name):
    rs = build_root_system(name)
    for a in rs.rootset:
        assert rs.is_root(vneg(a))
        assert rs.ispos(a) != rs.ispos(vneg(a))
        for b in rs.rootset:
            sb = rs.reflect(a, b)
            assert rs.is_root(sb)
            assert rs.reflect(a, sb) == b


@pytest.mark.parametrize('name', ['b2', 'g2'])
def test_root_name_round_trip(name):
    rs = build_root_system(name)
    for a in rs.rootset:
        assert rs.parse_root(rs.root_name(a)) == a
    a1, a2 = rs.simple
    assert rs.parse_root('a1') == a1
    assert rs.parse_root('a2') == a2
    assert rs.parse_root('a1+a2') == vadd(a1, a2)
    assert rs.parse_root('-a1') == vneg(a1)
    with pytest.raises(ValueError):
        rs.parse_root('a3')
    with pytest.raises(ValueError):
        rs.parse_root('a1+9a2')  # not a root


def test_b2_cartan_pairings():
    rs = build_root_system('b2')
    a1, a2 = rs.simple
    assert rs.pairing(a1, a1) == 2 and rs.pairing(a2, a2) == 2
    assert rs.pairing(a1, a2) == -2      # a1 long, a2 short
    assert rs.pairing(a2, a1) == -1
    assert rs.reflect(a2, a1) == rs.parse_root('a1+2a2')
    assert rs.reflect(a1, a2) == rs.parse_root('a1+a2')
    # the highest root is long
    assert rs.is_root(vadd(a1, smul(2, a2)))
    assert not rs.is_root(vadd(smul(2, a1), a2))


def test_g2_cartan_pairings():
    rs = build_root_system('g2')
    a1, a2 = rs.simple
    assert rs.pairing(a1, a2) == -1      # a1 short, a2 long
    assert rs.pairing(a2, a1) == -3
    assert rs.reflect(a2, a1) == rs.parse_root('a1+a2')
    assert rs.reflect(a1, a2) == rs.parse_root('3a1+a2')
    for spec in ['a1+a2', '2a1+a2', '3a1+a2', '3a1+2a2']:
        assert rs.is_root(rs.parse_root(spec))
    assert not rs.is_root(smul(2, rs.parse_root('a1+a2')))


@pytest.mark.parametrize('name', ['b2', 'g2'])
def test_pairing_is_integral_and_reflection_formula_holds(name):
    rs = build_root_system(name)
    for a in rs.rootset:
        for b in rs.rootset:
            p = rs.pairing(b, a)
            assert isinstance(p, int)
            assert rs.reflect(a, b) == vadd(b, smul(-p, a))


@pytest.mark.parametrize('name', ['b2', 'g2'])
def test_order_lists_positive_then_negative_pairs(name):
    rs = build_root_system(name)
    order = rs.order
    for i in range(0, len(order), 2):
        assert rs.ispos(order[i])
        assert order[i + 1] == vneg(order[i])
