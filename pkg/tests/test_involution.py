"""Involution eigenspace splittings over local rings with 1/2."""

import random

import pytest

from chevalley import make_ring
from chevalley.involution import (NotInvolution, congruence_conjugate,
                                  idempotent_of, lift_basis,
                                  random_congruence_element, residue_ranks,
                                  split_module)

from conftest import group


def _standard_involution(system='b2', desc='zmod:5^2', root='a1+2a2'):
    G = group(system, desc)
    return G, G.h_gen(G.rs.parse_root(root), G.R.from_int(-1))


def test_split_of_torus_involution_has_ranks_6_4():
    G, a = _standard_involution()
    sp = split_module(G.R, a)
    assert sp.ranks() == (6, 4)
    assert residue_ranks(G.R, a) == (6, 4)
    # fixed space: the two slots orthogonal to the root pair, plus the Cartan
    assert [sp.idempotent[i][i] for i in range(G.n)] == [0] * 4 + [1] * 6


def test_idempotent_squares_and_commutes():
    G, a = _standard_involution()
    R = G.R
    e = idempotent_of(R, a)
    assert R.mat_mul(e, e) == e
    assert R.mat_mul(e, a) == R.mat_mul(a, e)
    # a acts as +1 on the image of e, -1 on the complement
    one = R.mat_id(G.n)
    ae = R.mat_mul(a, e)
    assert ae == e
    comp = R.mat_sub(one, e)
    assert R.mat_mul(a, comp) == R.mat_sub([[R.zero()] * G.n for _ in range(G.n)], comp)


def test_basis_concatenation_is_unimodular():
    G, a = _standard_involution()
    R = G.R
    sp = split_module(R, a)
    cols = sp.basis0 + sp.basis1
    M = [[cols[j][i] for j in range(G.n)] for i in range(G.n)]
    K = R.residue_field()
    from chevalley.linalg import fp_rank
    red = R.mat_reduce(M)
    assert fp_rank([[x for x in row] for row in red], K.p) == G.n


@pytest.mark.parametrize('desc', ['zmod:3^2', 'zmod:5^2'])
def test_congruence_conjugation_preserves_ranks(desc):
    G, a = _standard_involution('b2', desc)
    R = G.R
    rng = random.Random(99)
    base = residue_ranks(R, a)
    for _ in range(10):
        g, b = congruence_conjugate(R, a, rng)
        assert R.mat_mul(b, b) == R.mat_id(G.n)
        assert residue_ranks(R, b) == base
        assert split_module(R, b).ranks() == base


def test_lift_basis_transition_is_congruent_to_identity():
    G, a = _standard_involution()
    R = G.R
    rng = random.Random(5)
    _, b = congruence_conjugate(R, a, rng)
    rep = lift_basis(R, a, b)
    assert rep['residues_match'] and rep['ranks_match'] and rep['unit_determinant']
    assert rep['ranks'] == (6, 4)
    assert len(rep['basis0']) == 6 and len(rep['basis1']) == 4


def test_random_congruence_element_is_invertible_and_trivial_mod_radical():
    R = make_ring('zmod:5^2')
    rng = random.Random(2)
    g = random_congruence_element(R, 6, rng)
    assert R.mat_mul(g, R.mat_inv(g)) == R.mat_id(6)
    K = R.residue_field()
    assert R.mat_reduce(g) == K.mat_id(6)


def test_non_involution_rejected():
    G = group('b2', 'zmod:5^2')
    R = G.R
    with pytest.raises(NotInvolution):
        split_module(R, G.x_gen(G.rs.parse_root('a1'), R.one()))


def _diag_involution(R, n, minus):
    a = R.mat_id(n)
    for i in minus:
        a[i][i] = R.from_int(-1)
    return a


def test_differing_residues_rejected():
    G, a = _standard_involution()
    R = G.R
    b = _diag_involution(R, G.n, range(6))  # ranks (4, 6): residues differ
    with pytest.raises(ValueError, match='differ mod'):
        lift_basis(R, a, b)


def test_adjoint_torus_involutions_collapse():
    # the adjoint kernel identifies several h_r(-1): two are the identity
    # outright and the remaining two coincide
    G = group('b2', 'zmod:5^2')
    R = G.R
    m1 = R.from_int(-1)
    h = {r: G.h_gen(G.rs.parse_root(r), m1) for r in ('a1', 'a2', 'a1+a2', 'a1+2a2')}
    assert h['a2'] == R.mat_id(G.n)
    assert h['a1+a2'] == R.mat_id(G.n)
    assert h['a1'] == h['a1+2a2'] != R.mat_id(G.n)
    assert split_module(R, R.mat_id(G.n)).ranks() == (G.n, 0)


def test_arbitrary_diagonal_involutions_split():
    R = make_ring('zmod:5^2')
    for minus in ([0], [1, 3, 5], list(range(7))):
        a = _diag_involution(R, 8, minus)
        sp = split_module(R, a)
        assert sp.ranks() == (8 - len(minus), len(minus))
        assert residue_ranks(R, a) == sp.ranks()
