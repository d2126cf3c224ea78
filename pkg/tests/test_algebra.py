"""Chevalley basis: structure constants and the full bracket table."""

import pytest

from chevalley import ChevalleyAlgebra, build_root_system, verify_chevalley_basis
from chevalley.roots import vadd, vneg


@pytest.mark.parametrize('name', ['b2', 'g2'])
def test_basis_verification_suite_clean(name):
    alg = ChevalleyAlgebra(build_root_system(name))
    report = verify_chevalley_basis(alg)
    assert report == {'antisym': [], 'extraspecial': [], 'jacobi': []}


@pytest.mark.parametrize('name', ['b2', 'g2'])
def test_structure_constant_magnitudes(name):
    rs = build_root_system(name)
    alg = ChevalleyAlgebra(rs)
    maxn = 0
    for a in rs.rootset:
        for b in rs.rootset:
            n = alg.structure_constant(a, b)
            if rs.is_root(vadd(a, b)):
                assert abs(n) == rs.string_p(a, b) + 1
                maxn = max(maxn, abs(n))
            else:
                assert n == 0
    assert maxn == (2 if name == 'b2' else 3)


@pytest.mark.parametrize('name', ['b2', 'g2'])
def test_cartan_acts_by_pairings(name):
    rs = build_root_system(name)
    alg = ChevalleyAlgebra(rs)
    nr = len(rs.order)
    for i in (0, 1):
        for j, b in enumerate(rs.order):
            col = alg.bracket(nr + i, j)
            want = [0] * alg.n
            want[j] = rs.pairing(b, rs.simple[i])
            assert col == want


@pytest.mark.parametrize('name', ['b2', 'g2'])
def test_opposite_roots_bracket_to_coroot(name):
    rs = build_root_system(name)
    alg = ChevalleyAlgebra(rs)
    nr = len(rs.order)
    for a in rs.rootset:
        vec = alg.bracket(rs.index[a], rs.index[vneg(a)])
        assert vec[:nr] == [0] * nr
        assert tuple(vec[nr:]) == rs.coroot_coords(a)


@pytest.mark.parametrize('name', ['b2', 'g2'])
def test_adjoint_matrices_are_nilpotent(name):
    rs = build_root_system(name)
    alg = ChevalleyAlgebra(rs)
    from chevalley import linalg
    for a in rs.rootset:
        M = alg.adjoint_matrix(a)
        P = [row[:] for row in M]
        for _ in range(3):
            P = linalg.mat_mul(P, M)
        assert all(v == 0 for row in P for v in row)  # ad(x_a)^4 = 0
