"""Ring tower: axioms, unit detection, residue maps, canonical strings."""

import random
from fractions import Fraction

import pytest

from chevalley import make_ring, sum_of_two_units

DESCS = ['zmod:5^2', 'zmod:3^2', 'zloc:5', 'fp:7', 'dual:5', 'gf:5^2', 'jet:3']


@pytest.mark.parametrize('desc', DESCS)
def test_axioms_spot_check(desc):
    R = make_ring(desc)
    rng = random.Random(11)
    for _ in range(40):
        a, b, c = R.rand(rng), R.rand(rng), R.rand(rng)
        assert R.add(a, b) == R.add(b, a)
        assert R.mul(a, b) == R.mul(b, a)
        assert R.add(R.add(a, b), c) == R.add(a, R.add(b, c))
        assert R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))
        assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
        assert R.add(a, R.neg(a)) == R.zero()
        assert R.mul(a, R.one()) == a
        assert R.sub(a, b) == R.add(a, R.neg(b))


@pytest.mark.parametrize('desc', [d for d in DESCS if d != 'jet:3'])
def test_fmt_parse_round_trip(desc):
    R = make_ring(desc)
    rng = random.Random(7)
    for _ in range(30):
        a = R.rand(rng)
        assert R.parse(R.fmt(a)) == a
    assert R.parse('3') == R.from_int(3)
    assert R.parse('-2') == R.from_int(-2)


@pytest.mark.parametrize('desc', DESCS)
def test_unit_detection_matches_try_invert(desc):
    R = make_ring(desc)
    rng = random.Random(3)
    for _ in range(40):
        a = R.rand(rng)
        inv = R.try_invert(a)
        assert R.is_unit(a) == (inv is not None)
        if inv is not None:
            assert R.mul(a, inv) == R.one()


@pytest.mark.parametrize('desc', [d for d in DESCS if d != 'jet:3'])
def test_radical_is_residue_kernel(desc):
    R = make_ring(desc)
    K = R.residue_field()
    rng = random.Random(5)
    for _ in range(40):
        a = R.rand(rng)
        assert R.in_radical(a) == (R.residue(a) == K.zero())
        # local ring: everything is a unit or in the radical, never both
        assert R.is_unit(a) != R.in_radical(a)


def test_zmod_units_are_prime_to_p():
    R = make_ring('zmod:5^2')
    units = [a for a in R.elements() if R.is_unit(a)]
    assert len(units) == 20
    assert all(a % 5 != 0 for a in units)
    assert R.try_invert(R.from_int(5)) is None


def test_zloc_inverts_everything_prime_to_p():
    R = make_ring('zloc:5')
    assert R.try_invert(R.from_int(5)) is None
    assert R.try_invert(R.from_int(10)) is None
    assert R.mul(R.from_int(7), R.try_invert(R.from_int(7))) == R.one()
    assert R.parse('3/7') == Fraction(3, 7)
    with pytest.raises(ValueError):
        R.parse('3/5')  # denominator not prime to 5


def test_dual_numbers_square_zero():
    R = make_ring('dual:5')
    e = R.eps()
    assert R.mul(e, e) == R.zero()
    a = R.add(R.from_int(2), e)           # 2 + eps
    b = R.add(R.from_int(3), R.mul(R.from_int(4), e))  # 3 + 4 eps
    assert R.mul(a, b) == R.add(R.from_int(6), R.mul(R.from_int(11), e))
    assert R.is_unit(a) and not R.is_unit(e)
    assert len(list(R.elements())) == 25
    assert R.parse(R.fmt(b)) == b


def test_gf25_frobenius_is_order_two_automorphism():
    R = make_ring('gf:5^2')
    els = list(R.elements())
    assert len(els) == 25
    for a in els:
        assert R.frobenius(R.frobenius(a)) == a
        for b in els[:8]:
            assert R.frobenius(R.mul(a, b)) == R.mul(R.frobenius(a), R.frobenius(b))
            assert R.frobenius(R.add(a, b)) == R.add(R.frobenius(a), R.frobenius(b))
    for n in range(5):
        assert R.frobenius(R.from_int(n)) == R.from_int(n)
    assert sum(1 for a in els if R.frobenius(a) == a) == 5


def test_jet_ring_first_order():
    R = make_ring('jet:3')
    ys = [R.y(i) for i in range(1, 4)]
    for u in ys:
        for v in ys:
            assert R.iszero(R.mul(u, v))
    a = R.add(R.one(), ys[0])
    c0, lin = R.linear_coeffs(a)
    assert c0 == 1 and lin == [1, 0, 0]
    assert R.constant_part(a) == 1
    assert R.is_unit(a) and not R.is_unit(ys[1])


def test_matrix_helpers_invert_unipotent():
    R = make_ring('zmod:5^2')
    M = R.mat_id(3)
    M[0][1] = R.from_int(7)
    M[1][2] = R.from_int(5)
    Mi = R.mat_inv(M)
    assert R.mat_mul(M, Mi) == R.mat_id(3)
    K = R.residue_field()
    assert R.mat_reduce(M)[1][2] == K.zero()


@pytest.mark.parametrize('desc', ['zmod:5^2', 'zloc:5', 'fp:7', 'dual:5', 'gf:5^2'])
def test_sum_of_two_units(desc):
    R = make_ring(desc)
    rng = random.Random(9)
    for _ in range(25):
        a = R.rand(rng)
        u, v = sum_of_two_units(R, a)
        assert R.is_unit(u) and R.is_unit(v)
        assert R.add(u, v) == a


def test_bad_descriptors_rejected():
    for desc in ['zmod:4^2', 'fp:9', 'weird:5', 'zloc', 'gf:5^3']:
        with pytest.raises(ValueError):
            make_ring(desc)
