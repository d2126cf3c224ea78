"""Involution geometry over local rings.

An involution a (a^2 = 1, ring containing 1/2) yields the idempotent
e = (1+a)/2, and the module splits as V = eV + (1-e)V.  Over a local ring
both summands are free; unit-pivot column reduction of the idempotent
extracts explicit free bases, and the ranks match the eigenvalue
multiplicities of the residue of a.  Consequently the ranks are stable under
conjugation by any g = 1 mod radical, and a splitting basis for a lifts to
one for b = g a g^{-1} with unchanged residues and a transition matrix that
is the identity mod radical.

Involution inputs are arbitrary square matrices with a^2 = 1 over the given
ring, not only group elements.
"""


class NotInvolution(ValueError):
    pass


def _mat_eq(A, B):
    return A == B


def _is_involution(R, a):
    n = len(a)
    return R.mat_mul(a, a) == R.mat_id(n)


def idempotent_of(R, a):
    """e = (1+a)/2; raises NotInvolution unless a^2 = 1."""
    if not _is_involution(R, a):
        raise NotInvolution('matrix does not square to the identity')
    half = R.try_invert(R.from_int(2))
    if half is None:
        raise ValueError('2 is not invertible in %r' % R)
    n = len(a)
    I = R.mat_id(n)
    return [[R.mul(half, R.add(I[i][j], a[i][j])) for j in range(n)]
            for i in range(n)]


def _complement(R, e):
    n = len(e)
    I = R.mat_id(n)
    return [[R.sub(I[i][j], e[i][j]) for j in range(n)] for i in range(n)]


def _free_basis(R, e):
    """Free basis of the column span of an idempotent over a local ring.

    Reduced column echelon with unit pivots.  Once no unit entries remain,
    every residual column must have been cleared to zero -- that is exactly
    freeness of the image, and it is asserted.
    """
    n = len(e)
    cols = [[e[i][j] for i in range(n)] for j in range(n)]
    basis, pivots = [], []
    while True:
        hit = None
        for c, col in enumerate(cols):
            for r in range(n):
                if r in pivots:
                    continue
                inv = R.try_invert(col[r])
                if inv is not None:
                    hit = (c, r, inv)
                    break
            if hit:
                break
        if hit is None:
            break
        c, r, inv = hit
        col = [R.mul(inv, v) for v in cols.pop(c)]
        for other in basis + cols:
            f = other[r]
            if not R.iszero(f):
                for i in range(n):
                    other[i] = R.sub(other[i], R.mul(f, col[i]))
        basis.append(col)
        pivots.append(r)
    for col in cols:
        assert all(R.iszero(v) for v in col), 'image of idempotent not free'
    return basis


def _field_rank(K, M):
    if not M:
        return 0
    rows = [list(r) for r in M]
    ncols = len(rows[0])
    rank, prow = 0, 0
    for c in range(ncols):
        piv = None
        for r in range(prow, len(rows)):
            if not K.iszero(rows[r][c]):
                piv = r
                break
        if piv is None:
            continue
        rows[prow], rows[piv] = rows[piv], rows[prow]
        inv = K.try_invert(rows[prow][c])
        rows[prow] = [K.mul(inv, v) for v in rows[prow]]
        for r in range(len(rows)):
            if r != prow and not K.iszero(rows[r][c]):
                f = rows[r][c]
                rows[r] = [K.sub(v, K.mul(f, w))
                           for v, w in zip(rows[r], rows[prow])]
        rank += 1
        prow += 1
    return rank


class ModuleSplitting:
    """Idempotent e with free bases of eV and (1-e)V.

    Invariants checked on construction: e^2 = e, e v = v on basis0,
    e v = 0 on basis1, rank0 + rank1 = n, and the concatenated basis is
    invertible (unit determinant; over a local ring this is residue rank n).
    """

    def __init__(self, R, idempotent, basis0, basis1):
        self.R = R
        self.idempotent = idempotent
        self.basis0 = basis0
        self.basis1 = basis1
        self.rank0 = len(basis0)
        self.rank1 = len(basis1)
        n = len(idempotent)
        assert R.mat_mul(idempotent, idempotent) == idempotent
        for v in basis0:
            assert self._apply(idempotent, v) == v
        zero = [R.zero()] * n
        for v in basis1:
            assert self._apply(idempotent, v) == zero
        assert self.rank0 + self.rank1 == n
        T = [[col[i] for col in basis0 + basis1] for i in range(n)]
        K = R.residue_field()
        assert _field_rank(K, R.mat_reduce(T)) == n, 'basis not unimodular'

    def _apply(self, M, v):
        R = self.R
        n = len(M)
        out = []
        for i in range(n):
            s = R.zero()
            for j in range(n):
                s = R.add(s, R.mul(M[i][j], v[j]))
            out.append(s)
        return out

    def ranks(self):
        return (self.rank0, self.rank1)


def split_module(R, a):
    """Split V along the involution a; returns a ModuleSplitting."""
    e = idempotent_of(R, a)
    return ModuleSplitting(R, e, _free_basis(R, e), _free_basis(R, _complement(R, e)))


def residue_ranks(R, a):
    """Oracle for the split ranks: eigenspace dimensions of the residue of a.

    Prop-5-style statement: the splitting ranks equal the multiplicities of
    +1 and -1 in the reduction of a over the residue field.
    """
    K = R.residue_field()
    ab = R.mat_reduce(a)
    n = len(ab)
    Ik = [[K.from_int(int(i == j)) for j in range(n)] for i in range(n)]
    plus = [[K.sub(ab[i][j], Ik[i][j]) for j in range(n)] for i in range(n)]
    minus = [[K.add(ab[i][j], Ik[i][j]) for j in range(n)] for i in range(n)]
    return (n - _field_rank(K, plus), n - _field_rank(K, minus))


def random_congruence_element(R, n, rng):
    """Random g = 1 + (radical element)*E, invertible because g = 1 mod J."""
    p = R.from_int(R.char_hint)
    g = R.mat_id(n)
    for i in range(n):
        for j in range(n):
            g[i][j] = R.add(g[i][j], R.mul(p, R.rand(rng)))
    return g


def congruence_conjugate(R, a, rng):
    """(g, g a g^{-1}) for a random congruence-subgroup element g."""
    g = random_congruence_element(R, len(a), rng)
    b = R.mat_mul(R.mat_mul(g, a), R.mat_inv(g))
    return g, b


def lift_basis(R, a, b, split_a=None):
    """Adapt a splitting basis for a to the involution b, b = a mod radical.

    Projects each basis vector of the a-splitting with the idempotent of b
    (or its complement).  The residues are unchanged, so the transition
    matrix between the two concatenated bases is the identity mod radical,
    hence invertible: the projected family is again a basis and the ranks of
    the two splittings agree.  Returns a report dict.
    """
    if R.mat_reduce(a) != R.mat_reduce(b):
        raise ValueError('involutions differ mod radical')
    if split_a is None:
        split_a = split_module(R, a)
    eb = idempotent_of(R, b)
    cb = _complement(R, eb)
    f0 = [split_a._apply(eb, v) for v in split_a.basis0]
    f1 = [split_a._apply(cb, v) for v in split_a.basis1]
    n = len(a)
    K = R.residue_field()
    old = [[col[i] for col in split_a.basis0 + split_a.basis1] for i in range(n)]
    new = [[col[i] for col in f0 + f1] for i in range(n)]
    residues_match = R.mat_reduce(old) == R.mat_reduce(new)
    unit_det = _field_rank(K, R.mat_reduce(new)) == n
    split_b = split_module(R, b)
    return {
        'basis0': f0, 'basis1': f1,
        'residues_match': residues_match,
        'unit_determinant': unit_det,
        'ranks_match': split_b.ranks() == split_a.ranks(),
        'ranks': split_b.ranks(),
    }
