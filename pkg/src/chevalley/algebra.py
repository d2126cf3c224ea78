"""Chevalley basis of the rank-2 simple Lie algebras and its adjoint action.

Structure constants N_{a,b} are fixed by the usual normalization: for each
non-simple positive root g, its extraspecial pair (xi, eta) — the first
decomposition g = xi + eta in the height ordering — gets N_{xi,eta} = p+1 > 0,
and all other constants follow by antisymmetry, the reversal rule on negatives,
and the Jacobi identity.  The basis is ordered as rs.order (root vectors in
+- pairs) followed by the two simple coroots h1, h2.
"""

from fractions import Fraction

from .roots import vadd, vsub, vneg, dot


class NTable:
    """Structure constants by the extraspecial-pair recursion."""

    def __init__(self, rs):
        self.rs = rs
        self.memo = {}
        self.extraspecial = {}
        posorder = sorted(rs.positive, key=rs.poskey)
        for g in posorder:
            if g in rs.simple:
                continue
            best = None
            for xi in posorder:
                eta = vsub(g, xi)
                if rs.is_root(eta) and rs.ispos(eta) and rs.poskey(xi) < rs.poskey(eta):
                    best = (xi, eta)
                    break
            assert best is not None, g
            self.extraspecial[g] = best

    def N(self, a, b):
        g = vadd(a, b)
        if not self.rs.is_root(g):
            return 0
        key = (a, b)
        if key not in self.memo:
            self.memo[key] = self._compute(a, b)
        return self.memo[key]

    def _compute(self, a, b):
        rs = self.rs
        g = vadd(a, b)
        if rs.ispos(a) and rs.ispos(b):
            xi, eta = self.extraspecial[g]
            if (a, b) == (xi, eta):
                return rs.string_p(a, b) + 1
            if (b, a) == (xi, eta):
                return -self.N(b, a)
            # other positive decompositions: Jacobi against the extraspecial pair
            nxg = Fraction(dot(eta, eta), dot(g, g)) * self.N(xi, eta)
            total = 0
            if rs.is_root(vsub(b, xi)):
                total += self.N(b, vneg(xi)) * self.N(a, vsub(b, xi))
            if rs.is_root(vsub(a, xi)):
                total += self.N(vneg(xi), a) * self.N(b, vsub(a, xi))
            val = Fraction(-total, 1) / nxg
            assert val.denominator == 1, (a, b, val)
            return int(val)
        if (not rs.ispos(a)) and (not rs.ispos(b)):
            return -self.N(vneg(a), vneg(b))
        # mixed signs: rotate the triple (a, b, c), c = -a-b, to a settled case
        c = vneg(g)
        if rs.ispos(b) == rs.ispos(c):
            val = Fraction(dot(c, c), dot(a, a)) * self.N(b, c)
        else:
            val = Fraction(dot(c, c), dot(b, b)) * self.N(c, a)
        assert val.denominator == 1, (a, b, val)
        return int(val)


class ChevalleyAlgebra:
    """Bracket table and adjoint matrices in the Chevalley basis."""

    def __init__(self, rs):
        self.rs = rs
        self.nt = NTable(rs)
        self.n = rs.n

    def structure_constant(self, a, b):
        return self.nt.N(a, b)

    def bracket(self, i, j):
        """[basis_i, basis_j] as a coefficient vector of length n."""
        rs = self.rs
        out = [0] * self.n
        nr = len(rs.order)
        if i < nr and j < nr:
            a, b = rs.order[i], rs.order[j]
            s = vadd(a, b)
            if all(x == 0 for x in s):
                c1, c2 = rs.coroot_coords(a)
                out[nr] = c1
                out[nr + 1] = c2
            elif rs.is_root(s):
                out[rs.index[s]] = self.nt.N(a, b)
        elif i >= nr and j < nr:
            b = rs.order[j]
            out[j] = rs.pairing(b, rs.simple[i - nr])
        elif i < nr and j >= nr:
            a = rs.order[i]
            out[i] = -rs.pairing(a, rs.simple[j - nr])
        return out

    def adjoint_matrix(self, r):
        """Matrix of ad(x_r) on the ordered basis (columns are brackets)."""
        i = self.rs.index[r]
        cols = [self.bracket(i, j) for j in range(self.n)]
        return [[cols[j][k] for j in range(self.n)] for k in range(self.n)]

    # --- verification ---

    def check_antisym(self):
        """N_{a,b} = -N_{b,a} and |N_{a,b}| = p+1 for all root pairs."""
        bad = []
        for a in self.rs.rootset:
            for b in self.rs.rootset:
                if self.rs.is_root(vadd(a, b)):
                    if self.nt.N(a, b) != -self.nt.N(b, a):
                        bad.append(('antisym', a, b))
                    p = self.rs.string_p(a, b)
                    if abs(self.nt.N(a, b)) != p + 1:
                        bad.append(('magnitude', a, b))
        return bad

    def check_extraspecial_positive(self):
        return [g for g, (xi, eta) in self.nt.extraspecial.items()
                if self.nt.N(xi, eta) <= 0]

    def check_jacobi(self):
        n = self.n
        br = {(i, j): self.bracket(i, j) for i in range(n) for j in range(n)}

        def brv(i, vec):
            out = [0] * n
            for j, c in enumerate(vec):
                if c:
                    bj = br[(i, j)]
                    for r in range(n):
                        out[r] += c * bj[r]
            return out

        bad = []
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    t1 = brv(i, br[(j, k)])
                    t2 = brv(j, br[(k, i)])
                    t3 = brv(k, br[(i, j)])
                    if any(a + b + c != 0 for a, b, c in zip(t1, t2, t3)):
                        bad.append((i, j, k))
        return bad


def verify_chevalley_basis(alg):
    """Full sanity suite; returns a dict of offending items (all empty = good)."""
    return {
        'antisym': alg.check_antisym(),
        'extraspecial': alg.check_extraspecial_positive(),
        'jacobi': alg.check_jacobi(),
    }
