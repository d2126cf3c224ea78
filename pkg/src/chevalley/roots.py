"""Rank-2 root systems B2 and G2, with the basis ordering the rest of the
package is built around.

Roots are integer coordinate tuples.  B2 lives in Z^2 with simple roots
a1 = e1-e2 (long) and a2 = e2 (short); the weight-space ordering pairs each
positive root with its negative: e1, -e1, e2, -e2, e1+e2, -(e1+e2), e1-e2,
-(e1-e2), then the two Cartan slots.  G2 lives in the sum-zero-ish slice of
Z^3 with a1 short, a2 long, positive roots ordered by height.
"""


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vneg(u):
    return tuple(-a for a in u)


def smul(c, u):
    return tuple(c * a for a in u)


class RootSystem:
    def __init__(self, name):
        name = name.lower()
        self.name = name
        if name == 'b2':
            self.simple = [(1, -1), (0, 1)]
            pos = [(1, -1), (0, 1), (1, 0), (1, 1)]
            order_pos = [(1, 0), (0, 1), (1, 1), (1, -1)]
        elif name == 'g2':
            self.simple = [(1, -1, 0), (-2, 1, 1)]
            a1, a2 = self.simple
            pos = [a1, a2, vadd(a1, a2), vadd(smul(2, a1), a2),
                   vadd(smul(3, a1), a2), vadd(smul(3, a1), smul(2, a2))]
            order_pos = pos
        else:
            raise ValueError('unknown system %r' % name)
        self.positive = pos
        self.posset = set(pos)
        # weight-space order: +- pairs, then two Cartan slots
        self.order = []
        for b in order_pos:
            self.order.append(b)
            self.order.append(vneg(b))
        self.rootset = set(self.order)
        self.n = len(self.order) + 2
        self.index = {r: i for i, r in enumerate(self.order)}
        self.coords = {r: self._coord(r) for r in self.rootset}

    def _coord(self, r):
        a1, a2 = self.simple
        for c1 in range(-4, 5):
            for c2 in range(-4, 5):
                if vadd(smul(c1, a1), smul(c2, a2)) == r:
                    return (c1, c2)
        raise ValueError(r)

    def from_coords(self, c1, c2):
        a1, a2 = self.simple
        r = vadd(smul(c1, a1), smul(c2, a2))
        if r not in self.rootset:
            raise ValueError('(%d)a1+(%d)a2 is not a root of %s' % (c1, c2, self.name))
        return r

    def is_root(self, v):
        return v in self.rootset

    def ispos(self, r):
        return r in self.posset

    def pairing(self, b, a):
        """<b, a> = 2(b,a)/(a,a), always an integer."""
        num = 2 * dot(b, a)
        den = dot(a, a)
        assert num % den == 0, (b, a)
        return num // den

    def reflect(self, a, b):
        """s_a(b) = b - <b,a> a."""
        return vsub(b, smul(self.pairing(b, a), a))

    def height(self, r):
        c = self.coords[r]
        return c[0] + c[1]

    def poskey(self, r):
        return (self.height(r), self.coords[r])

    def string_p(self, a, b):
        """Largest p with b - p*a a root."""
        i, cur = 0, vsub(b, a)
        while self.is_root(cur):
            i, cur = i + 1, vsub(cur, a)
        return i

    def string_q(self, a, b):
        """Largest q with b + q*a a root."""
        i, cur = 0, vadd(b, a)
        while self.is_root(cur):
            i, cur = i + 1, vadd(cur, a)
        return i

    def root_string(self, a, b):
        return self.string_p(a, b), self.string_q(a, b)

    def coroot_coords(self, a):
        """a_vee = c1 a1_vee + c2 a2_vee with integer (c1, c2)."""
        from fractions import Fraction
        av = tuple(Fraction(2 * x, dot(a, a)) for x in a)
        a1, a2 = self.simple
        a1v = tuple(Fraction(2 * x, dot(a1, a1)) for x in a1)
        a2v = tuple(Fraction(2 * x, dot(a2, a2)) for x in a2)
        for c1 in range(-6, 7):
            for c2 in range(-6, 7):
                if tuple(c1 * u + c2 * v for u, v in zip(a1v, a2v)) == av:
                    return (c1, c2)
        raise ValueError(a)

    def cartan_matrix(self):
        return [[self.pairing(b, a) for b in self.simple] for a in self.simple]

    def weyl_enumerate(self):
        """All Weyl group elements as permutation tuples of self.order."""
        def perm_of(refl_root):
            return tuple(self.index[self.reflect(refl_root, r)] for r in self.order)

        gens = [perm_of(a) for a in self.simple]
        ident = tuple(range(len(self.order)))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = tuple(g[i] for i in p)
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
            frontier = nxt
        return sorted(seen)

    # --- naming (CLI surface): roots as combinations of a1, a2 ---

    def root_name(self, r):
        c1, c2 = self.coords[r]
        terms = []
        for c, nm in ((c1, 'a1'), (c2, 'a2')):
            if c == 0:
                continue
            if c == 1:
                s = nm
            elif c == -1:
                s = '-' + nm
            else:
                s = '%d%s' % (c, nm)
            if terms and not s.startswith('-'):
                terms.append('+' + s)
            else:
                terms.append(s)
        return ''.join(terms)

    def parse_root(self, s):
        import re
        s = s.replace(' ', '')
        c = {1: 0, 2: 0}
        pos = 0
        for m in re.finditer(r'([+-]?\d*)a([12])', s):
            if m.start() != pos:
                raise ValueError('bad root %r' % s)
            pos = m.end()
            coef = m.group(1)
            if coef in ('', '+'):
                k = 1
            elif coef == '-':
                k = -1
            else:
                k = int(coef)
            c[int(m.group(2))] += k
        if pos != len(s) or pos == 0:
            raise ValueError('bad root %r' % s)
        return self.from_coords(c[1], c[2])


def build_root_system(name):
    return RootSystem(name)
