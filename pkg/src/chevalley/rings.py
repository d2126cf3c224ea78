"""Exact arithmetic over the commutative rings the computations run in.

A Ring object is a handle: elements are plain Python values and all arithmetic
goes through the handle, so matrix code stays generic.  Descriptors:

    zmod:p^k   Z/p^k                       element: int in [0, p^k)
    zloc:p     Z localized at p            element: Fraction, denominator prime to p
    fp:p       prime field F_p             element: int in [0, p)
    dual:p     F_p[eps]/(eps^2)            element: (a, b) meaning a + b*eps
    gf:p^2     field F_{p^2}               element: (a, b) meaning a + b*s, s^2 = nonresidue
    jet:m      Z + span(y_1..y_m), y_i*y_j = 0   element: Jet (or bare int/Fraction)

Everything except jet:m is a local ring (unique maximal ideal J); jet:m is the
truncation ring used to linearize equations to first order.  Elements are kept
in canonical form, so matrices over a ring compare with plain ==.
"""

from fractions import Fraction


class Jet:
    """c + sum d[i]*y_i with y_i*y_j = 0; c and d-values int or Fraction."""

    __slots__ = ('c', 'd')

    def __init__(self, c=0, d=None):
        self.c = c
        self.d = d if d is not None else {}

    def __add__(self, other):
        if isinstance(other, Jet):
            d = dict(self.d)
            for k, v in other.d.items():
                w = d.get(k, 0) + v
                if w:
                    d[k] = w
                elif k in d:
                    del d[k]
            return Jet(self.c + other.c, d)
        return Jet(self.c + other, self.d)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.c, {k: -v for k, v in self.d.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet):
            # y_i * y_j = 0
            d = {}
            if other.c:
                for k, v in self.d.items():
                    d[k] = v * other.c
            if self.c:
                for k, v in other.d.items():
                    w = d.get(k, 0) + self.c * v
                    if w:
                        d[k] = w
                    elif k in d:
                        del d[k]
            return Jet(self.c * other.c, d)
        if other == 0:
            return Jet(0)
        return Jet(self.c * other, {k: v * other for k, v in self.d.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Jet):
            return self.c == other.c and self.d == other.d
        return not self.d and self.c == other

    def __hash__(self):
        return hash((self.c, tuple(sorted(self.d.items()))))

    def iszero(self):
        return self.c == 0 and not self.d

    def __repr__(self):
        if not self.d:
            return 'Jet(%r)' % (self.c,)
        terms = ' + '.join('%r*y%d' % (v, k) for k, v in sorted(self.d.items()))
        return 'Jet(%r, %s)' % (self.c, terms)


def _as_jet(a):
    return a if isinstance(a, Jet) else Jet(a)


class Ring:
    """Base handle.  Subclasses set .name, .kind, .is_local and element ops."""

    is_local = True
    char_hint = None  # residue characteristic, where meaningful

    def from_int(self, n):
        raise NotImplementedError

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def try_invert(self, a):
        """Inverse of a, or None if a is not a unit."""
        raise NotImplementedError

    def is_unit(self, a):
        return self.try_invert(a) is not None

    def iszero(self, a):
        return a == self.zero()

    def pow(self, a, k):
        if k < 0:
            inv = self.try_invert(a)
            if inv is None:
                raise ZeroDivisionError('negative power of non-unit in %s' % self.name)
            a, k = inv, -k
        out = self.one()
        for _ in range(k):
            out = self.mul(out, a)
        return out

    # --- local structure ---

    def residue_field(self):
        raise NotImplementedError

    def residue(self, a):
        """Image of a in the residue field."""
        raise NotImplementedError

    def in_radical(self, a):
        return self.residue_field().iszero(self.residue(a))

    # --- matrices: lists of lists of canonical elements ---

    def mat_mul(self, A, B):
        n, m, k = len(A), len(B[0]), len(B)
        add, mul, zero = self.add, self.mul, self.zero()
        out = []
        for i in range(n):
            Ai = A[i]
            row = []
            for j in range(m):
                acc = zero
                for t in range(k):
                    x = Ai[t]
                    if x != zero:
                        acc = add(acc, mul(x, B[t][j]))
                row.append(acc)
            out.append(row)
        return out

    def mat_id(self, n):
        z, o = self.zero(), self.one()
        return [[o if i == j else z for j in range(n)] for i in range(n)]

    def mat_from_int(self, M):
        return [[self.from_int(x) for x in row] for row in M]

    def mat_sub(self, A, B):
        return [[self.sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]

    def mat_inv(self, A):
        """Inverse over a local ring by Gauss elimination on unit pivots."""
        n = len(A)
        M = [list(row) + list(idr) for row, idr in zip(A, self.mat_id(n))]
        for c in range(n):
            piv = None
            for r in range(c, n):
                inv = self.try_invert(M[r][c])
                if inv is not None:
                    piv = (r, inv)
                    break
            if piv is None:
                raise ZeroDivisionError('no unit pivot in column %d' % c)
            r, inv = piv
            M[c], M[r] = M[r], M[c]
            M[c] = [self.mul(inv, x) for x in M[c]]
            for r2 in range(n):
                if r2 != c and not self.iszero(M[r2][c]):
                    f = M[r2][c]
                    M[r2] = [self.sub(x, self.mul(f, y)) for x, y in zip(M[r2], M[c])]
        return [row[n:] for row in M]

    def mat_reduce(self, A):
        k = self.residue_field()
        return [[self.residue(x) for x in row] for row in A]

    # --- formatting / parsing of elements (CLI surface) ---

    def fmt(self, a):
        return str(a)

    def parse(self, s):
        """Parse 'n' or 'p/q' (plus ring-specific forms like 'a+b*e')."""
        raise NotImplementedError

    def __repr__(self):
        return '<Ring %s>' % self.name


def _parse_rational(s):
    s = s.strip()
    if '/' in s:
        num, den = s.split('/')
        return Fraction(int(num), int(den))
    return Fraction(int(s))


class ZMod(Ring):
    kind = 'zmod'

    def __init__(self, p, k):
        self.p, self.k = p, k
        self.n = p ** k
        self.name = 'zmod:%d^%d' % (p, k)
        self.char_hint = p

    def from_int(self, n):
        return n % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def try_invert(self, a):
        try:
            return pow(a, -1, self.n)
        except ValueError:
            return None

    def residue_field(self):
        return Fp(self.p)

    def residue(self, a):
        return a % self.p

    def elements(self):
        return range(self.n)

    def rand(self, rng):
        return rng.randrange(self.n)

    def mat_mul(self, A, B):
        m, k, mod = len(B[0]), len(B), self.n
        return [[sum(Ai[t] * B[t][j] for t in range(k)) % mod for j in range(m)]
                for Ai in A]

    def parse(self, s):
        q = _parse_rational(s)
        inv = self.try_invert(q.denominator % self.n)
        if inv is None:
            raise ValueError('%s is not an element of %s' % (s, self.name))
        return (q.numerator * inv) % self.n


class Fp(ZMod):
    kind = 'fp'

    def __init__(self, p):
        ZMod.__init__(self, p, 1)
        self.name = 'fp:%d' % p

    def residue_field(self):
        return self

    def residue(self, a):
        return a


class ZLoc(Ring):
    """Z localized at p: fractions with denominator prime to p."""

    kind = 'zloc'

    def __init__(self, p):
        self.p = p
        self.name = 'zloc:%d' % p
        self.char_hint = p

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def contains(self, a):
        return a.denominator % self.p != 0

    def try_invert(self, a):
        if a == 0 or a.numerator % self.p == 0:
            return None
        return Fraction(1) / a

    def residue_field(self):
        return Fp(self.p)

    def residue(self, a):
        assert a.denominator % self.p != 0, a
        return a.numerator * pow(a.denominator, -1, self.p) % self.p

    def rand(self, rng):
        den = rng.choice([1, 1, 1, 2, 3, self.p + 1])
        while den % self.p == 0:
            den += 1
        return Fraction(rng.randrange(-9, 10), den)

    def mat_mul(self, A, B):
        n, m, k = len(A), len(B[0]), len(B)
        return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)]
                for i in range(n)]

    def parse(self, s):
        q = _parse_rational(s)
        if q.denominator % self.p == 0:
            raise ValueError('%s is not an element of %s' % (s, self.name))
        return q


class Dual(Ring):
    """F_p[eps]/(eps^2); element (a, b) = a + b*eps."""

    kind = 'dual'

    def __init__(self, p):
        self.p = p
        self.name = 'dual:%d' % p
        self.char_hint = p

    def from_int(self, n):
        return (n % self.p, 0)

    def eps(self):
        return (0, 1)

    def add(self, a, b):
        return ((a[0] + b[0]) % self.p, (a[1] + b[1]) % self.p)

    def neg(self, a):
        return ((-a[0]) % self.p, (-a[1]) % self.p)

    def mul(self, a, b):
        return (a[0] * b[0] % self.p, (a[0] * b[1] + a[1] * b[0]) % self.p)

    def try_invert(self, a):
        if a[0] % self.p == 0:
            return None
        i = pow(a[0], -1, self.p)
        return (i, (-a[1] * i * i) % self.p)

    def residue_field(self):
        return Fp(self.p)

    def residue(self, a):
        return a[0] % self.p

    def elements(self):
        return ((a, b) for a in range(self.p) for b in range(self.p))

    def rand(self, rng):
        return (rng.randrange(self.p), rng.randrange(self.p))

    def mat_mul(self, A, B):
        n, m, k, p = len(A), len(B[0]), len(B), self.p
        out = []
        for i in range(n):
            Ai = A[i]
            row = []
            for j in range(m):
                a0 = a1 = 0
                for t in range(k):
                    x0, x1 = Ai[t]
                    if x0 or x1:
                        y0, y1 = B[t][j]
                        a0 += x0 * y0
                        a1 += x0 * y1 + x1 * y0
                row.append((a0 % p, a1 % p))
            out.append(row)
        return out

    def fmt(self, a):
        return '%d+%d*e' % a

    def parse(self, s):
        if '*e' in s or '+e' in s:
            s2 = s.replace('+e', '+1*e')
            a, b = s2.split('+')
            return (int(a) % self.p, int(b[:-2]) % self.p)
        q = _parse_rational(s)
        inv = self.try_invert(self.from_int(q.denominator))
        if inv is None:
            raise ValueError('%s not in %s' % (s, self.name))
        return self.mul(self.from_int(q.numerator), inv)


def _least_nonresidue(p):
    res = {pow(a, 2, p) for a in range(1, p)}
    return next(n for n in range(2, p) if n % p not in res)


class GFp2(Ring):
    """F_{p^2} = F_p[s]/(s^2 - n), n the least quadratic nonresidue mod p."""

    kind = 'gf'

    def __init__(self, p):
        self.p = p
        self.nr = _least_nonresidue(p)
        self.name = 'gf:%d^2' % p
        self.char_hint = p

    def from_int(self, n):
        return (n % self.p, 0)

    def gen(self):
        return (0, 1)

    def add(self, a, b):
        return ((a[0] + b[0]) % self.p, (a[1] + b[1]) % self.p)

    def neg(self, a):
        return ((-a[0]) % self.p, (-a[1]) % self.p)

    def mul(self, a, b):
        return ((a[0] * b[0] + self.nr * a[1] * b[1]) % self.p,
                (a[0] * b[1] + a[1] * b[0]) % self.p)

    def try_invert(self, a):
        nrm = (a[0] * a[0] - self.nr * a[1] * a[1]) % self.p
        if nrm == 0:
            return None
        i = pow(nrm, -1, self.p)
        return (a[0] * i % self.p, (-a[1] * i) % self.p)

    def frobenius(self, a):
        """x -> x^p; on a + b*s this is a - b*s since s^(p-1) = nr^((p-1)/2) = -1."""
        return (a[0], (-a[1]) % self.p)

    def residue_field(self):
        return self

    def residue(self, a):
        return a

    def elements(self):
        return ((a, b) for a in range(self.p) for b in range(self.p))

    def rand(self, rng):
        return (rng.randrange(self.p), rng.randrange(self.p))

    def fmt(self, a):
        return '%d+%d*s' % a

    def parse(self, s):
        if '*s' in s:
            a, b = s.split('+')
            return (int(a) % self.p, int(b[:-2]) % self.p)
        return self.from_int(int(s))


class JetRing(Ring):
    """Z + span(y_1..y_m) with y_i*y_j = 0; not local (units need constant +-1)."""

    kind = 'jet'
    is_local = False

    def __init__(self, m):
        self.m = m
        self.name = 'jet:%d' % m

    def from_int(self, n):
        return Jet(n)

    def y(self, i):
        """The i-th infinitesimal, 1-based."""
        assert 1 <= i <= self.m
        return Jet(0, {i: 1})

    def add(self, a, b):
        return _as_jet(a) + b

    def neg(self, a):
        return -_as_jet(a)

    def mul(self, a, b):
        return _as_jet(a) * b

    def try_invert(self, a):
        a = _as_jet(a)
        if a.c in (1, -1):
            ci = a.c
        elif a.c != 0:
            ci = Fraction(1, 1) / a.c
        else:
            return None
        return Jet(ci, {k: -ci * ci * v for k, v in a.d.items()})

    def iszero(self, a):
        return _as_jet(a).iszero()

    def linear_coeffs(self, a):
        """(constant, [coeff of y_1, ..., coeff of y_m])."""
        a = _as_jet(a)
        return a.c, [a.d.get(i, 0) for i in range(1, self.m + 1)]

    def constant_part(self, a):
        return _as_jet(a).c

    def rand(self, rng):
        d = {rng.randrange(1, self.m + 1): rng.randrange(-3, 4) for _ in range(2)}
        return Jet(rng.randrange(-4, 5), {k: v for k, v in d.items() if v})

    # matrices over the jet ring: entries may be bare ints (constant jets)

    def mat_mul(self, A, B):
        n, m, k = len(A), len(B[0]), len(B)
        out = []
        for i in range(n):
            Ai = A[i]
            row = []
            for j in range(m):
                acc = 0
                for t in range(k):
                    x = Ai[t]
                    if isinstance(x, Jet):
                        if x.c or x.d:
                            acc = x * B[t][j] + acc
                    elif x:
                        acc = x * _as_jet(B[t][j]) + acc if isinstance(B[t][j], Jet) \
                            else x * B[t][j] + acc
                row.append(acc if isinstance(acc, Jet) else Jet(acc))
            out.append(row)
        return out

    def mat_inv(self, A):
        """(X0 + E)^-1 = X0^-1 - X0^-1 E X0^-1 when E has square zero."""
        n = len(A)
        X0 = [[_as_jet(x).c for x in row] for row in A]
        from . import linalg
        X0i = linalg.mat_inv_exact(X0)
        E = [[Jet(0, dict(_as_jet(A[i][j]).d)) for j in range(n)] for i in range(n)]
        X0iE = self.mat_mul(self.mat_from_int_like(X0i), E)
        corr = self.mat_mul(X0iE, self.mat_from_int_like(X0i))
        return [[Jet(X0i[i][j]) - corr[i][j] for j in range(n)] for i in range(n)]

    def mat_from_int_like(self, M):
        return [[Jet(x) for x in row] for row in M]

    def parse(self, s):
        return Jet(_parse_rational(s))

    def fmt(self, a):
        return repr(_as_jet(a))


def make_ring(desc):
    """Build a ring from a descriptor string like 'zmod:5^2' or 'zloc:5'."""
    try:
        kind, arg = desc.split(':')
    except ValueError:
        raise ValueError('bad ring descriptor %r' % desc)
    if kind == 'zmod':
        if '^' in arg:
            p, k = arg.split('^')
            p, k = int(p), int(k)
        else:
            p, k = int(arg), 1
        _check_prime(p)
        return ZMod(p, k)
    if kind == 'zloc':
        p = int(arg)
        _check_prime(p)
        return ZLoc(p)
    if kind == 'fp':
        p = int(arg)
        _check_prime(p)
        return Fp(p)
    if kind == 'dual':
        p = int(arg)
        _check_prime(p)
        return Dual(p)
    if kind == 'gf':
        if not arg.endswith('^2'):
            raise ValueError('only quadratic extensions: gf:p^2, got %r' % desc)
        p = int(arg[:-2])
        _check_prime(p)
        return GFp2(p)
    if kind == 'jet':
        return JetRing(int(arg))
    raise ValueError('unknown ring kind %r' % kind)


def _check_prime(p):
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError('%d is not prime' % p)


def sum_of_two_units(R, a):
    """(u, v) with u + v = a, both units.  Needs 2 a unit (odd residue char)."""
    cands = [R.one(), R.neg(R.one())]
    cands += [R.from_int(n) for n in range(2, 12)]
    if hasattr(R, 'eps'):
        cands.append(R.add(R.one(), R.eps()))
    if hasattr(R, 'gen'):
        cands.append(R.add(R.one(), R.gen()))
    for u in cands:
        if R.is_unit(u):
            v = R.sub(a, u)
            if R.is_unit(v):
                return u, v
    raise ArithmeticError('no decomposition of %r in %s' % (a, R.name))
