"""Golden comparisons of generator matrices against printed fixtures.

Each fixture file in fixtures/*.txt stores one printed matrix: a
`# paper: <location>` header, the size n, then n whitespace-separated rows of
canonical ring-element strings.  compare() rebuilds the committed group
element exactly and diffs it cell by cell against the stored matrix.

Two printed matrices need a committed reading before the diff is clean:

  b2_w_e1    the printed matrix is the twisted Weyl representative
             h_{a1+2a2}(-1) w_{a1+a2}(1) of this basis, not the bare
             w_{a1+a2}(1): printed rows 1-4 match the twisted form exactly,
             and the solved x_{a2} image commutes with the twisted form
             identically (the bare representative conjugates x_{a2}(t) to
             x_{a2}(-t) here -- a Chevalley sign convention the diagonal
             fixtures cannot see).  The residual 8-cell diff is a printed
             row garble plus a Cartan pair and fails invertibility sanity,
             so it is quarantined as a typo.
  g2_h_a2_2  the printed diagonal equals the computed h_{a2}(1/2), i.e. the
             inverse-parameter convention; committed as "matches under
             t -> 1/t" and compared against h_{a2}(1/2).

Remaining deviations are quarantined cell lists; a comparison fails iff the
observed mismatch set differs from the committed quarantine.  Printed-matrix
sanity (w^2 = h(-1), h(-1)^2 = 1, unipotence of x) is evaluated on the raw
fixture to justify every quarantine: each quarantined matrix must fail its
sanity identity, each clean one must pass.
"""

import os
from fractions import Fraction

from .. import make_ring
from ..groups import ChevalleyGroup
from ..linalg import mat_mul, bareiss_det

_DIR = os.path.join(os.path.dirname(__file__), 'fixtures')

# name -> (system, committed element word, sanity spec, quarantined cells,
#          reconciliation note or None)
FIXTURES = {
    'b2_w_e1me2': ('b2', ['w:a1:1'], ('w2', 'h:a1:-1'), (), None),
    'b2_w_e1': ('b2', ['h:a1+2a2:-1', 'w:a1+a2:1'], ('w2', 'h:a1+a2:-1'),
                ((5, 8), (5, 9), (6, 7), (6, 8), (7, 6), (7, 7),
                 (10, 9), (10, 10)),
                'printed matrix is the twisted representative '
                'h_{a1+2a2}(-1) w_{a1+a2}(1)'),
    'b2_w_e1pe2': ('b2', ['w:a1+2a2:1'], ('w2', 'h:a1+2a2:-1'), (), None),
    'b2_w_e2': ('b2', ['w:a2:1'], ('w2', 'h:a2:-1'),
                ((10, 9), (10, 10)), None),
    'b2_x_e2': ('b2', ['x:a2:1'], ('unipotent',), (), None),
    'b2_h_a1_m1': ('b2', ['h:a1:-1'], ('involution',), (), None),
    'b2_h_a2_m1': ('b2', ['h:a2:-1'], ('involution',), (), None),
    'g2_x_a1': ('g2', ['x:a1:1'], ('unipotent',), (), None),
    'g2_x_a2': ('g2', ['x:a2:1'], ('unipotent',), (), None),
    'g2_h_a1_m1': ('g2', ['h:a1:-1'], ('involution',), (), None),
    'g2_h_a2_m1': ('g2', ['h:a2:-1'], ('involution',), (), None),
    'g2_h_a2_2': ('g2', ['h:a2:1/2'], ('inverse-of', 'h:a2:2'), (),
                  'printed h_{a2}(2) matches the computed h_{a2}(1/2), '
                  'i.e. matches under t -> 1/t'),
}

DIAGONAL_FIXTURES = ('b2_h_a1_m1', 'b2_h_a2_m1', 'g2_h_a1_m1', 'g2_h_a2_m1')
G2_BLOCK_FIXTURES = ('g2_x_a1', 'g2_x_a2', 'g2_h_a2_2')


def load_fixture(name):
    """Return (paper location string, matrix of Fractions)."""
    with open(os.path.join(_DIR, name + '.txt')) as fh:
        lines = [ln.rstrip('\n') for ln in fh]
    header = [ln for ln in lines if ln.startswith('#')]
    body = [ln for ln in lines if ln and not ln.startswith('#')]
    loc = ''
    for ln in header:
        if ln.startswith('# paper:'):
            loc = ln[len('# paper:'):].strip()
    n = int(body[0])
    M = [[Fraction(v) for v in body[1 + i].split()] for i in range(n)]
    assert all(len(row) == n for row in M)
    return loc, M


def _group(system, ring=None):
    return ChevalleyGroup(system, ring if ring is not None else make_ring('zloc:5'))


def _elem(G, tokens):
    M = None
    for tok in tokens:
        E = G.eval_word(G.parse_element(tok))
        M = E if M is None else mat_mul(M, E)
    return M


def _as_frac(M):
    return [[Fraction(v) for v in row] for row in M]


def _eye(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _printed_sanity(G, spec, P):
    """Evaluate the sanity identity of the raw printed matrix."""
    n = len(P)
    if spec[0] == 'w2':
        want = _as_frac(G.eval_word(G.parse_element(spec[1])))
        return 'printed^2 = %s' % spec[1], mat_mul(P, P) == want
    if spec[0] == 'involution':
        return 'printed^2 = 1', mat_mul(P, P) == _eye(n)
    if spec[0] == 'inverse-of':
        want = _as_frac(G.eval_word(G.parse_element(spec[1])))
        return 'printed * %s = 1' % spec[1], mat_mul(P, want) == _eye(n)
    if spec[0] == 'unipotent':
        D = [[P[i][j] - Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        Q = mat_mul(mat_mul(D, D), mat_mul(D, D))
        zero = all(v == 0 for row in Q for v in row)
        return '(printed - 1)^4 = 0, det = 1', zero and bareiss_det(P) == 1
    raise ValueError(spec)


def compare(name, ring=None):
    """Diff one fixture against its committed element; full report dict."""
    system, tokens, sanity, quarantine, note = FIXTURES[name]
    loc, P = load_fixture(name)
    G = _group(system, ring)
    M = _as_frac(_elem(G, tokens))
    n = len(P)
    mism = [(i + 1, j + 1) for i in range(n) for j in range(n)
            if M[i][j] != P[i][j]]
    scheck, sok = _printed_sanity(G, sanity, P)
    status = 'exact' if not quarantine and note is None else 'reconciled'
    return {
        'name': name, 'paper': loc, 'system': system, 'element': tokens,
        'status': status, 'note': note,
        'mismatches': mism, 'quarantine': sorted(quarantine),
        'quarantine_match': mism == sorted(quarantine),
        'printed_sanity': scheck,
        'printed_sanity_holds': sok,
        'sanity_as_expected': sok == (not quarantine),
    }


def check_all(ring=None):
    """Compare every fixture; failures list is empty iff all diffs are clean.

    A fixture fails when its mismatch set differs from the committed
    quarantine, or when the raw printed matrix passes/fails its sanity
    identity contrary to expectation.
    """
    reports, failures = {}, []
    for name in FIXTURES:
        rep = compare(name, ring)
        reports[name] = rep
        if not (rep['quarantine_match'] and rep['sanity_as_expected']):
            failures.append(name)
    exact = [n for n, r in reports.items() if r['status'] == 'exact'
             and not r['mismatches']]
    return {
        'fixtures': reports, 'failures': failures,
        'exact': sorted(exact),
        'diagonals_exact': all(not reports[n]['mismatches']
                               for n in DIAGONAL_FIXTURES),
        'g2_block_exact': sum(1 for n in G2_BLOCK_FIXTURES
                              if not reports[n]['mismatches']),
    }
