"""Step registry for the replay pipeline.

Each step reruns one family of printed computations from scratch and returns
{step, status, details}; status is 'pass' iff the step's failure list is
empty.  det76 additionally carries the determinant as 'value', lemma2 carries
the expansion certificate summary as 'certificate'.
"""

from . import conditions, g2sanity, golden, lemma2, linsys, patterns

STEP_NAMES = ('golden', 'patterns', 'det76', 'lemma2', 'g2-sanity')


def _status(failures):
    return 'pass' if not failures else 'fail'


def _run_golden(ring=None):
    rep = golden.check_all(ring)
    details = {
        'fixtures': len(rep['fixtures']),
        'exact': rep['exact'],
        'reconciled': sorted(n for n, r in rep['fixtures'].items()
                             if r['status'] == 'reconciled'),
        'quarantined_cells': {n: r['mismatches']
                              for n, r in rep['fixtures'].items()
                              if r['mismatches']},
        'diagonals_exact': rep['diagonals_exact'],
        'g2_block_exact': rep['g2_block_exact'],
        'failures': rep['failures'],
    }
    return {'step': 'golden', 'status': _status(rep['failures']),
            'details': details}


def _run_patterns(ring=None):
    reps = patterns.check_all(ring)
    failures = [f for r in reps for f in r['failures']]
    return {'step': 'patterns', 'status': _status(failures),
            'details': {'reports': reps, 'failures': failures}}


def _run_det76(ring=None):
    rep = linsys.report(ring)
    out = {'step': 'det76', 'status': _status(rep['failures']),
           'details': rep}
    if abs(rep['det']) == linsys.DET_TARGET:
        out['value'] = '±2^36'
    return out


def _run_lemma2(ring=None):
    rep = lemma2.check(ring)
    details = {k: v for k, v in rep.items() if k != 'certificate'}
    return {'step': 'lemma2', 'status': _status(rep['failures']),
            'details': details, 'certificate': rep['certificate']}


def _run_g2_sanity(ring=None):
    rep = g2sanity.check(ring)
    return {'step': 'g2-sanity', 'status': _status(rep['failures']),
            'details': rep}


_STEPS = {
    'golden': _run_golden,
    'patterns': _run_patterns,
    'det76': _run_det76,
    'lemma2': _run_lemma2,
    'g2-sanity': _run_g2_sanity,
}


def run_step(step, ring=None):
    """Run one named step (or 'all'); returns the report dict.

    For 'all' the report aggregates every step under details['steps'].
    """
    if step == 'all':
        reports = [run_step(name, ring) for name in STEP_NAMES]
        status = 'pass' if all(r['status'] == 'pass' for r in reports) else 'fail'
        return {'step': 'all', 'status': status, 'details': {'steps': reports}}
    if step not in _STEPS:
        raise KeyError(step)
    return _STEPS[step](ring)
