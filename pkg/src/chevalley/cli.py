"""Command line for group generation, relation checks, splitting,
automorphism verification and proof replay.

Exit codes: 0 all checks pass, 1 some check failed, 2 usage error (unknown
descriptor, malformed element, or a system/ring combination that violates
the invertibility hypotheses, e.g. g2 over a ring without 1/3).
"""

import argparse
import json
import random
import sys
from fractions import Fraction

from . import make_ring
from .groups import ChevalleyGroup, check_steinberg
from .replay.runner import STEP_NAMES, run_step
from . import autos, involution


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


def _emit(args, payload, text_lines):
    if args.format == 'json':
        print(json.dumps(_jsonable(payload), sort_keys=True, ensure_ascii=False))
    else:
        for line in text_lines:
            print(line)


def _group(args):
    return ChevalleyGroup(args.system, make_ring(args.ring))


def _fmt_matrix(R, M):
    return [[R.fmt(v) for v in row] for row in M]


def cmd_roots(args):
    from .roots import RootSystem
    rs = RootSystem(args.system)
    names = [rs.root_name(r) for r in rs.order]
    payload = {'system': args.system, 'order': names,
               'positive': [rs.root_name(r) for r in rs.order if rs.ispos(r)],
               'dimension': rs.n}
    lines = ['%s roots (basis order):' % args.system]
    lines += ['  %2d  %s' % (i + 1, nm) for i, nm in enumerate(names)]
    lines.append('adjoint dimension %d' % rs.n)
    _emit(args, payload, lines)
    return 0


def cmd_constants(args):
    from .roots import RootSystem, vadd
    from .algebra import NTable
    rs = RootSystem(args.system)
    nt = NTable(rs)
    table = []
    for a in rs.order:
        for b in rs.order:
            if rs.is_root(vadd(a, b)):
                table.append({'a': rs.root_name(a), 'b': rs.root_name(b),
                              'n': nt.N(a, b)})
    payload = {'system': args.system, 'n_table': table}
    lines = ['N[%s, %s] = %d' % (e['a'], e['b'], e['n']) for e in table]
    _emit(args, payload, lines)
    return 0


def cmd_gen(args):
    G = _group(args)
    M = G.eval_word(G.parse_element(args.elem))
    rows = _fmt_matrix(G.R, M)
    payload = {'system': args.system, 'ring': args.ring, 'elem': args.elem,
               'matrix': rows}
    lines = ['%s over %s:' % (args.elem, args.ring)]
    width = max(len(v) for row in rows for v in row)
    lines += ['  ' + ' '.join(v.rjust(width) for v in row) for row in rows]
    _emit(args, payload, lines)
    return 0


def cmd_relations(args):
    ring = make_ring(args.ring)
    rng = random.Random(args.seed)
    rep = check_steinberg(args.system, ring, rng, draws=args.samples)
    failures = [{'relation': name, 'roots': [str(r) for r in ctx]}
                for name, ctx in rep['failures']]
    payload = {'system': args.system, 'ring': args.ring, 'seed': args.seed,
               'checks': rep['checks'], 'failures': failures,
               'status': 'pass' if not failures else 'fail'}
    lines = ['R1-R6 on %s over %s: %d checks, %d failures'
             % (args.system, args.ring, rep['checks'], len(failures))]
    lines += ['  FAIL %s at %s' % (f['relation'], f['roots']) for f in failures]
    _emit(args, payload, lines)
    return 0 if not failures else 1


def cmd_split(args):
    G = _group(args)
    a = G.eval_word(G.parse_element(args.elem))
    try:
        sp = involution.split_module(G.R, a)
    except involution.NotInvolution as ex:
        raise UsageError(str(ex))
    oracle = involution.residue_ranks(G.R, a)
    ok = sp.ranks() == oracle
    payload = {'system': args.system, 'ring': args.ring, 'elem': args.elem,
               'rank0': sp.rank0, 'rank1': sp.rank1,
               'residue_ranks': list(oracle),
               'status': 'pass' if ok else 'fail'}
    lines = ['split of %s over %s: ranks (%d, %d), residue oracle (%d, %d)'
             % (args.elem, args.ring, sp.rank0, sp.rank1, oracle[0], oracle[1])]
    _emit(args, payload, lines)
    return 0 if ok else 1


def _parse_auto_spec(G, spec):
    R = G.R
    factors = []
    for f in spec.get('factors', []):
        kind = f.get('kind')
        if kind == 'ring':
            factors.append(('ring', f['desc']))
        elif kind == 'inner':
            if 'word' in f:
                factors.append(('inner', ('word', list(f['word']))))
            else:
                M = [[R.parse(v) for v in row] for row in f['matrix']]
                factors.append(('inner', ('matrix', M)))
        elif kind == 'central':
            tau = {tok: R.parse(v) for tok, v in f['values'].items()}
            factors.append(('central', tau))
        else:
            raise UsageError('unknown factor kind %r' % kind)
    return factors


def cmd_autocheck(args):
    try:
        spec = json.loads(args.spec)
    except json.JSONDecodeError as ex:
        raise UsageError('bad spec json: %s' % ex)
    system = spec.get('system', args.system)
    ringdesc = spec.get('ring', args.ring)
    G = ChevalleyGroup(system, make_ring(ringdesc))
    factors = _parse_auto_spec(G, spec)
    rng = random.Random(args.seed)
    rep = autos.verify_automorphism(G, factors, rng)
    payload = {'system': system, 'ring': ringdesc, 'seed': args.seed,
               'status': rep['status'],
               'checks': [{'name': n, 'ok': ok} for n, ok in rep['checks']],
               'failures': rep['failures']}
    lines = ['autocheck %s over %s: %s' % (system, ringdesc, rep['status'])]
    lines += ['  %-42s %s' % (n, 'ok' if ok else 'FAIL')
              for n, ok in rep['checks']]
    _emit(args, payload, lines)
    return 0 if rep['status'] == 'pass' else 1


def cmd_replay(args):
    rep = run_step(args.step)
    if args.step == 'all':
        lines = ['replay all: %s' % rep['status']]
        lines += ['  %-10s %s' % (r['step'], r['status'])
                  for r in rep['details']['steps']]
    else:
        lines = ['replay %s: %s' % (rep['step'], rep['status'])]
        if 'value' in rep:
            lines.append('  value %s' % rep['value'])
        det = rep['details']
        if 'failures' in det and det['failures']:
            lines += ['  FAIL %s' % f for f in det['failures']]
    _emit(args, rep, lines)
    return 0 if rep['status'] == 'pass' else 1


class UsageError(Exception):
    pass


def _add_common(sp, ring_default=None, system=True):
    if system:
        sp.add_argument('--system', choices=('b2', 'g2'), default='b2')
    if ring_default is not None:
        sp.add_argument('--ring', default=ring_default)
    sp.add_argument('--format', choices=('text', 'json'), default='text')
    sp.add_argument('--json', dest='format', action='store_const',
                    const='json', help='shorthand for --format json')
    sp.add_argument('--seed', type=int, default=0)


def build_parser():
    ap = argparse.ArgumentParser(
        prog='chevalley',
        description='exact adjoint Chevalley groups of types B2/G2 over '
                    'local rings, with replay of the printed computations')
    sub = ap.add_subparsers(dest='cmd', required=True)

    sp = sub.add_parser('roots', help='ordered root list')
    _add_common(sp)
    sp.set_defaults(fn=cmd_roots)

    sp = sub.add_parser('constants', help='structure constant table')
    _add_common(sp)
    sp.set_defaults(fn=cmd_constants)

    sp = sub.add_parser('gen', help='matrix of one generator word')
    _add_common(sp, ring_default='zloc:5')
    sp.add_argument('--elem', required=True,
                    help='x|w|h:<root>:<t>, e.g. h:a1:-1 or x:a1+2a2:1/2')
    sp.set_defaults(fn=cmd_gen)

    sp = sub.add_parser('relations', help='check R1-R6 on random draws')
    _add_common(sp, ring_default='zmod:5^2')
    sp.add_argument('--samples', type=int, default=100)
    sp.set_defaults(fn=cmd_relations)

    sp = sub.add_parser('split', help='involution splitting ranks')
    _add_common(sp, ring_default='zmod:5^2')
    sp.add_argument('--elem', required=True)
    sp.set_defaults(fn=cmd_split)

    sp = sub.add_parser('autocheck', help='verify a standard-automorphism spec')
    _add_common(sp, ring_default='fp:7')
    sp.add_argument('--spec', required=True,
                    help='json: {"factors": [{"kind": "ring", "desc": '
                         '"frobenius"}, ...]}; system/ring may be overridden '
                         'inside the json')
    sp.set_defaults(fn=cmd_autocheck)

    sp = sub.add_parser('replay', help='rerun the printed computations')
    sp.add_argument('--step', choices=STEP_NAMES + ('all',), default='all')
    sp.add_argument('--format', choices=('text', 'json'), default='text')
    sp.add_argument('--json', dest='format', action='store_const', const='json')
    sp.set_defaults(fn=cmd_replay)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, ValueError, KeyError) as ex:
        print('error: %s' % ex, file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
