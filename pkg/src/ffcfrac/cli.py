"""Command-line front end.

``run(argv)`` returns (exit_code, text) and never raises on user input:
0 on success, 1 on bad input (one ``error:`` line naming the flag), 2 when
an iteration budget runs out.  ``main`` wires it to stdout/stderr.
"""

import argparse
import csv
import io
import sys

from sympy import isprime

from . import errors
from .algebra import fq_ctx_make, parse_poly
from .cfe import DEFAULT_BUDGET, artin_step, cfe_expand, cfe_period, degree_stats
from .hecke import (CSV_HEADER, CylinderSpec, cylinder_measure, escape_table, hecke_walk_explore,
                    mass_constants, psi_preimage_mass, rows_to_csv)
from .laurent import lau_from_poly, lau_sqrt
from .natext import coding_window, first_return_time, natext_step, natext_unstep, pair_make
from .surd import parse_surd

COMMANDS = ('expand', 'period', 'hecke-scan', 'hecke-walk', 'natext-check',
            'cylinder', 'measure-constants', 'sqrt-series')


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _FlagError(Exception):
    def __init__(self, flag, err):
        super().__init__(f'{flag}: {err}')


def _parser():
    p = _Parser(prog='ffcfrac', description='Continued fractions over F_q((1/Y)).')
    sub = p.add_subparsers(dest='command', required=True, parser_class=_Parser)

    def cmd(name, help_, *flags):
        s = sub.add_parser(name, help=help_)
        s.add_argument('--q', type=int, required=True, help='odd prime field size')
        for f in flags:
            f(s)
        return s

    surd = lambda s: s.add_argument('--surd', required=True, help='surd literal A|B|C|S')
    P = lambda s: s.add_argument('--P', required=True, help='polynomial literal (ascending coefficients)')
    nmax = lambda s: s.add_argument('--nmax', type=int, default=6)
    bigN = lambda s: s.add_argument('--bigN', type=int, default=0)
    out = lambda s: s.add_argument('--out', help='CSV path (default: standard output)')
    seed = lambda s: s.add_argument('--seed', type=int, default=0)
    depth = lambda s: s.add_argument('--depth', type=int, default=3)
    steps = lambda s: s.add_argument('--steps', type=int, default=10)
    prec = lambda s: s.add_argument('--prec', type=int, default=8)

    def digits_int(s):
        s.add_argument('--digits', type=int, default=10, help='number of digits after a_0')

    def budget(s):
        s.add_argument('--budget', type=int, default=DEFAULT_BUDGET, help='state cap for period search')

    def workers(s):
        s.add_argument('--workers', type=int, default=1)

    cmd('expand', 'digits a_0..a_n', surd, digits_int)
    cmd('period', 'preperiod and minimal cycle', surd, budget)
    cmd('hecke-scan', 'degree-escape table along P^n f', surd, P, nmax, bigN, out, workers)
    cmd('hecke-walk', 'non-backtracking walk in the neighbour graph', surd, P, depth, seed, out)
    cmd('natext-check', 'natural-extension window and round trips', surd, steps)
    s = cmd('cylinder', 'Haar mass of a cylinder')
    s.add_argument('--digits', required=True, help='digit literals separated by ;')
    s = cmd('measure-constants', 'exact mass constants')
    s.add_argument('--steps', type=int, default=20, help='number of partial sums')
    cmd('sqrt-series', 'Laurent square root of a polynomial', P, prec)
    return p


def _field(q):
    if q < 3 or q % 2 == 0 or not isprime(q):
        raise _FlagError('--q', 'q must be an odd prime in CLI mode')
    return fq_ctx_make(q)


def _flag(flag, fn, *args):
    try:
        return fn(*args)
    except errors.FFCFError as e:
        raise _FlagError(flag, e)


def _surd(F, text):
    return _flag('--surd', parse_surd, F, text)


def _poly(F, text, flag='--P'):
    return _flag(flag, parse_poly, F, text)


def _fmt_list(xs):
    return '[' + ', '.join(str(x) for x in xs) + ']'


def _emit_csv(text, path):
    if path is None:
        return text
    with open(path, 'w', newline='') as fh:
        fh.write(text)
    return f'wrote {path}\n'


def _cmd_expand(F, a):
    if a.digits < 0:
        raise _FlagError('--digits', 'must be >= 0')
    ds = cfe_expand(_surd(F, a.surd), a.digits)
    return f'[{ds[0]}; ' + ', '.join(str(x) for x in ds[1:]) + ']\n' if len(ds) > 1 else f'[{ds[0]}]\n'


def _cmd_period(F, a):
    c = cfe_period(_surd(F, a.surd), a.budget)
    stats, _ = degree_stats(c)
    return f'pre={_fmt_list(c.preperiod)} cycle={_fmt_list(c.cycle)} ell={stats.ell} degs={_fmt_list(stats.degs)}\n'


def _cmd_hecke_scan(F, a):
    f, P = _surd(F, a.surd), _poly(F, a.P)
    if a.nmax < 0:
        raise _FlagError('--nmax', 'must be >= 0')
    if a.bigN < 0:
        raise _FlagError('--bigN', 'must be >= 0')
    rows = _flag('--P', escape_table, f, P, a.nmax, a.bigN, a.workers)
    return _emit_csv(rows_to_csv(rows), a.out)


def _cmd_hecke_walk(F, a):
    f, P = _surd(F, a.surd), _poly(F, a.P)
    if a.depth < 1:
        raise _FlagError('--depth', 'must be >= 1')
    walk = _flag('--P', hecke_walk_explore, f, P, a.depth, 'random', a.seed)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator='\n')
    w.writerow(CSV_HEADER + ('vertex',))
    for v, row in walk:
        w.writerow(row.csv_fields() + [v.literal()])
    return _emit_csv(buf.getvalue(), a.out)


def _cmd_natext(F, a):
    if a.steps < 1:
        raise _FlagError('--steps', 'must be >= 1')
    f = _surd(F, a.surd)
    p0 = _flag('--surd', pair_make, f)
    window = coding_window(p0, min(a.steps, 3))
    p, x, times, commutes = p0, p0.xi_plus, [], True
    for _ in range(a.steps):
        times.append(first_return_time(p))
        _, p = natext_step(p)
        _, x = artin_step(x)
        commutes = commutes and p.xi_plus == x
    back = p
    for _ in range(a.steps):
        _, back = natext_unstep(back)
    lines = [
        f'window={_fmt_list(window)}',
        f'return_times={_fmt_list(times)}',
        f'commutes={str(commutes).lower()}',
        f'roundtrip={str(back == p0).lower()}',
    ]
    return '\n'.join(lines) + '\n'


def _cmd_cylinder(F, a):
    ds = tuple(_poly(F, t.strip(), '--digits') for t in a.digits.split(';'))
    c = _flag('--digits', CylinderSpec, ds)
    return f'mass={cylinder_measure(c)}\npreimage_mass={psi_preimage_mass(c)}\n'


def _cmd_constants(F, a):
    m = mass_constants(F, cutoff=max(a.steps, 1))
    return '\n'.join([
        f'series={m.series}',
        f'closed_form={m.closed_form}',
        f'partial_{len(m.partial_sums)}={m.partial_sums[-1]}',
        f'paper_mass={m.paper_mass}',
        f'paper_F_mass={m.paper_F_mass}',
        f'derived_F_mass={m.derived_F_mass}',
        f'match={str(m.match).lower()}',
    ]) + '\n'


def _cmd_sqrt(F, a):
    P = _poly(F, a.P)
    if not P:
        raise _FlagError('--P', 'zero polynomial')
    val = -(P.deg // 2)
    if a.prec <= val:
        raise _FlagError('--prec', f'must exceed {val}')
    return str(_flag('--P', lau_sqrt, lau_from_poly(P), a.prec - val)) + '\n'


_HANDLERS = {
    'expand': _cmd_expand,
    'period': _cmd_period,
    'hecke-scan': _cmd_hecke_scan,
    'hecke-walk': _cmd_hecke_walk,
    'natext-check': _cmd_natext,
    'cylinder': _cmd_cylinder,
    'measure-constants': _cmd_constants,
    'sqrt-series': _cmd_sqrt,
}


def run(argv):
    try:
        a = _parser().parse_args(list(argv))
        F = _field(a.q)
        return 0, _HANDLERS[a.command](F, a)
    except _UsageError as e:
        return 1, f'error: {e}\n'
    except _FlagError as e:
        return 1, f'error: {e}\n'
    except errors.IterationBudgetExceeded as e:
        return 2, f'error: {e}\n'
    except errors.FFCFError as e:
        return 1, f'error: {e}\n'
    except OSError as e:
        return 1, f'error: --out: {e}\n'


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    if any(x in ('-h', '--help') for x in argv):
        try:
            _parser().parse_args(argv)
        except SystemExit as e:
            return e.code
    code, text = run(argv)
    (sys.stdout if code == 0 else sys.stderr).write(text)
    return code


if __name__ == '__main__':  # pragma: no cover
    sys.exit(main())
