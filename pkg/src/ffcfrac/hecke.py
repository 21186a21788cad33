"""Hecke neighbours of quadratic irrationals, degree-escape scans, and the
measures attached to Psi-cycles.

The P-Hecke correspondence acts on points as
    f -> P f   and   f -> (f + b)/P  for deg b < deg P,
giving q^deg(P) + 1 neighbours.  Two surds define the same point of the
quotient by PGL_2(R) exactly when their Psi-cycles agree after scaling by a
unit, which is what ``gamma_key`` encodes.
"""

import csv
import io
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import errors
from .algebra import Fq, poly_is_irreducible, polys_below
from .cfe import cfe_period, cfe_reduce, degree_stats
from .natext import AtomicMeasure
from .surd import Moebius, surd_moebius

__all__ = [
    'HeckeRow', 'CylinderSpec', 'MassConstants', 'hecke_neighbors', 'hecke_ray',
    'escape_table', 'escape_row', 'rows_to_csv', 'rows_from_csv',
    'hecke_walk_explore', 'gamma_key', 'nu_f', 'nu_lower_bound',
    'cylinder_measure', 'psi_preimage_mass', 'mass_constants', 'CSV_HEADER',
]

CSV_HEADER = ('n', 'period_len', 'sum_deg', 'max_deg', 'ratio_N', 'lambda', 'height', 'hist')


def _check_P(P):
    if P.deg < 1 or not poly_is_irreducible(P):
        raise errors.ReducibleP(f'{P} is not irreducible')


def hecke_neighbors(f, P):
    """[P f] + [(f + b)/P for b of degree < deg P], zero b first."""
    _check_P(P)
    F = f.ctx
    out = [surd_moebius(Moebius.diag(P, F.one), f)]
    for b in polys_below(F, P.deg):
        out.append(surd_moebius(Moebius(F.one, b, F.zero, P), f))
    return out


def _power_multiple(f, P, n):
    return surd_moebius(Moebius.diag(P ** n, f.ctx.one), f) if n else f


def hecke_ray(f, P, n_max):
    """Cycle entries of f, P f, ..., P^n_max f."""
    _check_P(P)
    if n_max < 0:
        raise ValueError('n_max must be >= 0')
    return [cfe_reduce(_power_multiple(f, P, n))[1] for n in range(n_max + 1)]


@dataclass(frozen=True)
class HeckeRow:
    n: int
    ell: int
    sum_deg: int
    max_deg: int
    ratio: Fraction  # (max_deg - N)/sum_deg
    lambda_: int
    height: int
    hist: tuple  # ((deg, count), ...) ascending

    def csv_fields(self):
        h = ';'.join(f'{d}:{c}' for d, c in self.hist)
        return [str(self.n), str(self.ell), str(self.sum_deg), str(self.max_deg),
                str(self.ratio), str(self.lambda_), str(self.height), h]


def _row(n, g, N):
    stats, ratio = degree_stats(cfe_period(g), N)
    return HeckeRow(n, stats.ell, stats.sum_deg, stats.max_deg, ratio,
                    stats.lambda_, stats.max_deg, tuple(stats.hist.items()))


def escape_row(f, P, n, N=0):
    return _row(n, _power_multiple(f, P, n), N)


def _escape_job(args):
    return escape_row(*args)


def escape_table(f, P, n_max, N=0, workers=None):
    """One HeckeRow per n = 0..n_max for P^n f.

    With ``workers`` > 1 the rows are computed in a process pool; the result
    is in index order either way.
    """
    _check_P(P)
    if n_max < 0 or N < 0:
        raise ValueError('n_max and N must be >= 0')
    jobs = [(f, P, n, N) for n in range(n_max + 1)]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(_escape_job, jobs))
    return [_escape_job(j) for j in jobs]


def rows_to_csv(rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator='\n')
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(r.csv_fields())
    return buf.getvalue()


def rows_from_csv(text):
    rd = csv.reader(io.StringIO(text))
    header = next(rd)
    if tuple(header) != CSV_HEADER:
        raise errors.ParseError(f'unexpected CSV header {header}')
    rows = []
    for rec in rd:
        n, ell, s, m, ratio, lam, h, hist = rec
        pairs = tuple(tuple(int(x) for x in item.split(':')) for item in hist.split(';') if item)
        rows.append(HeckeRow(int(n), int(ell), int(s), int(m), Fraction(ratio), int(lam), int(h), pairs))
    return rows


def gamma_key(f):
    """Complete invariant of f modulo PGL_2(R): its Psi-cycle up to units."""
    F = f.ctx
    pts = cfe_period(f).cycle_points()
    return frozenset(s * Fq(F, u) for s in pts for u in F.units())


def hecke_walk_explore(f, P, depth, chooser='random', seed=0):
    """Non-backtracking walk of ``depth`` steps in the neighbour graph.

    ``chooser`` is 'multiply' (always P*v), 'random' (seeded uniform choice)
    or a callable (rng, candidates, step) -> index.  The branch leading back
    to the previous vertex is never offered.  Returns [(vertex, row)] with
    the vertex unreduced, so adjacency can be re-checked directly.
    """
    _check_P(P)
    if depth < 1:
        raise ValueError('depth must be >= 1')
    rng = random.Random(seed)
    out = []
    v, came_by = f, None  # came_by: ('mul',) or ('div', b)
    for step in range(1, depth + 1):
        nbrs = hecke_neighbors(v, P)
        F = v.ctx
        bs = list(polys_below(F, P.deg))
        labels = [('mul',)] + [('div', b) for b in bs]
        if came_by == ('mul',):
            back = 1  # (v + 0)/P undoes the multiplication
        elif came_by is not None:
            back = 0  # P v = u + b, the translate of the predecessor
        else:
            back = None
        cand = [i for i in range(len(nbrs)) if i != back]
        if chooser == 'multiply':
            i = 0
        elif chooser == 'random':
            i = cand[rng.randrange(len(cand))]
        elif callable(chooser):
            i = cand[chooser(rng, [nbrs[j] for j in cand], step)]
        else:
            raise ValueError(f'unknown chooser {chooser!r}')
        v, came_by = nbrs[i], labels[i]
        out.append((v, _row(step, v, 0)))
    return out


def nu_f(f):
    """Equiprobability on the Psi-cycle of {f}."""
    pts = cfe_period(f).cycle_points()
    w = Fraction(1, len(pts))
    return AtomicMeasure({s: w for s in pts})


def nu_lower_bound(nu, nu_target):
    """Largest c with nu >= c * nu_target."""
    if not len(nu_target):
        raise ValueError('empty target measure')
    return min(nu[x] / w for x, w in nu_target.items())


@dataclass(frozen=True)
class CylinderSpec:
    digits: tuple

    def __post_init__(self):
        if not self.digits:
            raise ValueError('a cylinder needs at least one digit')
        for a in self.digits:
            if a.deg < 1:
                raise errors.ConstantDigit(f'digit {a} is constant')


def cylinder_measure(c):
    """Normalized Haar mass of {f in M : a_1(f), ..., a_k(f) = digits}.

    Inversion sends a + M onto a ball of relative mass q^(-2 deg a), and the
    masses multiply along the digits.
    """
    if not isinstance(c, CylinderSpec):
        c = CylinderSpec(tuple(c))
    q = c.digits[0].ctx.q
    return Fraction(1, q ** (2 * sum(a.deg for a in c.digits)))


def psi_preimage_mass(c, enum_deg=2):
    """Mass of Psi^-1(c) = sum over all nonconstant b of mass([b] + c).

    Digits b of degree <= enum_deg are enumerated; the remaining degrees
    contribute the geometric tail sum_{n > enum_deg} (q-1) q^n q^(-2n) mass(c).
    """
    if not isinstance(c, CylinderSpec):
        c = CylinderSpec(tuple(c))
    F = c.digits[0].ctx
    q = F.q
    total = Fraction(0)
    for b in polys_below(F, enum_deg + 1):
        if b.deg >= 1:
            total += cylinder_measure(CylinderSpec((b,) + c.digits))
    r = Fraction(1, q)
    tail = (q - 1) * r ** (enum_deg + 1) / (1 - r)
    return total + tail * cylinder_measure(c)


@dataclass(frozen=True)
class MassConstants:
    q: int
    series: Fraction
    closed_form: Fraction
    partial_sums: tuple
    paper_mass: Fraction
    paper_F_mass: Fraction
    derived_F_mass: Fraction
    match: bool


def mass_constants(ctx_or_q, cutoff=20):
    """Sum of ((q-1)^2/(2q)) * sum_{n>=1} (q-1) q^n / q^(4n), exactly.

    The series is geometric with ratio q^-3.  The printed constants
    q^3 (q-1)^2 / (2(q^2+q+1)) and q^4 (q-1)^2 / (2(q^2+q+1)) are reported
    next to it, and ``match`` compares the summed value with the first one.
    """
    q = ctx_or_q if isinstance(ctx_or_q, int) else ctx_or_q.q
    pre = Fraction((q - 1) ** 2, 2 * q)
    r = Fraction(1, q ** 3)
    series = pre * (q - 1) * r / (1 - r)
    closed = Fraction((q - 1) ** 2, 2 * q * (q * q + q + 1))
    partial, acc = [], Fraction(0)
    for n in range(1, cutoff + 1):
        acc += pre * Fraction((q - 1) * q ** n, q ** (4 * n))
        partial.append(acc)
    printed = Fraction(q ** 3 * (q - 1) ** 2, 2 * (q * q + q + 1))
    printed_F = Fraction(q ** 4 * (q - 1) ** 2, 2 * (q * q + q + 1))
    return MassConstants(q, series, closed, tuple(partial), printed, printed_F, q * series, series == printed)
