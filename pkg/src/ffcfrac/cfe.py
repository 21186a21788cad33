"""Continued fractions of quadratic irrationals under the Artin map.

For f in M (v_inf(f) >= 1) the Artin map is Psi(f) = {1/f}, and the digits
a_n = [1/Psi^(n-1)({f})] are nonconstant polynomials for n >= 1.

Exact orbits run on the integral surd recursion.  A point of M is stored as
(P + sqrt(D))/Q with Q | D - P^2, where sqrt(D) = B0*sqrt(S) is a fixed
branch and r = [sqrt(D)].  One Artin step is

    P1 = -P,  Q1 = (D - P1^2)/Q,  a = (P1 + r) div Q1,  P' = P1 - a*Q1,

with the new state (P', Q1).  D never changes, so for fixed D there are
finitely many states and the first repeated state closes the period.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import errors
from .algebra import Poly
from .surd import Moebius, Surd, poly_part_of_sqrt_multiple, quad, \
    surd_canonicalize, surd_integral_part, surd_moebius, surd_vinf

DEFAULT_BUDGET = 10 ** 6

__all__ = [
    'DEFAULT_BUDGET', 'CfeState', 'PeriodicCfe', 'DegreeStats', 'artin_step',
    'cfe_expand', 'cfe_period', 'cfe_reduce', 'convergents', 'degree_stats',
    'cfe_from_digits', 'surd_state', 'minimal_period',
]


@dataclass(frozen=True)
class CfeState:
    """(P + sqrt(D))/Q with sqrt(D) = B0*sqrt(S); ``digit`` is [1/x] at x."""

    P: Poly
    Q: Poly
    D: Poly
    B0: Poly
    S: Poly
    digit: Poly = None

    def point(self):
        return quad(self.P, self.B0, self.Q, self.S)


def surd_state(f):
    """State (P, Q, B0) for f with Q | B0^2 S - P^2.

    When C does not divide B^2 S - A^2, numerator and denominator are
    multiplied by C.
    """
    A, B, C, S = f.A, f.B, f.C, f.S
    if not (B * B * S - A * A) % C:
        return A, C, B
    return A * C, C * C, B * C


def artin_step(f):
    """(digit, Psi(f)) = ([1/f], {1/f}) for f in M, in exact surd arithmetic."""
    if surd_vinf(f) < 1:
        raise errors.NotInM(f'v_inf = {surd_vinf(f)} < 1: {f} is not in M')
    inv = f.inverse()
    a = surd_integral_part(inv)
    return a, inv - a


def _state_digits(f, n):
    """a_1..a_n of f in M by the integral recursion in Python."""
    P, Q, B0 = surd_state(f)
    D = B0 * B0 * f.S
    r = poly_part_of_sqrt_multiple(B0, f.S)
    out = []
    for _ in range(n):
        P1 = -P
        Q1, rem = divmod(D - P1 * P1, Q)
        if rem:  # pragma: no cover - the recursion keeps Q | D - P^2
            raise ArithmeticError('state invariant Q | D - P^2 violated')
        a = (P1 + r) // Q1
        out.append(a)
        P, Q = P1 - a * Q1, Q1
    return out


def cfe_expand(f, n, method='state'):
    """[a_0; a_1, ..., a_n].

    ``method='surd'`` iterates artin_step on surd objects; ``'state'`` runs
    the integral recursion, which is much faster and gives the same digits.
    """
    if n < 0:
        raise ValueError('n must be >= 0')
    a0 = surd_integral_part(f)
    x = f - a0
    if method == 'surd':
        out = [a0]
        for _ in range(n):
            a, x = artin_step(x)
            out.append(a)
        return out
    if method != 'state':
        raise ValueError(f'unknown method {method!r}')
    return [a0] + _state_digits(x, n)


def minimal_period(seq):
    """Smallest p dividing len(seq) with seq equal to its rotation by p."""
    L = len(seq)
    pi = [0] * L
    for i in range(1, L):
        k = pi[i - 1]
        while k and seq[i] != seq[k]:
            k = pi[k - 1]
        if seq[i] == seq[k]:
            k += 1
        pi[i] = k
    p = L - pi[-1] if L else 0
    return p if p and L % p == 0 else L


@dataclass(frozen=True)
class PeriodicCfe:
    """Eventually periodic expansion [a_0, ..., a_{k-1}, (cycle)].

    ``preperiod`` always holds a_0.  ``k`` counts the Artin steps from {f}
    to the first point of the cycle, so len(preperiod) == k + 1.
    ``purely_periodic`` says whether {f} itself lies on the cycle.
    """

    preperiod: tuple
    cycle: tuple
    cycle_entry: Surd
    k: int
    _states: tuple = field(repr=False, compare=False, default=())
    _B0: Poly = field(repr=False, compare=False, default=None)

    @property
    def ell(self):
        return len(self.cycle)

    @property
    def purely_periodic(self):
        return self.k == 0

    def cycle_points(self):
        """The ell distinct surds Psi^k({f}), ..., Psi^(k+ell-1)({f})."""
        S = self.cycle_entry.S
        return [quad(P, self._B0, Q, S) for P, Q in self._states]

    def digits(self, n):
        """a_0..a_n read off the stored pattern."""
        pre, cyc = self.preperiod, self.cycle
        return [pre[i] if i < len(pre) else cyc[(i - len(pre)) % len(cyc)] for i in range(n + 1)]


def cfe_period(f, budget=DEFAULT_BUDGET):
    """Preperiod, minimal cycle and cycle entry of f's expansion."""
    F = f.ctx
    a0 = surd_integral_part(f)
    x = f - a0
    P, Q, B0 = surd_state(x)
    S = x.S
    D = B0 * B0 * S
    r = poly_part_of_sqrt_multiple(B0, S)
    Ps, Qs, digs, start = F.ops.artin_orbit(list(P.c), list(Q.c), list(D.c), list(r.c), budget)
    if start < 0:
        raise errors.IterationBudgetExceeded(f'no period within {budget} states')
    digits = [Poly._raw(F, tuple(d)) for d in digs]
    cyc = digits[start:]
    ell = minimal_period([d.c for d in cyc])
    states = tuple((Poly._raw(F, tuple(Ps[i])), Poly._raw(F, tuple(Qs[i])))
                   for i in range(start, start + ell))
    entry = quad(states[0][0], B0, states[0][1], S)
    return PeriodicCfe(
        preperiod=tuple([a0] + digits[:start]),
        cycle=tuple(cyc[:ell]),
        cycle_entry=entry,
        k=start,
        _states=states,
        _B0=B0,
    )


def cfe_reduce(f, budget=DEFAULT_BUDGET):
    """(k, g): g is the first Psi-iterate of {f} on the cycle, after k steps."""
    c = cfe_period(f, budget)
    return c.k, c.cycle_entry


def _convergent_pairs(digits):
    F = digits[0].ctx
    p2, p1 = F.zero, F.one
    q2, q1 = F.one, F.zero
    out = []
    for a in digits:
        p2, p1 = p1, a * p1 + p2
        q2, q1 = q1, a * q1 + q2
        out.append((p1, q1))
    return out


def convergents(f, n):
    """(p_i, q_i) for i = 0..n from p_i = a_i p_{i-1} + p_{i-2} (same for q)."""
    return _convergent_pairs(cfe_expand(f, n))


@dataclass(frozen=True)
class DegreeStats:
    ell: int
    degs: tuple
    sum_deg: int
    max_deg: int
    lambda_: int  # 2 * sum_deg

    @property
    def hist(self):
        h = {}
        for d in self.degs:
            h[d] = h.get(d, 0) + 1
        return dict(sorted(h.items()))


def degree_stats(c, N=0):
    """(stats, (max_deg - N)/sum_deg) for the cycle of ``c``."""
    if N < 0:
        raise ValueError('N must be >= 0')
    degs = tuple(a.deg for a in c.cycle)
    s, m = sum(degs), max(degs)
    return DegreeStats(len(degs), degs, s, m, 2 * s), Fraction(m - N, s)


def _matrix_of(digits, ctx):
    M = Moebius.identity(ctx)
    for a in digits:
        M = M @ Moebius(a, ctx.one, ctx.one, ctx.zero)
    return M


def cfe_from_digits(preperiod, cycle):
    """The quadratic irrational [preperiod; (cycle)] solved exactly.

    The purely periodic tail y = [c_1; ..., c_l, y] is a root of
    q y^2 + (q' - p) y - p' = 0 for its cycle matrix [[p, p'], [q, q']];
    the root with v_inf < 0 is the complete quotient, the other one is its
    conjugate.  The preperiod is then applied as a Moebius map.
    """
    ctx = cycle[0].ctx
    M = _matrix_of(cycle, ctx)
    p, pp, qq, qp = M.a, M.b, M.c, M.d
    disc = (qp - p) * (qp - p) + qq * pp * 4
    two_q = qq * 2
    for sign in (1, -1):
        y = surd_canonicalize(p - qp, ctx.one * sign, two_q, disc)
        if surd_vinf(y) < 0 and surd_integral_part(y) == cycle[0]:
            break
    else:  # pragma: no cover - one root always qualifies
        raise ArithmeticError('no root of the cycle equation is a complete quotient')
    if not preperiod:
        return y
    return surd_moebius(_matrix_of(preperiod, ctx), y)
