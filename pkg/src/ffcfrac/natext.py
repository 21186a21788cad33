"""Natural extension of the Artin map on pairs (xi_minus, xi_plus).

xi_minus has v_inf < 0 and xi_plus lies in M.  One step is

    (xi_minus, xi_plus) -> (1/xi_minus - a, 1/xi_plus - a),  a = [1/xi_plus],

so the second coordinate follows Psi exactly.  The inverse reads the digit
a = -[xi_minus] off the first coordinate.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import errors
from .cfe import cfe_period, degree_stats
from .surd import Surd, surd_integral_part, surd_vinf

__all__ = [
    'NatExtPair', 'AtomicMeasure', 'pair_make', 'natext_step', 'natext_unstep',
    'coding_window', 'first_return_time', 'F_of_periodic_orbit',
]


@dataclass(frozen=True)
class NatExtPair:
    xi_minus: Surd
    xi_plus: Surd

    @classmethod
    def make(cls, xi_minus, xi_plus):
        """Checked constructor."""
        if surd_vinf(xi_minus) >= 0:
            raise errors.NotReduced(f'{xi_minus} has v_inf >= 0')
        if surd_vinf(xi_plus) < 1:
            raise errors.NotReduced(f'{xi_plus} is not in M')
        return cls(xi_minus, xi_plus)

    def is_valid(self):
        return surd_vinf(self.xi_minus) < 0 and surd_vinf(self.xi_plus) >= 1


def pair_make(f):
    """(f^sigma, f) for a reduced f: f in M and v_inf(f^sigma) < 0."""
    if surd_vinf(f) < 1:
        raise errors.NotReduced(f'{f} is not in M (v_inf = {surd_vinf(f)})')
    fs = f.conjugate()
    if surd_vinf(fs) >= 0:
        raise errors.NotReduced(f'the conjugate of {f} has v_inf = {surd_vinf(fs)} >= 0')
    return NatExtPair(fs, f)


def natext_step(p):
    """(a, next) with a = [1/xi_plus]."""
    inv_plus = p.xi_plus.inverse()
    a = surd_integral_part(inv_plus)
    return a, NatExtPair(p.xi_minus.inverse() - a, inv_plus - a)


def natext_unstep(p):
    """(a, prev) with a = -[xi_minus] and natext_step(prev) == (a, p)."""
    a = -surd_integral_part(p.xi_minus)
    return a, NatExtPair((p.xi_minus + a).inverse(), (p.xi_plus + a).inverse())


def coding_window(p, m):
    """(a_{-m}, ..., a_0, a_1, ..., a_{m+1}) around p.

    a_1, ..., a_{m+1} come from m+1 forward steps and a_0, ..., a_{-m} from
    m+1 backward steps, so the window has 2m+2 digits.
    """
    if m < 0:
        raise ValueError('m must be >= 0')
    past = []
    x = p
    for _ in range(m + 1):
        a, x = natext_unstep(x)
        past.append(a)
    future = []
    x = p
    for _ in range(m + 1):
        a, x = natext_step(x)
        future.append(a)
    return past[::-1] + future


def first_return_time(p):
    """2 * deg [1/xi_plus]."""
    return 2 * surd_integral_part(p.xi_plus.inverse()).deg


class AtomicMeasure:
    """Finite measure with exact rational weights on canonical surds."""

    __slots__ = ('atoms',)

    def __init__(self, atoms=None):
        self.atoms = {}
        for k, w in (atoms or {}).items():
            w = Fraction(w)
            if w < 0:
                raise ValueError('negative weight')
            if w:
                self.atoms[k] = self.atoms.get(k, 0) + w

    def __getitem__(self, x):
        return self.atoms.get(x, Fraction(0))

    def __len__(self):
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)

    def items(self):
        return self.atoms.items()

    def support(self):
        return set(self.atoms)

    def total_mass(self):
        return sum(self.atoms.values(), Fraction(0))

    def scaled(self, c):
        return AtomicMeasure({k: w * c for k, w in self.atoms.items()})

    def normalized(self):
        m = self.total_mass()
        if not m:
            raise ValueError('zero measure')
        return self.scaled(1 / m)

    def __eq__(self, o):
        return isinstance(o, AtomicMeasure) and self.atoms == o.atoms

    def __hash__(self):
        return hash(frozenset(self.atoms.items()))

    def __repr__(self):
        inner = ', '.join(f'{k} -> {w}' for k, w in sorted(self.atoms.items()))
        return f'AtomicMeasure({{{inner}}})'


def F_of_periodic_orbit(f):
    """Weight 1/(2 * sum of cycle degrees) on each point of the Psi-cycle."""
    c = cfe_period(f)
    stats, _ = degree_stats(c)
    w = Fraction(1, stats.lambda_)
    return AtomicMeasure({s: w for s in c.cycle_points()})
