import random
from fractions import Fraction

import pytest

from ffcfrac import errors
from ffcfrac.algebra import fq_ctx_make
from ffcfrac.cfe import artin_step, cfe_expand, cfe_period, degree_stats
from ffcfrac.hecke import nu_f
from ffcfrac.natext import (AtomicMeasure, F_of_periodic_orbit, NatExtPair, coding_window,
                            first_return_time, natext_step, natext_unstep, pair_make)
from ffcfrac.surd import parse_surd, surd_vinf
from helpers import rand_reduced, rand_surd

F3 = fq_ctx_make(3)
Y = F3.Y
f = parse_surd(F3, '0,2|1|1|1,0,1')
fs = f.conjugate()
r = parse_surd(F3, '0|1|1|1,0,1')


def seeded_pairs(n, seed, qs=(3, 5)):
    rng = random.Random(seed)
    out = []
    for i in range(n):
        F = fq_ctx_make(qs[i % len(qs)])
        out.append(pair_make(rand_reduced(F, rng)))
    return out


# -- construction -------------------------------------------------------------

def test_pair_make_examples():
    p = pair_make(f)
    assert (p.xi_minus, p.xi_plus) == (fs, f)
    with pytest.raises(errors.NotReduced):
        pair_make(r)
    g = r - Y
    p = pair_make(g)
    assert p.xi_minus == -r - Y and p.xi_plus == g


def test_pair_make_rejects_unreduced_conjugate():
    # Y^-1 * (something in M whose conjugate is also in M)
    g = parse_surd(F3, '0|1|0,0,1|1,0,1') - parse_surd(F3, '0|1|0,0,1|1,0,1').integral_part()
    assert surd_vinf(g) >= 1
    with pytest.raises(errors.NotReduced):
        pair_make(g)


def test_checked_constructor():
    assert NatExtPair.make(fs, f).is_valid()
    with pytest.raises(errors.NotReduced):
        NatExtPair.make(f, f)
    with pytest.raises(errors.NotReduced):
        NatExtPair.make(fs, fs)


# -- dynamics -----------------------------------------------------------------

def test_step_examples():
    p = pair_make(f)
    assert natext_step(p) == (2 * Y, p)
    assert natext_unstep(p) == (2 * Y, p)


def test_steps_and_unsteps_are_inverse():
    for p in seeded_pairs(100, 1):
        x = p
        for _ in range(20):
            a, y = natext_step(x)
            assert natext_unstep(y) == (a, x)
            b, z = natext_unstep(x)
            assert natext_step(z) == (b, x)
            x = y


def test_diagram_commutes_and_range_is_kept():
    for p in seeded_pairs(40, 2):
        x, xi = p, p.xi_plus
        for _ in range(50):
            a, x = natext_step(x)
            b, xi = artin_step(xi)
            assert a == b and x.xi_plus == xi
            assert surd_vinf(x.xi_minus) < 0 and surd_vinf(x.xi_plus) >= 1


def test_forward_digits_are_the_expansion():
    for p in seeded_pairs(20, 3):
        w = coding_window(p, 4)
        assert w[5:] == cfe_expand(p.xi_plus, 5)[1:]


# -- coding window ------------------------------------------------------------

def test_fixed_pair_window():
    assert coding_window(pair_make(f), 2) == [2 * Y] * 6


def test_window_shift():
    for p in seeded_pairs(30, 4):
        for m in (0, 1, 3):
            nxt = natext_step(p)[1]
            assert coding_window(nxt, m) == coding_window(p, m + 1)[2:]


def test_window_rejects_negative():
    with pytest.raises(ValueError):
        coding_window(pair_make(f), -1)


def test_past_digits_are_unit_twists():
    # the literal expansion of xi_minus = f^sigma has digits Y; the coding has 2Y = -Y
    assert cfe_expand(fs, 3)[1:] == [Y] * 3
    assert coding_window(pair_make(f), 1)[:2] == [2 * Y] * 2


# -- return times ---------------------------------------------------------------

def test_return_time_examples():
    assert first_return_time(pair_make(f)) == 2


def test_return_time_matches_degree():
    for p in seeded_pairs(60, 5):
        x = p
        for _ in range(10):
            t = first_return_time(x)
            a, x = natext_step(x)
            assert t == 2 * a.deg and t >= 2 and t % 2 == 0


# -- F(mu_x) ---------------------------------------------------------------------

def test_F_fixed_point():
    m = F_of_periodic_orbit(f)
    assert m == AtomicMeasure({f: Fraction(1, 2)})
    assert m.total_mass() == Fraction(1, 2)
    assert m.normalized() == nu_f(f) == AtomicMeasure({f: 1})


def test_F_total_mass_seeded():
    rng = random.Random(6)
    for i in range(50):
        F = fq_ctx_make((3, 5)[i % 2])
        g = rand_surd(F, rng, (2, 4))
        m = F_of_periodic_orbit(g)
        s, _ = degree_stats(cfe_period(g))
        assert m.total_mass() == Fraction(s.ell, s.lambda_)
        assert len(m) == s.ell
        assert m.normalized() == nu_f(g)


def test_atomic_measure_basics():
    m = AtomicMeasure({f: Fraction(1, 3)})
    assert m[fs] == 0 and m[f] == Fraction(1, 3)
    assert m.scaled(3) == AtomicMeasure({f: 1})
    with pytest.raises(ValueError):
        AtomicMeasure({f: -1})
    with pytest.raises(ValueError):
        AtomicMeasure().normalized()
