import os
import random
from fractions import Fraction

import pytest

from ffcfrac import errors
from ffcfrac.algebra import Fq, fq_ctx_make, parse_poly, poly_is_irreducible, polys_of_degree
from ffcfrac.cfe import cfe_period, cfe_reduce
from ffcfrac.hecke import (CSV_HEADER, CylinderSpec, cylinder_measure, escape_table, gamma_key,
                           hecke_neighbors, hecke_ray, hecke_walk_explore, mass_constants, nu_f,
                           nu_lower_bound, psi_preimage_mass, rows_from_csv, rows_to_csv)
from ffcfrac.natext import AtomicMeasure, F_of_periodic_orbit
from ffcfrac.surd import Moebius, parse_surd, surd_moebius
from helpers import haar_cylinder_mass, rand_surd

F3 = fq_ctx_make(3)
Y = F3.Y
f = parse_surd(F3, '0,2|1|1|1,0,1')
P2 = parse_poly(F3, '1,0,1')
GOLDEN = os.path.join(os.path.dirname(__file__), 'golden', 'escape_f3_y2p1.csv')


# -- neighbours -------------------------------------------------------------

def test_neighbors_examples():
    nb = hecke_neighbors(f, Y)
    expect = [Y * f] + [(f + b) / Y for b in (0, 1, 2)]
    assert nb == expect
    assert len(hecke_neighbors(f, P2)) == 10


def test_neighbors_reject_reducible():
    with pytest.raises(errors.ReducibleP):
        hecke_neighbors(f, parse_poly(F3, '2,0,1'))
    with pytest.raises(errors.ReducibleP):
        hecke_neighbors(f, parse_poly(F3, '2'))


@pytest.mark.parametrize('q', [3, 5])
@pytest.mark.parametrize('d', [1, 2])
def test_neighbor_count_and_kernel(q, d):
    F = fq_ctx_make(q)
    rng = random.Random(q * 10 + d)
    Ps = [P for P in polys_of_degree(F, d) if P.is_monic() and poly_is_irreducible(P)][:2]
    for P in Ps:
        for _ in range(3):
            g = rand_surd(F, rng)
            nb = hecke_neighbors(g, P)
            assert len(nb) == q ** d + 1
            assert all(h.S == g.S for h in nb)


def test_neighbor_symmetry_depth_two():
    # f is a neighbour of each neighbour, up to the action of PGL_2(R)
    rng = random.Random(3)
    for P in (Y, P2, Y + 1):
        for g in (f, rand_surd(F3, rng), rand_surd(F3, rng)):
            key = gamma_key(g)
            for h in hecke_neighbors(g, P):
                assert any(gamma_key(x) == key for x in hecke_neighbors(h, P))


def test_gamma_key_is_invariant():
    rng = random.Random(4)
    g = rand_surd(F3, rng)
    M = Moebius(Y, F3.one, F3.one, F3.zero)  # z -> Y + 1/z
    for N in (M, Moebius.translation(Y + 2), Moebius.diag(F3.one * 2, F3.one), Moebius.inversion(F3)):
        assert gamma_key(surd_moebius(N, g)) == gamma_key(g)
    assert gamma_key(g * Fq(F3, 2)) == gamma_key(g)


# -- rays ----------------------------------------------------------------------

def test_ray_examples():
    assert hecke_ray(f, P2, 0) == [cfe_reduce(f)[1]]
    ray = hecke_ray(f, P2, 5)
    assert len(ray) == 6 and all(g.S == f.S for g in ray)
    with pytest.raises(errors.ReducibleP):
        hecke_ray(f, parse_poly(F3, '2,0,1'), 2)


# -- scan tables ------------------------------------------------------------------

def test_escape_first_row():
    rows = escape_table(f, P2, 0, 0)
    assert rows_to_csv(rows).splitlines()[1] == '0,1,1,1,1,2,1,1:1'


def test_escape_table_matches_golden(backend):
    with open(GOLDEN) as fh:
        golden = fh.read()
    rows = escape_table(f, P2, 6, 0)
    assert rows_to_csv(rows) == golden


def test_escape_rows_satisfy_identities():
    rows = escape_table(f, P2, 7, 0) + escape_table(f, Y, 6, 1)
    for r in rows:
        assert r.lambda_ == 2 * r.sum_deg and r.height == r.max_deg
        assert sum(c for _, c in r.hist) == r.ell
        assert sum(d * c for d, c in r.hist) == r.sum_deg
    for r in rows[:8]:
        assert 0 < r.ratio <= 1


def test_csv_roundtrip():
    rows = escape_table(f, Y, 4, 1)
    text = rows_to_csv(rows)
    assert text.splitlines()[0] == ','.join(CSV_HEADER)
    assert rows_from_csv(text) == rows
    with pytest.raises(errors.ParseError):
        rows_from_csv('a,b\n1,2\n')


def test_parallel_rows_match_serial():
    assert escape_table(f, P2, 5, 0, workers=2) == escape_table(f, P2, 5, 0)


def test_invariant_statistics_under_cycle_shift():
    # cfe_reduce entry vs any other point of the cycle: same degree multiset
    rng = random.Random(5)
    for _ in range(10):
        g = rand_surd(F3, rng)
        c = cfe_period(g)
        for s in c.cycle_points():
            c2 = cfe_period(s)
            assert sorted(a.deg for a in c2.cycle) == sorted(a.deg for a in c.cycle)


# -- walks ----------------------------------------------------------------------

def test_walk_multiply_reproduces_ray():
    walk = hecke_walk_explore(f, P2, 4, 'multiply')
    assert [cfe_reduce(v)[1] for v, _ in walk] == hecke_ray(f, P2, 4)[1:]
    assert [row.n for _, row in walk] == [1, 2, 3, 4]


def test_walk_is_deterministic_and_seed_sensitive():
    a = hecke_walk_explore(f, Y, 6, 'random', seed=1)
    assert a == hecke_walk_explore(f, Y, 6, 'random', seed=1)
    seeds = [hecke_walk_explore(f, Y, 6, 'random', seed=s) for s in range(2, 8)]
    assert any([v for v, _ in w] != [v for v, _ in a] for w in seeds)


def test_walk_adjacency_and_non_backtracking():
    for seed in range(5):
        walk = hecke_walk_explore(f, Y, 3, 'random', seed=seed)
        assert len(walk) == 3
        prev, before = f, None
        for v, row in walk:
            assert v in hecke_neighbors(prev, Y)
            if before is not None:
                assert v != before
            before, prev = prev, v


def test_walk_custom_chooser():
    walk = hecke_walk_explore(f, Y, 3, lambda rng, cands, step: len(cands) - 1)
    assert len(walk) == 3
    with pytest.raises(ValueError):
        hecke_walk_explore(f, Y, 0)
    with pytest.raises(ValueError):
        hecke_walk_explore(f, Y, 2, chooser='sideways')


# -- equiprobabilities --------------------------------------------------------

def test_nu_f_examples():
    assert nu_f(f) == AtomicMeasure({f: 1})
    rng = random.Random(6)
    for _ in range(20):
        g = rand_surd(F3, rng, (2, 4))
        nu = nu_f(g)
        assert nu.total_mass() == 1
        assert F_of_periodic_orbit(g).normalized() == nu
        assert nu_lower_bound(nu, nu) == 1


def test_nu_lower_bound_examples():
    x, y = f, f.conjugate()
    assert nu_lower_bound(AtomicMeasure({x: 1}), AtomicMeasure({y: 1})) == 0
    half = AtomicMeasure({x: Fraction(1, 2), y: Fraction(1, 2)})
    assert nu_lower_bound(half, AtomicMeasure({x: 1})) == Fraction(1, 2)
    with pytest.raises(ValueError):
        nu_lower_bound(half, AtomicMeasure())


# -- cylinders -----------------------------------------------------------------

def test_cylinder_examples():
    assert cylinder_measure([2 * Y]) == Fraction(1, 9)
    assert cylinder_measure([Y, P2]) == Fraction(1, 3 ** 6)
    with pytest.raises(errors.ConstantDigit):
        cylinder_measure([F3.one * 2])
    with pytest.raises(ValueError):
        CylinderSpec(())


def test_cylinder_matches_haar_enumeration():
    cases = [[Y], [2 * Y + 1], [P2], [Y, Y], [Y + 2, 2 * Y], [Y, P2]]
    for ds in cases:
        assert cylinder_measure(ds) == haar_cylinder_mass(F3, ds)
    F5 = fq_ctx_make(5)
    assert cylinder_measure([F5.Y * 3]) == haar_cylinder_mass(F5, [F5.Y * 3])


@pytest.mark.parametrize('q', [3, 5])
def test_depth_one_sums(q):
    F = fq_ctx_make(q)
    for n in (1, 2):
        tot = sum(cylinder_measure([a]) for a in polys_of_degree(F, n))
        assert tot == Fraction(q - 1, q ** n)


def test_depth_one_partial_sums_up_to_eight():
    q = 3
    running = Fraction(0)
    for N in range(1, 9):
        # (q-1) q^N digits of degree N, each of mass q^(-2N)
        count = (q - 1) * q ** N
        running += count * cylinder_measure([Y ** N])
        assert running == 1 - Fraction(1, q ** N)


def test_psi_invariance_depth_three():
    digits = [a for d in (1, 2) for a in polys_of_degree(F3, d)]
    rng = random.Random(7)
    for depth in (1, 2, 3):
        for _ in range(30):
            c = tuple(rng.choice(digits) for _ in range(depth))
            assert psi_preimage_mass(c) == cylinder_measure(c)
            assert psi_preimage_mass(c, enum_deg=1) == cylinder_measure(c)


# -- mass constants --------------------------------------------------------------

def test_mass_constants_q3():
    m = mass_constants(F3)
    assert m.series == Fraction(2, 39) == m.closed_form
    assert m.paper_mass == Fraction(54, 13) and m.paper_F_mass == Fraction(162, 13)
    assert m.derived_F_mass == Fraction(2, 13)
    assert m.match is False


@pytest.mark.parametrize('q', [3, 5, 7, 9, 11])
def test_mass_constants_partial_sums(q):
    m = mass_constants(q, cutoff=20)
    assert m.series == Fraction((q - 1) ** 2, 2 * q * (q * q + q + 1))
    for n, s in enumerate(m.partial_sums, start=1):
        # tail of the geometric series with ratio q^-3
        assert m.series - s == m.series * Fraction(1, q ** (3 * n))
    assert m.series * q ** 4 == m.paper_mass
