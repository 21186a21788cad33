"""The compiled and pure-Python kernels must agree on every entry point."""

import random

import pytest

from ffcfrac import kernels
from ffcfrac import _kernels_py as pyk

pytestmark = pytest.mark.skipif('cython' not in kernels.available_backends(),
                                reason='compiled kernels not built')


def _rand(rng, n, p):
    a = [rng.randrange(p) for _ in range(n)]
    return pyk.trim(a)


@pytest.mark.parametrize('p', [3, 5, 101, 2147483647])
def test_mul_divmod_agree(p):
    from ffcfrac import _ckernels as ck
    rng = random.Random(p)
    for _ in range(60):
        a = _rand(rng, rng.randrange(0, 200), p)
        b = _rand(rng, rng.randrange(1, 150), p) or [1]
        assert ck.pmul(a, b, p) == pyk.pmul(a, b, p)
        assert ck.pdivmod(a, b, p) == pyk.pdivmod(a, b, p)
        assert ck.padd(a, b, p) == pyk.padd(a, b, p)
        assert ck.psub(a, b, p) == pyk.psub(a, b, p)


def test_karatsuba_matches_schoolbook():
    rng = random.Random(5)
    p = 7
    for n in (63, 64, 65, 200, 513):
        a, b = [rng.randrange(p) for _ in range(n)], [rng.randrange(p) for _ in range(n - 3)]
        school = [x % p for x in pyk._school(a, b)]
        assert pyk.pmul(a, b, p) == pyk.trim(school)


@pytest.mark.parametrize('p', [3, 5, 13])
def test_series_agree(p):
    from ffcfrac import _ckernels as ck
    rng = random.Random(p + 1)
    for _ in range(30):
        c = [rng.randrange(1, p)] + [rng.randrange(p) for _ in range(rng.randrange(0, 12))]
        n = rng.randrange(1, 80)
        assert ck.ser_inv(c, n, p) == pyk.ser_inv(c, n, p)
        r0 = 1
        c[0] = 1
        assert ck.ser_sqrt(c, n, r0, p) == pyk.ser_sqrt(c, n, r0, p)


def test_artin_orbit_agree():
    from ffcfrac import _ckernels as ck
    from ffcfrac import fq_ctx_make
    from ffcfrac.cfe import surd_state
    from ffcfrac.surd import poly_part_of_sqrt_multiple
    from helpers import rand_surd
    for q in (3, 5):
        F = fq_ctx_make(q)
        rng = random.Random(q * 11)
        for _ in range(30):
            f = rand_surd(F, rng, (2, 4, 6))
            x = f - f.integral_part()
            P, Q, B0 = surd_state(x)
            D = B0 * B0 * x.S
            r = poly_part_of_sqrt_multiple(B0, x.S)
            args = (list(P.c), list(Q.c), list(D.c), list(r.c), q, 10 ** 6)
            assert ck.artin_orbit(*args) == pyk.artin_orbit(*args)


def test_artin_orbit_budget():
    from ffcfrac import _ckernels as ck
    # sqrt(Y^2+1) - Y over F_3 has a fixed state; budget 0 stops at once
    for mod in (ck, pyk):
        Ps, Qs, ds, start = mod.artin_orbit([0, 2], [1], [1, 0, 1], [0, 1], 3, 0)
        assert start == -1


def test_artin_orbit_rejects_bad_state():
    from ffcfrac import _ckernels as ck
    for mod in (ck, pyk):
        with pytest.raises(ArithmeticError):
            mod.artin_orbit([1], [1, 1], [1, 0, 1], [0, 1], 3, 10)


def test_prime_field_ops_selection():
    ops = kernels.PrimeFieldOps(3)
    assert ops.backend == kernels.BACKEND
    assert kernels.PrimeFieldOps(2 ** 61 - 1).backend == 'python'
    with pytest.raises(ValueError):
        kernels.PrimeFieldOps(3, 'fortran')


def test_forced_fallback_in_fresh_process():
    import os
    import subprocess
    import sys
    code = ('import ffcfrac; from ffcfrac.cli import run; '
            'print(ffcfrac.BACKEND); print(run(["expand", "--q", "3", "--surd", "0,2|1|1|1,0,1", "--digits", "2"])[1], end="")')
    env = dict(os.environ, FFCFRAC_PURE_PYTHON='1')
    out = subprocess.run([sys.executable, '-c', code], env=env, capture_output=True, text=True, check=True).stdout
    assert out == 'python\n[0; 2*Y, 2*Y]\n'
