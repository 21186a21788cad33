"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from ffcfrac import available_backends
from ffcfrac.algebra import fq_ctx_make, parse_poly
from ffcfrac.cfe import cfe_period
from ffcfrac.hecke import hecke_ray
from ffcfrac.kernels import PrimeFieldOps
from ffcfrac.surd import parse_surd


def cases(p, rng):
    a = [rng.randrange(p) for _ in range(600)] + [1]
    b = [rng.randrange(p) for _ in range(300)] + [1]
    s = [1] + [rng.randrange(p) for _ in range(7)] + [1]
    return {
        'pmul 600x300': lambda ops: ops.mul(a, b),
        'divmod 600/300': lambda ops: ops.divmod(a, b),
        'ser_sqrt 2000': lambda ops: ops.ser_sqrt(s[::-1], 2000, 1),
    }


def bench_orbit(backend, repeat):
    F = fq_ctx_make(3)
    F.use_backend(backend)
    f = parse_surd(F, '0,2|1|1|1,0,1')
    g = hecke_ray(f, parse_poly(F, '1,0,1'), 40)[-1]
    t = min(timeit.repeat(lambda: cfe_period(g), number=1, repeat=repeat))
    F._ops = None
    return t


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument('--repeat', type=int, default=5)
    args = ap.parse_args()
    backends = available_backends()
    rows = {}
    for be in backends:
        ops = PrimeFieldOps(3, be)
        for name, fn in cases(3, random.Random(1)).items():
            rows.setdefault(name, {})[be] = min(timeit.repeat(lambda: fn(ops), number=3, repeat=args.repeat)) / 3
        rows.setdefault('cfe_period ray n=40', {})[be] = bench_orbit(be, args.repeat)
    print(f"{'case':24}" + ''.join(f'{b:>12}' for b in backends) + ('     speedup' if len(backends) > 1 else ''))
    for name, r in rows.items():
        line = f'{name:24}' + ''.join(f'{r[b] * 1e3:10.2f}ms' for b in backends)
        if len(backends) > 1:
            line += f"{r['python'] / r['cython']:11.1f}x"
        print(line)


if __name__ == '__main__':
    main()
