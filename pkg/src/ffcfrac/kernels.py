"""Backend selection for the arithmetic kernels.

The compiled ``_ckernels`` extension is used when it imports and the prime
fits in 31 bits; otherwise the pure-Python ``_kernels_py`` runs.  Setting
``FFCFRAC_PURE_PYTHON=1`` in the environment forces the fallback.
Extension fields always go through ``_generic``.
"""

import os

from . import _generic, _kernels_py

try:
    if os.environ.get('FFCFRAC_PURE_PYTHON'):
        raise ImportError('pure-Python backend forced')
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = 'cython' if _ckernels is not None else 'python'
_C_PRIME_LIMIT = 1 << 31


def available_backends():
    return ['python'] + (['cython'] if _ckernels is not None else [])


class PrimeFieldOps:
    """Kernel calls bound to a prime p."""

    __slots__ = ('p', 'mod', 'backend')

    def __init__(self, p, backend=None):
        if backend is None:
            backend = BACKEND if p < _C_PRIME_LIMIT else 'python'
        if backend == 'cython':
            if _ckernels is None:
                raise RuntimeError('compiled kernels are not built')
            if p >= _C_PRIME_LIMIT:
                raise ValueError('compiled kernels need p < 2**31')
            self.mod = _ckernels
        elif backend == 'python':
            self.mod = _kernels_py
        else:
            raise ValueError(f'unknown backend {backend!r}')
        self.p = p
        self.backend = backend

    def add(self, a, b):
        return self.mod.padd(a, b, self.p)

    def sub(self, a, b):
        return self.mod.psub(a, b, self.p)

    def neg(self, a):
        return self.mod.pneg(a, self.p)

    def scale(self, a, c):
        return self.mod.pscale(a, c, self.p)

    def mul(self, a, b):
        return self.mod.pmul(a, b, self.p)

    def divmod(self, a, b):
        return self.mod.pdivmod(a, b, self.p)

    def ser_inv(self, c, n):
        return self.mod.ser_inv(c, n, self.p)

    def ser_sqrt(self, c, n, r0):
        return self.mod.ser_sqrt(c, n, r0, self.p)

    def artin_orbit(self, P, Q, D, r, budget):
        return self.mod.artin_orbit(P, Q, D, r, self.p, budget)


class GenericFieldOps:
    """Same interface as PrimeFieldOps, driven by a FieldCtx's element ops."""

    __slots__ = ('F',)
    backend = 'generic'

    def __init__(self, F):
        self.F = F

    def add(self, a, b):
        return _generic.padd(a, b, self.F)

    def sub(self, a, b):
        return _generic.psub(a, b, self.F)

    def neg(self, a):
        return _generic.pneg(a, self.F)

    def scale(self, a, c):
        return _generic.pscale(a, c, self.F)

    def mul(self, a, b):
        return _generic.pmul(a, b, self.F)

    def divmod(self, a, b):
        return _generic.pdivmod(a, b, self.F)

    def ser_inv(self, c, n):
        return _generic.ser_inv(c, n, self.F)

    def ser_sqrt(self, c, n, r0):
        return _generic.ser_sqrt(c, n, r0, self.F)

    def artin_orbit(self, P, Q, D, r, budget):
        return _generic.artin_orbit(P, Q, D, r, self.F, budget)
