"""Truncated Laurent series in 1/Y over F_q: the field F_q((1/Y)).

A series is  sum_{k >= val} c_k Y^(-k), so ``val`` is the valuation at
infinity (v(Y) = -1) and |f| = q^(-val).  ``prec`` is the exclusive index
bound of the known coefficients: everything from Y^(-prec) on is unknown.
Exact values (embedded polynomials, the exact zero) carry ``prec = inf``.

Every operation returns the largest precision it can prove from its inputs
and never invents coefficients.
"""

import math

from . import errors
from .algebra import Fq, Poly

DEFAULT_PREC = 64

__all__ = [
    'DEFAULT_PREC', 'Laurent', 'lau_from_poly', 'lau_monomial', 'lau_vinf',
    'lau_inv', 'lau_sqrt', 'lau_int_frac', 'lau_mul', 'lau_div',
]


class Laurent:
    __slots__ = ('ctx', 'val', 'coeffs', 'prec')

    def __init__(self, ctx, val, coeffs, prec=math.inf):
        cs = list(coeffs)
        if prec != math.inf:
            n = prec - val
            if n < 0:
                cs, val = [], prec
            else:
                cs = (cs + [0] * (n - len(cs)))[:n]
        # strip leading zeros into the valuation
        lead = 0
        while lead < len(cs) and not cs[lead]:
            lead += 1
        if lead == len(cs):
            cs = []
            val = prec  # exact zero gets inf, a truncated zero its bound
        else:
            cs = cs[lead:]
            val += lead
            if prec == math.inf:
                while not cs[-1]:
                    cs.pop()
        self.ctx = ctx
        self.val = val
        self.coeffs = tuple(cs)
        self.prec = prec

    @classmethod
    def zero(cls, ctx, prec=math.inf):
        return cls(ctx, prec, (), prec)

    # -- inspection ----------------------------------------------------------

    def is_exact(self):
        return self.prec == math.inf

    def is_zero(self):
        """True for the exact zero and for series with no known nonzero term."""
        return not self.coeffs

    def relative_prec(self):
        return self.prec - self.val

    def __getitem__(self, k):
        """Encoding of the coefficient of Y^(-k)."""
        if k >= self.prec:
            raise errors.InsufficientPrecision(f'coefficient of Y^{-k} is beyond O(Y^{-self.prec})')
        i = k - self.val
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def coefficient(self, k):
        return Fq(self.ctx, self[k])

    def window(self, start, stop):
        """Coefficient encodings for indices start..stop-1."""
        return [self[k] for k in range(start, stop)]

    def truncate(self, prec):
        """Forget coefficients from index prec on."""
        if prec >= self.prec:
            return self
        start = min(self.val, prec)
        return Laurent(self.ctx, start, self.window(start, prec) if start < prec else (), prec)

    def __eq__(self, o):
        if not isinstance(o, Laurent):
            return NotImplemented
        return (self.ctx == o.ctx and self.val == o.val
                and self.coeffs == o.coeffs and self.prec == o.prec)

    def __hash__(self):
        return hash((self.ctx, self.val, self.coeffs, self.prec))

    def agrees(self, o):
        """Equality on the coefficients both operands know."""
        return (self - o).is_zero()

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, o):
        if isinstance(o, Laurent):
            if o.ctx != self.ctx:
                raise ValueError('series over different fields')
            return o
        if isinstance(o, Poly):
            return lau_from_poly(o)
        if isinstance(o, (int, Fq)):
            return lau_from_poly(Poly.constant(self.ctx, o))
        raise TypeError(f'cannot combine Laurent with {type(o).__name__}')

    def __add__(self, o):
        try:
            o = self._coerce(o)
        except TypeError:
            return NotImplemented
        return _addsub(self, o, self.ctx.add)

    __radd__ = __add__

    def __sub__(self, o):
        try:
            o = self._coerce(o)
        except TypeError:
            return NotImplemented
        return _addsub(self, o, self.ctx.sub)

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __neg__(self):
        F = self.ctx
        return Laurent(F, self.val, [F.neg(x) for x in self.coeffs], self.prec)

    def __mul__(self, o):
        try:
            o = self._coerce(o)
        except TypeError:
            return NotImplemented
        return lau_mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, o):
        return lau_div(self, self._coerce(o))

    def __rtruediv__(self, o):
        return lau_div(self._coerce(o), self)

    # -- text --------------------------------------------------------------

    def __str__(self):
        F = self.ctx
        terms = []
        for i, x in enumerate(self.coeffs):
            if not x:
                continue
            ex = -(self.val + i)
            cs = F.element_str(x)
            if ex == 0:
                terms.append(cs)
                continue
            mono = 'Y' if ex == 1 else f'Y^{ex}'
            terms.append(mono if x == 1 else f'{cs}*{mono}')
        if self.prec != math.inf:
            terms.append('O(Y)' if self.prec == -1 else
                         ('O(1)' if self.prec == 0 else f'O(Y^{-self.prec})'))
        return ' + '.join(terms) if terms else '0'

    def __repr__(self):
        return f'Laurent({self})'


def _addsub(f, g, op):
    prec = min(f.prec, g.prec)
    start = min(f.val, g.val)
    if prec == math.inf:
        stop = max(f.val + len(f.coeffs), g.val + len(g.coeffs))
    else:
        stop = prec
    if start >= stop:
        return Laurent.zero(f.ctx, prec)
    cs = [op(f[k] if k < f.prec else 0, g[k] if k < g.prec else 0) for k in range(start, stop)]
    return Laurent(f.ctx, start, cs, prec)


def lau_from_poly(P):
    """Exact embedding of a polynomial; v(P) = -deg P."""
    if not P.c:
        return Laurent.zero(P.ctx)
    return Laurent(P.ctx, -P.deg, P.c[::-1])


def lau_monomial(ctx, k, coeff=1, prec=math.inf):
    """coeff * Y^(-k)."""
    c = coeff.v if isinstance(coeff, Fq) else ctx.from_int(coeff)
    return Laurent(ctx, k, [c], prec)


def lau_vinf(f):
    """v_inf(f); +inf for the exact zero.

    For a series with no known nonzero term this is the precision bound,
    which is only a lower bound for the true valuation.
    """
    return f.val


def lau_mul(f, g):
    F = f.ctx
    if f.val == math.inf or g.val == math.inf:
        return Laurent.zero(F)
    val = f.val + g.val
    prec = min(f.prec + g.val, g.prec + f.val)
    if not f.coeffs or not g.coeffs:
        return Laurent.zero(F, prec)
    if prec == math.inf:
        cs = F.ops.mul(f.coeffs, g.coeffs)
    else:
        n = prec - val
        cs = F.ops.mul(f.coeffs[:n], g.coeffs[:n])[:n]
    return Laurent(F, val, cs, prec)


def lau_inv(f, rel_prec=None):
    """1/f with f * (1/f) = 1 to the contracted precision.

    An exact f has an infinite inverse; ``rel_prec`` (default 64) then sets
    how many coefficients to produce.  For a truncated f the relative
    precision is inherited and ``rel_prec`` can only lower it.
    """
    if not f.coeffs:
        raise errors.ZeroDivisor('no nonzero coefficient known before the precision bound')
    n = f.relative_prec()
    if n == math.inf:
        n = DEFAULT_PREC if rel_prec is None else rel_prec
    elif rel_prec is not None:
        n = min(n, rel_prec)
    cs = f.ctx.ops.ser_inv(list(f.coeffs[:n]), n)
    return Laurent(f.ctx, -f.val, cs, -f.val + n)


def lau_div(f, g, rel_prec=None):
    if g.is_exact() and g.coeffs and len(g.coeffs) == 1:
        # monomial divisor: exact shift and scale
        F = f.ctx
        u = F.inv(g.coeffs[0])
        return Laurent(F, f.val - g.val, [F.mul(x, u) for x in f.coeffs], f.prec - g.val)
    if rel_prec is None and f.is_exact() and g.is_exact():
        rel_prec = DEFAULT_PREC
    if rel_prec is None:
        rel_prec = f.relative_prec()
    return lau_mul(f, lau_inv(g, rel_prec))


def lau_sqrt(f, rel_prec=None):
    """Square root with leading coefficient the canonical root of lc(f).

    Needs even valuation and a square leading coefficient (p is odd, so each
    new coefficient solves a linear equation).
    """
    F = f.ctx
    if f.val == math.inf:
        return f
    if not f.coeffs:
        raise errors.InsufficientPrecision('square root of a series with no known term')
    if f.val % 2:
        raise errors.OddValuation(f'valuation {f.val} is odd; the root is not in F_q((1/Y))')
    r0 = F.sqrt(f.coeffs[0])
    if r0 is None:
        raise errors.NonSquareLeadingCoeff(f'leading coefficient {F.element_str(f.coeffs[0])} is not a square')
    n = f.relative_prec()
    if n == math.inf:
        n = DEFAULT_PREC if rel_prec is None else rel_prec
    elif rel_prec is not None:
        n = min(n, rel_prec)
    cs = F.ops.ser_sqrt(list(f.coeffs[:n]), n, r0)
    half = f.val // 2
    return Laurent(F, half, cs, half + n)


def lau_int_frac(f):
    """Split f = [f] + {f}: polynomial part and the part in M (v >= 1)."""
    F = f.ctx
    if f.val == math.inf:
        return F.zero, f
    if f.prec < 1:
        raise errors.InsufficientPrecision('the polynomial part needs coefficients through Y^0')
    if f.val >= 1:
        return F.zero, f
    poly = [f[-j] for j in range(0, -f.val + 1)]
    frac_cs = f.coeffs[1 - f.val:]
    return Poly(F, poly), Laurent(F, 1, frac_cs, f.prec)
