"""Quadratic irrationals over K = F_q(Y), embedded in F_q((1/Y)).

An element of K(sqrt S) is kept as (A + B*sqrt(S))/C with polynomial A, B, C,
gcd(A, B, C) = 1 and C monic; S is monic, squarefree, of even degree, so the
representation is unique.  sqrt(S) always means the Laurent root whose
leading coefficient is 1, and the Galois conjugate flips the sign of B.

``Surd`` is the irrational case (B != 0); arithmetic that lands in K
returns a plain ``QuadElement``.
"""

import math
import threading
from dataclasses import dataclass

from . import errors
from .algebra import Fq, Poly, parse_poly, poly_gcd, poly_squarefree_split
from .laurent import Laurent, lau_from_poly, lau_int_frac, lau_sqrt

__all__ = [
    'QuadElement', 'Surd', 'Moebius', 'surd_canonicalize', 'surd_conjugate',
    'surd_moebius', 'surd_to_laurent', 'surd_integral_part', 'surd_trace_norm',
    'surd_vinf', 'sqrt_series', 'poly_part_of_sqrt_multiple', 'parse_surd',
    'quad',
]


# -- memoized sqrt(S) series -----------------------------------------------

_SQRT_MEMO = {}
_SQRT_LOCK = threading.Lock()


def sqrt_series(S, prec):
    """sqrt(S) known at least through index prec - 1 (absolute).

    One series per kernel S, extended by doubling.  The memo slot is replaced
    only by a complete longer series, so readers never see a partial one.
    """
    key = (S.ctx, S.c)
    cur = _SQRT_MEMO.get(key)
    if cur is not None and cur.prec >= prec:
        return cur
    with _SQRT_LOCK:
        cur = _SQRT_MEMO.get(key)
        if cur is not None and cur.prec >= prec:
            return cur
        half = S.deg // 2
        need = prec + half
        old = cur.relative_prec() if cur is not None else 0
        n = max(need, 2 * old, 16)
        new = lau_sqrt(lau_from_poly(S), n)
        _SQRT_MEMO[key] = new
        return new


def poly_part_of_sqrt_multiple(B, S):
    """[B * sqrt(S)], the polynomial part, computed exactly."""
    if not B:
        return B
    s = sqrt_series(S, B.deg + 1)
    return lau_int_frac(lau_from_poly(B) * s)[0]


# -- elements of K(sqrt S) ---------------------------------------------------

class QuadElement:
    """(A + B*sqrt(S))/C in lowest terms; B may be zero."""

    __slots__ = ('A', 'B', 'C', 'S')

    def __init__(self, A, B, C, S):
        self.A, self.B, self.C, self.S = A, B, C, S

    @property
    def ctx(self):
        return self.S.ctx

    def key(self):
        return (self.A.c, self.B.c, self.C.c, self.S.c)

    def __eq__(self, o):
        if isinstance(o, QuadElement):
            return self.ctx == o.ctx and self.key() == o.key()
        if isinstance(o, (Poly, int, Fq)):
            return self == self._coerce(o)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.key()))

    def __lt__(self, o):
        return ((self.S.deg, self.S.c, len(self.C.c), self.C.c, len(self.A.c), self.A.c, self.B.c)
                < (o.S.deg, o.S.c, len(o.C.c), o.C.c, len(o.A.c), o.A.c, o.B.c))

    def is_rational(self):
        return not self.B

    def is_zero(self):
        return not self.A and not self.B

    def _coerce(self, o):
        if isinstance(o, QuadElement):
            if o.ctx != self.ctx or (o.B and o.S != self.S):
                raise ValueError('elements of different quadratic fields')
            return o
        if isinstance(o, (int, Fq)):
            o = Poly.constant(self.ctx, o)
        if isinstance(o, Poly):
            return QuadElement(o, self.ctx.zero, self.ctx.one, self.S)
        raise TypeError(f'cannot combine a quadratic element with {type(o).__name__}')

    def __add__(self, o):
        try:
            o = self._coerce(o)
        except TypeError:
            return NotImplemented
        return quad(self.A * o.C + o.A * self.C, self.B * o.C + o.B * self.C, self.C * o.C, self.S)

    __radd__ = __add__

    def __neg__(self):
        return QuadElement(-self.A, -self.B, self.C, self.S) if self.B else quad(-self.A, self.B, self.C, self.S)

    def __sub__(self, o):
        try:
            o = self._coerce(o)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        try:
            o = self._coerce(o)
        except TypeError:
            return NotImplemented
        S = self.S
        return quad(self.A * o.A + self.B * o.B * S, self.A * o.B + o.A * self.B, self.C * o.C, S)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise errors.DivisionByZero('inverse of zero')
        N = self.A * self.A - self.B * self.B * self.S
        return quad(self.C * self.A, -(self.C * self.B), N, self.S)

    def __truediv__(self, o):
        try:
            o = self._coerce(o)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, o):
        return self._coerce(o) * self.inverse()

    def conjugate(self):
        return quad(self.A, -self.B, self.C, self.S)

    def literal(self):
        return '|'.join(x.literal() for x in (self.A, self.B, self.C, self.S))

    def __str__(self):
        num = []
        if self.A:
            num.append(str(self.A))
        if self.B:
            b = "" if self.B == 1 else (f"{self.B}*" if sum(1 for x in self.B.c if x) == 1 else f"({self.B})*")
            num.append(f'{b}sqrt({self.S})')
        top = ' + '.join(num) if num else '0'
        if self.C == 1:
            return top if len(num) <= 1 else f'({top})'
        return f'({top})/({self.C})'

    def __repr__(self):
        return f'{type(self).__name__}({self.literal()})'

    # -- valuation and embedding ---------------------------------------------

    def vinf(self):
        return surd_vinf(self)

    def to_laurent(self, prec):
        return surd_to_laurent(self, prec)


class Surd(QuadElement):
    """A quadratic irrational (B != 0)."""

    __slots__ = ()

    @property
    def kernel(self):
        return self.S

    def is_in_M(self):
        return surd_vinf(self) >= 1

    def is_in_cO(self):
        return surd_vinf(self) < 0

    def integral_part(self):
        return surd_integral_part(self)

    def fractional_part(self):
        return self - surd_integral_part(self)

    def trace_norm(self):
        return surd_trace_norm(self)


def quad(A, B, C, S):
    """Normal form of (A + B*sqrt(S))/C for an already canonical kernel S."""
    if not C:
        raise errors.DivisionByZero('zero denominator')
    F = S.ctx
    if not A and not B:
        return QuadElement(F.zero, F.zero, F.one, S)
    g = poly_gcd(poly_gcd(A, B) if (A or B) else C, C)
    if g.deg > 0:
        A, B, C = A // g, B // g, C // g
    if C.c[-1] != 1:
        u = Fq(F, F.inv(C.c[-1]))
        A, B, C = A * u, B * u, C * u
    cls = Surd if B else QuadElement
    return cls(A, B, C, S)


def surd_canonicalize(A, B, C, D):
    """Normal form of (A + B*sqrt(D))/C.

    D = u*S*m^2 with S monic squarefree; sqrt(D) is read as
    fq_sqrt(u) * m * sqrt(S), the branch whose leading coefficient is the
    canonical root of lc(D).
    """
    F = D.ctx
    if not C:
        raise errors.DivisionByZero('zero denominator')
    if not B or not D:
        raise errors.SquareDiscriminant('B = 0 or D = 0: the element is rational')
    S, m, u = poly_squarefree_split(D)
    ru = F.sqrt(u.v)
    if S.deg == 0:
        if ru is None:
            raise errors.NotInLaurentField(f'sqrt({D}) is not in F_q((1/Y)): leading unit is a non-square')
        raise errors.SquareDiscriminant(f'{D} is a square; the element is rational')
    if S.deg % 2:
        raise errors.NotInLaurentField(f'sqrt({D}) is not in F_q((1/Y)): odd degree')
    if ru is None:
        raise errors.NotInLaurentField(f'sqrt({D}) is not in F_q((1/Y)): leading coefficient is a non-square')
    return quad(A, B * m * Fq(F, ru), C, S)


def surd_conjugate(f):
    return f.conjugate()


@dataclass(frozen=True)
class Moebius:
    """2x2 matrix with polynomial entries acting by z -> (a z + b)/(c z + d)."""

    a: Poly
    b: Poly
    c: Poly
    d: Poly

    @classmethod
    def identity(cls, ctx):
        return cls(ctx.one, ctx.zero, ctx.zero, ctx.one)

    @classmethod
    def inversion(cls, ctx):
        return cls(ctx.zero, ctx.one, ctx.one, ctx.zero)

    @classmethod
    def diag(cls, x, y):
        z = x.ctx.zero
        return cls(x, z, z, y)

    @classmethod
    def translation(cls, b):
        F = b.ctx
        return cls(F.one, b, F.zero, F.one)

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    def __matmul__(self, o):
        return Moebius(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                       self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def __call__(self, f):
        return surd_moebius(self, f)


def surd_moebius(M, f):
    """(a f + b)/(c f + d), rationalized by the conjugate of the denominator."""
    if not M.det:
        raise errors.SingularMatrix('singular matrix')
    S = f.S
    X1 = M.a * f.A + M.b * f.C
    Y1 = M.a * f.B
    X2 = M.c * f.A + M.d * f.C
    Y2 = M.c * f.B
    num_a = X1 * X2 - Y1 * Y2 * S
    num_b = Y1 * X2 - X1 * Y2
    den = X2 * X2 - Y2 * Y2 * S
    return quad(num_a, num_b, den, S)


def surd_vinf(f):
    """Exact valuation at infinity of (A + B*sqrt(S))/C.

    When the leading terms of A and B*sqrt(S) cancel they add up in the
    conjugate (p is odd), so the valuation follows from the norm.
    """
    A, B, C, S = f.A, f.B, f.C, f.S
    if not B:
        return A.vinf + C.deg if A else math.inf
    d = S.deg // 2
    if A and A.deg == B.deg + d and f.ctx.add(A.c[-1], B.c[-1]) == 0:
        N = A * A - B * B * S
        return -N.deg + A.deg + C.deg
    return -max(A.deg, B.deg + d) + C.deg


def surd_integral_part(f, method='exact'):
    """[f] in R.

    'exact' uses [A + B sqrt S] = A + [B sqrt S] and one polynomial division.
    'series' reads the polynomial part off a Laurent embedding with guard
    coefficients, doubling the guard until the precision suffices.
    """
    if method == 'exact':
        r = poly_part_of_sqrt_multiple(f.B, f.S)
        return (f.A + r) // f.C
    if method != 'series':
        raise ValueError(f'unknown method {method!r}')
    guard = 8
    while True:
        prec = max(f.C.deg + max(f.B.deg, 0) + f.S.deg // 2 + guard, 1)
        try:
            return lau_int_frac(surd_to_laurent(f, prec))[0]
        except errors.InsufficientPrecision:
            guard *= 2


def surd_to_laurent(f, prec):
    """Laurent expansion of f known exactly through index prec - 1."""
    if prec < 1 and isinstance(f, Surd):
        prec = max(prec, 1 - f.S.deg)
    F = f.ctx
    A, B, C = f.A, f.B, f.C
    if not B:
        num = lau_from_poly(A)
    else:
        degC = C.deg
        s = sqrt_series(f.S, prec - degC + max(B.deg, 0))
        num = lau_from_poly(A) + lau_from_poly(B) * s
    if C.deg == 0:
        return num.truncate(prec) if num.prec > prec else num
    w = max(A.deg if A else 0, (B.deg + f.S.deg // 2) if B else 0)
    n_inv = prec + w - C.deg + 1
    inv = lau_from_poly(C)
    from .laurent import lau_inv
    out = num * lau_inv(inv, max(n_inv, 1))
    if out.prec < prec:  # pragma: no cover - guarded by the choice of n_inv
        raise errors.InsufficientPrecision('embedding lost precision')
    return out.truncate(prec)


def surd_trace_norm(f):
    """(f + f^sigma, f * f^sigma) as reduced fractions (num, den), den monic."""
    F = f.ctx

    def frac(n, d):
        if not n:
            return F.zero, F.one
        g = poly_gcd(n, d)
        n, d = n // g, d // g
        u = Fq(F, F.inv(d.c[-1]))
        return n * u, d * u

    tr = frac(f.A * 2, f.C)
    nm = frac(f.A * f.A - f.B * f.B * f.S, f.C * f.C)
    return tr, nm


def parse_surd(ctx, text):
    """Read ``A|B|C|S`` (polynomial literals) as (A + B*sqrt(S))/C."""
    parts = text.split('|')
    if len(parts) != 4:
        raise errors.ParseError(f'surd literal needs four |-separated fields, got {text!r}')
    A, B, C, D = (parse_poly(ctx, t) for t in parts)
    return surd_canonicalize(A, B, C, D)
