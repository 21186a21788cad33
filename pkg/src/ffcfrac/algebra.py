"""Exact arithmetic in F_q (q = p^e, p odd) and in R = F_q[Y].

Field elements are encoded as ints in range(q): for e = 1 the residue mod p,
for e > 1 the base-p number whose digits are the coefficients (ascending) of
the element as a polynomial in t modulo the defining polynomial.  ``Poly``
stores these encodings in a tuple, ascending degree, with no trailing zeros.
``Fq`` wraps a single encoding for user-facing element arithmetic.

Integers mixed into arithmetic (``2 * f``, ``f - 1``) are read in the prime
subfield, i.e. reduced mod p.
"""

import functools
import itertools
import math

import sympy

from . import errors
from .kernels import GenericFieldOps, PrimeFieldOps

NEG_INF = -math.inf

__all__ = [
    'NEG_INF', 'FieldCtx', 'Fq', 'Poly', 'fq_ctx_make', 'fq_sqrt',
    'poly_divmod', 'poly_gcd', 'poly_xgcd', 'poly_powmod',
    'poly_is_irreducible', 'poly_squarefree_split', 'polys_of_degree',
    'polys_below', 'monic_polys', 'parse_poly',
]


class FieldCtx:
    """The coefficient field F_q.  Build through :func:`fq_ctx_make`."""

    def __init__(self, p, e=1, modulus=None):
        self.p = p
        self.e = e
        self.modulus = tuple(modulus) if modulus is not None else None
        self.q = p ** e
        self._ops = None
        if e > 1:
            self._build_tables()

    # contexts are compared and pickled by their defining data only
    def __eq__(self, other):
        return (isinstance(other, FieldCtx) and self.p == other.p
                and self.e == other.e and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __reduce__(self):
        return (fq_ctx_make, (self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return f'GF({self.p})'
        return f'GF({self.p}^{self.e}, modulus={list(self.modulus)})'

    @property
    def ops(self):
        if self._ops is None:
            self._ops = PrimeFieldOps(self.p) if self.e == 1 else GenericFieldOps(self)
        return self._ops

    def use_backend(self, backend):
        """Pin the kernel backend ('python' or 'cython') for prime fields."""
        if self.e != 1:
            raise ValueError('backend choice applies to prime fields only')
        self._ops = PrimeFieldOps(self.p, backend)

    # -- extension-field tables ------------------------------------------

    def _digits(self, a):
        p = self.p
        d = []
        for _ in range(self.e):
            a, r = divmod(a, p)
            d.append(r)
        return d

    def _encode(self, digits):
        v = 0
        for x in reversed(digits):
            v = v * self.p + x
        return v

    def _polymulmod(self, a, b):
        p, e, m = self.p, self.e, self.modulus
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for k in range(len(prod) - 1, e - 1, -1):
            c = prod[k]
            if c:
                for j in range(e + 1):
                    prod[k - e + j] = (prod[k - e + j] - c * m[j]) % p
        return prod[:e]

    def _build_tables(self):
        q, p = self.q, self.p
        self._dig = [tuple(self._digits(a)) for a in range(q)]
        if q * q <= 1 << 22:
            dig = self._dig
            enc = self._encode
            self._add = [[enc([(x + y) % p for x, y in zip(dig[a], dig[b])])
                          for b in range(q)] for a in range(q)]
        else:
            self._add = None
        primes = list(sympy.primefactors(q - 1))
        for g in range(2, q):
            gd = list(self._dig[g])
            if all(self._power_digits(gd, (q - 1) // r) != [1] + [0] * (self.e - 1)
                   for r in primes):
                break
        else:  # pragma: no cover - a finite field always has a generator
            raise RuntimeError('no primitive element found')
        self._exp = [0] * (2 * (q - 1))
        self._log = [0] * q
        cur = [1] + [0] * (self.e - 1)
        for k in range(q - 1):
            a = self._encode(cur)
            self._exp[k] = a
            self._log[a] = k
            cur = self._polymulmod(cur, gd)
        for k in range(q - 1, 2 * (q - 1)):
            self._exp[k] = self._exp[k - (q - 1)]

    def _power_digits(self, gd, n):
        result = [1] + [0] * (self.e - 1)
        base = list(gd)
        while n:
            if n & 1:
                result = self._polymulmod(result, base)
            base = self._polymulmod(base, base)
            n >>= 1
        return result

    # -- element operations on encodings ----------------------------------

    def add(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a][b]
        p = self.p
        return self._encode([(x + y) % p for x, y in zip(self._dig[a], self._dig[b])])

    def neg(self, a):
        if self.e == 1:
            return -a % self.p
        p = self.p
        return self._encode([-x % p for x in self._dig[a]])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.e == 1:
            return a * b % self.p
        if not a or not b:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if not a:
            raise errors.DivisionByZero('inverse of zero in F_q')
        if self.e == 1:
            return pow(a, -1, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def pow(self, a, n):
        if self.e == 1:
            return pow(a, n, self.p)
        if not a:
            if n < 0:
                raise errors.DivisionByZero('inverse of zero in F_q')
            return 0 if n else 1
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def from_int(self, n):
        """Image of the integer n in the prime subfield."""
        return n % self.p

    def is_square(self, a):
        if not a:
            return True
        if self.e == 1:
            return pow(a, (self.p - 1) // 2, self.p) == 1
        return self._log[a] % 2 == 0

    def sqrt(self, a):
        """Canonical square root (smaller encoding) of a, or None."""
        if not a:
            return 0
        if self.e == 1:
            if not self.is_square(a):
                return None
            return min(sympy.sqrt_mod(a, self.p, all_roots=True))
        k = self._log[a]
        if k % 2:
            return None
        r = self._exp[k // 2]
        return min(r, self.neg(r))

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    def element_str(self, a):
        if a < self.p:
            return str(a)
        terms = []
        for i, d in reversed(list(enumerate(self._digits(a)))):
            if not d:
                continue
            mono = '' if i == 0 else ('t' if i == 1 else f't^{i}')
            if not mono:
                terms.append(str(d))
            else:
                terms.append(mono if d == 1 else f'{d}*{mono}')
        return '(' + '+'.join(terms) + ')'

    # -- convenience constructors ------------------------------------------

    def __call__(self, n):
        return Fq(self, self.from_int(n))

    def poly(self, coeffs=()):
        return Poly(self, coeffs)

    @property
    def Y(self):
        return Poly._raw(self, [0, 1])

    @property
    def one(self):
        return Poly._raw(self, [1])

    @property
    def zero(self):
        return Poly._raw(self, [])


@functools.lru_cache(maxsize=None)
def _cached_ctx(p, e, modulus):
    return FieldCtx(p, e, modulus)


def fq_ctx_make(p, e=1, modulus=None):
    """Validated field context for F_{p^e}.

    ``modulus`` (required iff e > 1) is a monic irreducible polynomial of
    degree e over F_p, given as a Poly over GF(p) or ascending coefficients.
    """
    if not isinstance(p, int) or p < 2 or not sympy.isprime(p):
        raise errors.NotPrime(f'p = {p} is not prime')
    if p == 2:
        raise errors.EvenCharacteristic('characteristic 2 is not supported')
    if not isinstance(e, int) or e < 1:
        raise errors.FFCFError('extension degree e must be a positive integer')
    if e == 1:
        if modulus is not None:
            raise errors.FFCFError('modulus is only meaningful for e > 1')
        return _cached_ctx(p, 1, None)
    if modulus is None:
        raise errors.FFCFError('e > 1 needs a defining modulus')
    base = _cached_ctx(p, 1, None)
    m = modulus if isinstance(modulus, Poly) else Poly(base, modulus)
    if m.ctx != base:
        raise errors.FFCFError('modulus must have coefficients in F_p')
    if m.deg != e or m.c[-1] != 1:
        raise errors.FFCFError(f'modulus must be monic of degree {e}')
    if not poly_is_irreducible(m):
        raise errors.ReducibleModulus(f'{m} is reducible over F_{p}')
    return _cached_ctx(p, e, m.c)


class Fq:
    """An element of F_q."""

    __slots__ = ('ctx', 'v')

    def __init__(self, ctx, v):
        if not 0 <= v < ctx.q:
            raise ValueError(f'encoding {v} out of range for {ctx}')
        self.ctx = ctx
        self.v = v

    def _other(self, o):
        if isinstance(o, Fq):
            if o.ctx != self.ctx:
                raise ValueError('elements of different fields')
            return o.v
        if isinstance(o, int):
            return self.ctx.from_int(o)
        return None

    def __add__(self, o):
        b = self._other(o)
        return NotImplemented if b is None else Fq(self.ctx, self.ctx.add(self.v, b))

    __radd__ = __add__

    def __sub__(self, o):
        b = self._other(o)
        return NotImplemented if b is None else Fq(self.ctx, self.ctx.sub(self.v, b))

    def __rsub__(self, o):
        b = self._other(o)
        return NotImplemented if b is None else Fq(self.ctx, self.ctx.sub(b, self.v))

    def __mul__(self, o):
        b = self._other(o)
        return NotImplemented if b is None else Fq(self.ctx, self.ctx.mul(self.v, b))

    __rmul__ = __mul__

    def __truediv__(self, o):
        b = self._other(o)
        return NotImplemented if b is None else Fq(self.ctx, self.ctx.mul(self.v, self.ctx.inv(b)))

    def __rtruediv__(self, o):
        b = self._other(o)
        return NotImplemented if b is None else Fq(self.ctx, self.ctx.mul(b, self.ctx.inv(self.v)))

    def __neg__(self):
        return Fq(self.ctx, self.ctx.neg(self.v))

    def __pow__(self, n):
        return Fq(self.ctx, self.ctx.pow(self.v, n))

    def inverse(self):
        return Fq(self.ctx, self.ctx.inv(self.v))

    def __eq__(self, o):
        b = self._other(o)
        return b is not None and b == self.v

    def __hash__(self):
        return hash((self.ctx, self.v))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __str__(self):
        return self.ctx.element_str(self.v)

    def __repr__(self):
        return f'Fq({self.ctx!r}, {self.v})'


def fq_sqrt(x):
    """Canonical square root of x, or None when x is not a square."""
    r = x.ctx.sqrt(x.v)
    return None if r is None else Fq(x.ctx, r)


class Poly:
    """Immutable polynomial in F_q[Y]."""

    __slots__ = ('ctx', 'c')

    def __init__(self, ctx, coeffs=()):
        cs = []
        for x in coeffs:
            if isinstance(x, Fq):
                if x.ctx != ctx:
                    raise ValueError('coefficient from a different field')
                cs.append(x.v)
            elif ctx.e == 1:
                cs.append(int(x) % ctx.p)
            else:
                x = int(x)
                if not 0 <= x < ctx.q:
                    raise ValueError(f'encoding {x} out of range for {ctx}')
                cs.append(x)
        while cs and not cs[-1]:
            cs.pop()
        self.ctx = ctx
        self.c = tuple(cs)

    @classmethod
    def _raw(cls, ctx, coeffs):
        obj = object.__new__(cls)
        obj.ctx = ctx
        obj.c = tuple(coeffs)
        return obj

    @classmethod
    def monomial(cls, ctx, k, coeff=1):
        if isinstance(coeff, Fq):
            coeff = coeff.v
        else:
            coeff = ctx.from_int(coeff)
        if not coeff:
            return ctx.zero
        return cls._raw(ctx, [0] * k + [coeff])

    @classmethod
    def constant(cls, ctx, coeff):
        return cls.monomial(ctx, 0, coeff)

    # -- basic accessors -------------------------------------------------

    @property
    def deg(self):
        return len(self.c) - 1 if self.c else NEG_INF

    @property
    def vinf(self):
        """Valuation at infinity: -deg, and +inf for the zero polynomial."""
        return -(len(self.c) - 1) if self.c else math.inf

    @property
    def lc(self):
        return Fq(self.ctx, self.c[-1]) if self.c else Fq(self.ctx, 0)

    def coefficient(self, i):
        return Fq(self.ctx, self.c[i] if 0 <= i < len(self.c) else 0)

    def __getitem__(self, i):
        return self.c[i] if 0 <= i < len(self.c) else 0

    def __len__(self):
        return len(self.c)

    def is_zero(self):
        return not self.c

    def is_constant(self):
        return len(self.c) <= 1

    def is_monic(self):
        return bool(self.c) and self.c[-1] == 1

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, o):
        if isinstance(o, Poly):
            return self.ctx == o.ctx and self.c == o.c
        if isinstance(o, (int, Fq)):
            try:
                return self.c == self._coerce(o).c
            except ValueError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.c))

    def __lt__(self, o):
        # deterministic order for sorting: by degree, then coefficients top-down
        return (len(self.c), self.c[::-1]) < (len(o.c), o.c[::-1])

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, o):
        if isinstance(o, Poly):
            if o.ctx != self.ctx:
                raise ValueError('polynomials over different fields')
            return o
        if isinstance(o, Fq):
            if o.ctx != self.ctx:
                raise ValueError('polynomials over different fields')
            return Poly._raw(self.ctx, [o.v] if o.v else [])
        if isinstance(o, int):
            v = self.ctx.from_int(o)
            return Poly._raw(self.ctx, [v] if v else [])
        raise TypeError(f'cannot combine Poly with {type(o).__name__}')

    def __add__(self, o):
        try:
            o = self._coerce(o)
        except TypeError:
            return NotImplemented
        return Poly._raw(self.ctx, self.ctx.ops.add(self.c, o.c))

    __radd__ = __add__

    def __sub__(self, o):
        try:
            o = self._coerce(o)
        except TypeError:
            return NotImplemented
        return Poly._raw(self.ctx, self.ctx.ops.sub(self.c, o.c))

    def __rsub__(self, o):
        try:
            o = self._coerce(o)
        except TypeError:
            return NotImplemented
        return Poly._raw(self.ctx, self.ctx.ops.sub(o.c, self.c))

    def __neg__(self):
        return Poly._raw(self.ctx, self.ctx.ops.neg(self.c))

    def __mul__(self, o):
        if isinstance(o, (int, Fq)):
            c = self._coerce(o)
            return Poly._raw(self.ctx, self.ctx.ops.scale(self.c, c.c[0]) if c.c else [])
        try:
            o = self._coerce(o)
        except TypeError:
            return NotImplemented
        return Poly._raw(self.ctx, self.ctx.ops.mul(self.c, o.c))

    __rmul__ = __mul__

    def __divmod__(self, o):
        return poly_divmod(self, self._coerce(o))

    def __floordiv__(self, o):
        return poly_divmod(self, self._coerce(o))[0]

    def __mod__(self, o):
        return poly_divmod(self, self._coerce(o))[1]

    def __pow__(self, n):
        if n < 0:
            raise ValueError('negative powers are not polynomials')
        result, base = self.ctx.one, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exact_div(self, o):
        """self / o, raising when o does not divide self."""
        q, r = poly_divmod(self, self._coerce(o))
        if r:
            raise ArithmeticError(f'{o} does not divide {self}')
        return q

    def monic(self):
        if not self.c or self.c[-1] == 1:
            return self
        return self * Fq(self.ctx, self.ctx.inv(self.c[-1]))

    def derivative(self):
        F = self.ctx
        return Poly._raw(F, _trimmed([F.mul(F.from_int(i), x) for i, x in enumerate(self.c)][1:]))

    def shift(self, k):
        """Multiply by Y^k (k >= 0)."""
        if not self.c:
            return self
        return Poly._raw(self.ctx, (0,) * k + self.c)

    # -- text ---------------------------------------------------------------

    def literal(self):
        """Comma-separated ascending coefficient encodings."""
        return ','.join(str(x) for x in self.c) if self.c else '0'

    def __str__(self):
        if not self.c:
            return '0'
        F = self.ctx
        terms = []
        for k in range(len(self.c) - 1, -1, -1):
            x = self.c[k]
            if not x:
                continue
            cs = F.element_str(x)
            if k == 0:
                terms.append(cs)
                continue
            mono = 'Y' if k == 1 else f'Y^{k}'
            terms.append(mono if x == 1 else f'{cs}*{mono}')
        return '+'.join(terms)

    def __repr__(self):
        return f'Poly({self.ctx!r}, {list(self.c)})'


def _trimmed(cs):
    while cs and not cs[-1]:
        cs.pop()
    return cs


def parse_poly(ctx, text):
    """Read a polynomial literal such as ``1,0,1`` (= Y^2 + 1)."""
    text = text.strip()
    if not text:
        raise errors.ParseError('empty polynomial literal (write 0 for zero)')
    coeffs = []
    for tok in text.split(','):
        tok = tok.strip()
        try:
            v = int(tok)
        except ValueError:
            raise errors.ParseError(f'bad coefficient {tok!r} in polynomial literal {text!r}') from None
        if not 0 <= v < ctx.q:
            raise errors.ParseError(f'coefficient {v} out of range 0..{ctx.q - 1}')
        coeffs.append(v)
    return Poly(ctx, coeffs)


def poly_divmod(a, b):
    if not b.c:
        raise errors.DivisionByZero('polynomial division by zero')
    q, r = a.ctx.ops.divmod(a.c, b.c)
    return Poly._raw(a.ctx, q), Poly._raw(a.ctx, r)


def poly_gcd(a, b):
    """Monic gcd of a and b."""
    if not a.c and not b.c:
        raise errors.BothZero('gcd(0, 0) is undefined')
    ops = a.ctx.ops
    x, y = a.c, b.c
    while y:
        x, y = y, ops.divmod(x, y)[1]
    return Poly._raw(a.ctx, x).monic()


def poly_xgcd(a, b):
    """(g, s, t) with g = s*a + t*b monic."""
    if not a.c and not b.c:
        raise errors.BothZero('gcd(0, 0) is undefined')
    F = a.ctx
    r0, r1 = a, b
    s0, s1 = F.one, F.zero
    t0, t1 = F.zero, F.one
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    u = Fq(F, F.inv(r0.c[-1]))
    return r0 * u, s0 * u, t0 * u


def poly_powmod(a, n, m):
    result = m.ctx.one % m
    base = a % m
    while n:
        if n & 1:
            result = (result * base) % m
        n >>= 1
        if n:
            base = (base * base) % m
    return result


def poly_is_irreducible(P):
    """Rabin's irreducibility test over F_q."""
    if P.deg < 1:
        raise errors.ConstantInput('irreducibility needs deg P >= 1')
    n = P.deg
    if n == 1:
        return True
    M = P.monic()
    Y = M.ctx.Y
    q = M.ctx.q
    frob = [Y % M]
    for _ in range(n):
        frob.append(poly_powmod(frob[-1], q, M))
    if frob[n] != Y % M:
        return False
    for r in sympy.primefactors(n):
        if poly_gcd(frob[n // r] - Y, M).deg != 0:
            return False
    return True


def _pth_root(f):
    F = f.ctx
    p = F.p
    # inverse Frobenius on coefficients: a -> a^(p^(e-1))
    k = p ** (F.e - 1)
    return Poly._raw(F, _trimmed([F.pow(f.c[i], k) for i in range(0, len(f.c), p)]))


def _sqf(f):
    """Squarefree decomposition of a monic f: list of (factor, multiplicity)."""
    out = []
    i = 1
    c = poly_gcd(f, f.derivative())
    w = f.exact_div(c)
    while w.deg > 0:
        y = poly_gcd(w, c)
        fac = w.exact_div(y)
        if fac.deg > 0:
            out.append((fac, i))
        i += 1
        w = y
        c = c.exact_div(y)
    if c.deg > 0:
        for g, m in _sqf(_pth_root(c)):
            out.append((g, m * f.ctx.p))
    return out


def poly_squarefree_split(D):
    """Split D = u * S * m^2 with S monic squarefree and m monic.

    Returns (S, m, u) with u in F_q^x.
    """
    if not D.c:
        raise errors.ZeroInput('squarefree split of the zero polynomial')
    F = D.ctx
    u = D.lc
    S, m = F.one, F.one
    for g, k in _sqf(D.monic()):
        if k % 2:
            S = S * g
        if k >= 2:
            m = m * g ** (k // 2)
    return S, m, u


def polys_of_degree(ctx, d):
    """All polynomials of exact degree d >= 0."""
    for lead in range(1, ctx.q):
        for low in itertools.product(range(ctx.q), repeat=d):
            yield Poly._raw(ctx, low + (lead,))


def monic_polys(ctx, d):
    for low in itertools.product(range(ctx.q), repeat=d):
        yield Poly._raw(ctx, low + (1,))


def polys_below(ctx, d):
    """All polynomials of degree < d, zero first (q^d of them)."""
    for cs in itertools.product(range(ctx.q), repeat=d):
        yield Poly(ctx, cs)
