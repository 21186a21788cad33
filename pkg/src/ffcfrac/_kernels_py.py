"""Pure-Python kernels for polynomial and power-series arithmetic over GF(p).

Polynomials are lists of ints in range(p), ascending degree, with no
trailing zeros ([] is the zero polynomial).  Power series in X = 1/Y use the
same layout but are read as coefficient windows and are never trimmed.

The compiled module ``_ckernels`` implements the same functions with the
same signatures; ``ffcfrac.kernels`` picks one at import.
"""

KARATSUBA_CUTOFF = 64


def trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def padd(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, x in enumerate(b):
        r[i] = (r[i] + x) % p
    return trim(r)


def psub(a, b, p):
    n = max(len(a), len(b))
    r = list(a) + [0] * (n - len(a))
    for i, x in enumerate(b):
        r[i] = (r[i] - x) % p
    return trim(r)


def pneg(a, p):
    return [(-x) % p for x in a]


def pscale(a, c, p):
    c %= p
    if not c:
        return []
    return [x * c % p for x in a]


def _school(a, b):
    # unreduced product, length len(a) + len(b) - 1
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return r


def _kara(a, b):
    na, nb = len(a), len(b)
    if na <= KARATSUBA_CUTOFF or nb <= KARATSUBA_CUTOFF:
        return _school(a, b)
    n = max(na, nb)
    if na < n:
        a = a + [0] * (n - na)
    if nb < n:
        b = b + [0] * (n - nb)
    h = n // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = _kara(a0, b0)
    z2 = _kara(a1, b1)
    sa = [x + y for x, y in zip(a1, a0 + [0] * (len(a1) - h))]
    sb = [x + y for x, y in zip(b1, b0 + [0] * (len(b1) - h))]
    z1 = _kara(sa, sb)
    for i, x in enumerate(z0):
        z1[i] -= x
    for i, x in enumerate(z2):
        z1[i] -= x
    r = [0] * (2 * n - 1)
    for i, x in enumerate(z0):
        r[i] += x
    for i, x in enumerate(z1):
        r[i + h] += x
    for i, x in enumerate(z2):
        r[i + 2 * h] += x
    del r[na + nb - 1:]
    return r


def pmul(a, b, p):
    if not a or not b:
        return []
    return trim([x % p for x in _kara(list(a), list(b))])


def pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError('polynomial division by zero')
    r = list(a)
    nb = len(b)
    if len(r) < nb:
        return [], r
    inv = pow(b[-1], -1, p)
    q = [0] * (len(r) - nb + 1)
    for k in range(len(r) - nb, -1, -1):
        c = r[k + nb - 1] * inv % p
        if c:
            q[k] = c
            for j in range(nb - 1):
                r[k + j] = (r[k + j] - c * b[j]) % p
        r[k + nb - 1] = 0
    return trim(q), trim(r[:nb - 1])


def ser_inv(c, n, p):
    """First n coefficients of 1/c for a series c with c[0] != 0."""
    g0 = pow(c[0], -1, p)
    m = len(c)
    g = [0] * n
    if n:
        g[0] = g0
    for k in range(1, n):
        s = 0
        for i in range(1, min(k, m - 1) + 1):
            s += c[i] * g[k - i]
        g[k] = -s * g0 % p
    return g


def ser_sqrt(c, n, r0, p):
    """First n coefficients of the square root of c with leading term r0.

    Needs r0 * r0 == c[0] (mod p) and p odd.  Coefficient k solves the
    linear equation 2*r0*s_k = c_k - sum_{0<i<k} s_i s_{k-i}.
    """
    inv2r = pow(2 * r0, -1, p)
    m = len(c)
    s = [0] * n
    if n:
        s[0] = r0 % p
    for k in range(1, n):
        acc = 0
        half = (k - 1) // 2
        for i in range(1, half + 1):
            acc += s[i] * s[k - i]
        acc *= 2
        if k % 2 == 0:
            acc += s[k // 2] * s[k // 2]
        ck = c[k] if k < m else 0
        s[k] = (ck - acc) * inv2r % p
    return s


def artin_orbit(P, Q, D, r, p, budget):
    """Iterate the surd recursion for the Artin map until a state repeats.

    A state (P, Q) stands for (P + sqrt(D))/Q in the maximal ideal, where
    r is the polynomial part of the fixed branch of sqrt(D).  Returns
    (Ps, Qs, digits, start): the visited states, the digit [1/x] read off
    at each of them, and the index of the state the orbit returns to.
    start is -1 when more than ``budget`` states were visited.
    """
    seen = {}
    Ps, Qs, digits = [], [], []
    P, Q = list(P), list(Q)
    while True:
        key = (tuple(P), tuple(Q))
        hit = seen.get(key)
        if hit is not None:
            return Ps, Qs, digits, hit
        if len(Ps) >= budget:
            return Ps, Qs, digits, -1
        seen[key] = len(Ps)
        Ps.append(P)
        Qs.append(Q)
        P1 = pneg(P, p)
        Q1, rem = pdivmod(psub(D, pmul(P1, P1, p), p), Q, p)
        if rem:
            raise ArithmeticError('state invariant Q | D - P^2 violated')
        a = pdivmod(padd(P1, r, p), Q1, p)[0]
        digits.append(a)
        P = psub(P1, pmul(a, Q1, p), p)
        Q = Q1
