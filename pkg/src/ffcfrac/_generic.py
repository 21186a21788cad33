"""Field-generic polynomial and series routines.

Used for extension fields GF(p^e), e > 1, whose elements are encoded as ints
and combined through the context's table-driven ``add``/``mul``/``inv``.
Layout conventions match ``_kernels_py``.  No Karatsuba here: extension
fields are a library convenience, the scan engine runs over prime fields.
"""


def trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def padd(a, b, F):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, x in enumerate(b):
        r[i] = F.add(r[i], x)
    return trim(r)


def pneg(a, F):
    return [F.neg(x) for x in a]


def psub(a, b, F):
    return padd(a, pneg(b, F), F)


def pscale(a, c, F):
    if not c:
        return []
    return [F.mul(x, c) for x in a]


def pmul(a, b, F):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    add, mul = F.add, F.mul
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    r[i + j] = add(r[i + j], mul(x, y))
    return trim(r)


def pdivmod(a, b, F):
    if not b:
        raise ZeroDivisionError('polynomial division by zero')
    r = list(a)
    nb = len(b)
    if len(r) < nb:
        return [], r
    inv = F.inv(b[-1])
    q = [0] * (len(r) - nb + 1)
    for k in range(len(r) - nb, -1, -1):
        c = F.mul(r[k + nb - 1], inv)
        if c:
            q[k] = c
            for j in range(nb - 1):
                r[k + j] = F.sub(r[k + j], F.mul(c, b[j]))
        r[k + nb - 1] = 0
    return trim(q), trim(r[:nb - 1])


def ser_inv(c, n, F):
    g0 = F.inv(c[0])
    m = len(c)
    g = [0] * n
    if n:
        g[0] = g0
    for k in range(1, n):
        s = 0
        for i in range(1, min(k, m - 1) + 1):
            s = F.add(s, F.mul(c[i], g[k - i]))
        g[k] = F.neg(F.mul(s, g0))
    return g


def ser_sqrt(c, n, r0, F):
    inv2r = F.inv(F.add(r0, r0))
    m = len(c)
    s = [0] * n
    if n:
        s[0] = r0
    for k in range(1, n):
        acc = 0
        for i in range(1, k):
            acc = F.add(acc, F.mul(s[i], s[k - i]))
        ck = c[k] if k < m else 0
        s[k] = F.mul(F.sub(ck, acc), inv2r)
    return s


def artin_orbit(P, Q, D, r, F, budget):
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
        P1 = pneg(P, F)
        Q1, rem = pdivmod(psub(D, pmul(P1, P1, F), F), Q, F)
        if rem:
            raise ArithmeticError('state invariant Q | D - P^2 violated')
        a = pdivmod(padd(P1, r, F), Q1, F)[0]
        digits.append(a)
        P = psub(P1, pmul(a, Q1, F), F)
        Q = Q1
