# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for polynomial and power-series arithmetic over GF(p).

Same functions and signatures as ``_kernels_py``.  Coefficients live in
64-bit integers, so callers must keep p below 2**31.
"""

from libcpp.vector cimport vector
from libcpp.map cimport map as cmap
from cython.operator cimport dereference as deref

ctypedef long long i64
ctypedef vector[i64] vec

cdef enum:
    CUTOFF = 64


cdef vec _vec(object a):
    cdef vec v
    v.reserve(len(a))
    for x in a:
        v.push_back(x)
    return v


cdef list _list(const vec& v):
    cdef size_t i
    return [v[i] for i in range(v.size())]


cdef inline void _trim(vec& a) nogil:
    while a.size() and a.back() == 0:
        a.pop_back()


cdef inline i64 _md(i64 x, i64 p) nogil:
    x %= p
    return x + p if x < 0 else x


cdef i64 _inv(i64 a, i64 p) nogil:
    cdef i64 t = 0, nt = 1, r = p, nr = _md(a, p), q, tmp
    while nr:
        q = r // nr
        tmp = t - q * nt
        t = nt
        nt = tmp
        tmp = r - q * nr
        r = nr
        nr = tmp
    return _md(t, p)


cdef vec _add(const vec& a, const vec& b, i64 p) nogil:
    cdef size_t i, n = a.size() if a.size() > b.size() else b.size()
    cdef vec r = vec(n, 0)
    for i in range(a.size()):
        r[i] = a[i]
    for i in range(b.size()):
        r[i] = (r[i] + b[i]) % p
    _trim(r)
    return r


cdef vec _sub(const vec& a, const vec& b, i64 p) nogil:
    cdef size_t i, n = a.size() if a.size() > b.size() else b.size()
    cdef vec r = vec(n, 0)
    for i in range(a.size()):
        r[i] = a[i]
    for i in range(b.size()):
        r[i] = _md(r[i] - b[i], p)
    _trim(r)
    return r


cdef vec _neg(const vec& a, i64 p) nogil:
    cdef size_t i
    cdef vec r = vec(a.size(), 0)
    for i in range(a.size()):
        r[i] = _md(-a[i], p)
    return r


cdef vec _school(const vec& a, const vec& b, i64 p) nogil:
    cdef size_t i, j, na = a.size(), nb = b.size()
    cdef vec r = vec(na + nb - 1, 0)
    cdef i64 x
    for i in range(na):
        x = a[i]
        if x:
            for j in range(nb):
                r[i + j] = (r[i + j] + x * b[j]) % p
    return r


cdef vec _kara(vec a, vec b, i64 p) nogil:
    cdef size_t na = a.size(), nb = b.size(), n, h, i
    if na <= CUTOFF or nb <= CUTOFF:
        return _school(a, b, p)
    n = na if na > nb else nb
    a.resize(n, 0)
    b.resize(n, 0)
    h = n // 2
    cdef vec a0 = vec(a.begin(), a.begin() + h)
    cdef vec a1 = vec(a.begin() + h, a.end())
    cdef vec b0 = vec(b.begin(), b.begin() + h)
    cdef vec b1 = vec(b.begin() + h, b.end())
    cdef vec z0 = _kara(a0, b0, p)
    cdef vec z2 = _kara(a1, b1, p)
    for i in range(h):
        a1[i] = (a1[i] + a0[i]) % p
        b1[i] = (b1[i] + b0[i]) % p
    cdef vec z1 = _kara(a1, b1, p)
    for i in range(z0.size()):
        z1[i] = _md(z1[i] - z0[i], p)
    for i in range(z2.size()):
        z1[i] = _md(z1[i] - z2[i], p)
    cdef vec r = vec(2 * n - 1, 0)
    for i in range(z0.size()):
        r[i] = z0[i]
    for i in range(z1.size()):
        r[i + h] = (r[i + h] + z1[i]) % p
    for i in range(z2.size()):
        r[i + 2 * h] = (r[i + 2 * h] + z2[i]) % p
    r.resize(na + nb - 1)
    return r


cdef vec _mul(const vec& a, const vec& b, i64 p) nogil:
    cdef vec r
    if a.size() == 0 or b.size() == 0:
        return r
    r = _kara(a, b, p)
    _trim(r)
    return r


cdef void _divmod(const vec& a, const vec& b, i64 p, vec& q, vec& r) nogil:
    cdef size_t nb = b.size(), k, j, top
    cdef i64 inv, c
    r = a
    q.clear()
    if r.size() < nb:
        return
    inv = _inv(b[nb - 1], p)
    q.assign(r.size() - nb + 1, 0)
    k = r.size() - nb + 1
    while k > 0:
        k -= 1
        top = k + nb - 1
        c = r[top] * inv % p
        if c:
            q[k] = c
            for j in range(nb - 1):
                r[k + j] = _md(r[k + j] - c * b[j], p)
        r[top] = 0
    r.resize(nb - 1)
    _trim(q)
    _trim(r)


def padd(a, b, i64 p):
    return _list(_add(_vec(a), _vec(b), p))


def psub(a, b, i64 p):
    return _list(_sub(_vec(a), _vec(b), p))


def pneg(a, i64 p):
    return _list(_neg(_vec(a), p))


def pscale(a, c, i64 p):
    cdef i64 cc = c % p
    if not cc:
        return []
    return [x * cc % p for x in a]


def pmul(a, b, i64 p):
    return _list(_mul(_vec(a), _vec(b), p))


def pdivmod(a, b, i64 p):
    if not len(b):
        raise ZeroDivisionError('polynomial division by zero')
    cdef vec q, r
    _divmod(_vec(a), _vec(b), p, q, r)
    return _list(q), _list(r)


def ser_inv(c, Py_ssize_t n, i64 p):
    cdef vec cc = _vec(c)
    cdef vec g = vec(n, 0)
    cdef size_t m = cc.size(), k, i, top
    cdef i64 g0, s
    if n == 0:
        return []
    g0 = _inv(cc[0], p)
    g[0] = g0
    for k in range(1, n):
        s = 0
        top = k if k < m - 1 else m - 1
        for i in range(1, top + 1):
            s = (s + cc[i] * g[k - i]) % p
        g[k] = _md(-s * g0, p)
    return _list(g)


def ser_sqrt(c, Py_ssize_t n, i64 r0, i64 p):
    cdef vec cc = _vec(c)
    cdef vec s = vec(n, 0)
    cdef size_t m = cc.size(), k, i, half
    cdef i64 acc, ck, inv2r
    if n == 0:
        return []
    inv2r = _inv(2 * r0, p)
    s[0] = _md(r0, p)
    for k in range(1, n):
        acc = 0
        half = (k - 1) // 2
        for i in range(1, half + 1):
            acc = (acc + s[i] * s[k - i]) % p
        acc = 2 * acc % p
        if k % 2 == 0:
            acc = (acc + s[k // 2] * s[k // 2]) % p
        ck = cc[k] if k < m else 0
        s[k] = _md((ck - acc) % p * inv2r, p)
    return _list(s)


def artin_orbit(P, Q, D, r, i64 p, Py_ssize_t budget):
    cdef vec vP = _vec(P), vQ = _vec(Q), vD = _vec(D), vr = _vec(r)
    cdef vec P1, Q1, rem, a, key, tmp, junk
    cdef cmap[vec, Py_ssize_t] seen
    cdef cmap[vec, Py_ssize_t].iterator it
    cdef Py_ssize_t count = 0
    Ps, Qs, digits = [], [], []
    while True:
        key = vP
        key.push_back(-1)
        key.insert(key.end(), vQ.begin(), vQ.end())
        it = seen.find(key)
        if it != seen.end():
            return Ps, Qs, digits, deref(it).second
        if count >= budget:
            return Ps, Qs, digits, -1
        seen[key] = count
        count += 1
        Ps.append(_list(vP))
        Qs.append(_list(vQ))
        P1 = _neg(vP, p)
        tmp = _sub(vD, _mul(P1, P1, p), p)
        _divmod(tmp, vQ, p, Q1, rem)
        if rem.size():
            raise ArithmeticError('state invariant Q | D - P^2 violated')
        _divmod(_add(P1, vr, p), Q1, p, a, junk)
        digits.append(_list(a))
        vP = _sub(P1, _mul(a, Q1, p), p)
        vQ = Q1
