"""Seeded generators and independent oracles shared by the tests."""

import itertools
import random
from fractions import Fraction

from ffcfrac import errors
from ffcfrac.algebra import Poly, monic_polys, poly_divmod
from ffcfrac.cfe import artin_step
from ffcfrac.surd import surd_canonicalize, surd_integral_part


def rand_poly(F, rng, d, monic=False):
    """Random polynomial of exact degree d (zero for d < 0)."""
    if d < 0:
        return F.zero
    lead = 1 if monic else rng.randrange(1, F.q)
    return Poly(F, [rng.randrange(F.q) for _ in range(d)] + [lead])


def rand_surd(F, rng, deg_S=(2, 4), max_deg=3):
    """Random canonical surd with a kernel of degree in deg_S."""
    while True:
        D = rand_poly(F, rng, rng.choice(deg_S), monic=True)
        A = rand_poly(F, rng, rng.randrange(-1, max_deg + 1))
        B = rand_poly(F, rng, rng.randrange(0, max_deg))
        C = rand_poly(F, rng, rng.randrange(0, max_deg), monic=True)
        try:
            f = surd_canonicalize(A, B, C, D)
        except (errors.SquareDiscriminant, errors.NotInLaurentField):
            continue
        if f.S.deg in deg_S:
            return f


def rand_reduced(F, rng, deg_S=(2, 4)):
    """Random point on a Psi-cycle, which is reduced."""
    from ffcfrac.cfe import cfe_reduce
    return cfe_reduce(rand_surd(F, rng, deg_S))[1]


# -- oracles ---------------------------------------------------------------

def trial_irreducible(P):
    """Trial division by every monic polynomial of degree 1..deg P // 2."""
    F = P.ctx
    for d in range(1, P.deg // 2 + 1):
        for g in monic_polys(F, d):
            if not poly_divmod(P, g)[1]:
                return False
    return True


def oracle_period(f):
    """Period of f by iterating Psi on surd objects until a surd repeats.

    Digits come from the series route of the integral part, so neither the
    orbit kernel nor the exact integral-part shortcut is involved.
    """
    a0 = surd_integral_part(f, method='series')
    x = f - a0
    seen, digits, pts = {}, [], []
    while x not in seen:
        seen[x] = len(pts)
        pts.append(x)
        inv = x.inverse()
        a = surd_integral_part(inv, method='series')
        digits.append(a)
        x = inv - a
    k = seen[x]
    return [a0] + digits[:k], digits[k:], pts[k:]


def oracle_row_fields(f, P, n, N=0):
    """CSV fields of one scan row, computed from oracle_period."""
    from ffcfrac.surd import Moebius, surd_moebius
    g = surd_moebius(Moebius.diag(P ** n, f.ctx.one), f) if n else f
    _, cyc, _ = oracle_period(g)
    degs = [a.deg for a in cyc]
    s, m = sum(degs), max(degs)
    hist = ';'.join(f'{d}:{degs.count(d)}' for d in sorted(set(degs)))
    return [str(n), str(len(cyc)), str(s), str(m), str(Fraction(m - N, s)), str(2 * s), str(m), hist]


def haar_cylinder_mass(F, digits):
    """Normalized Haar mass of a cylinder by enumerating balls in M.

    M is cut into q^K balls x + Y^-(K+1) O, x = sum_{i=1..K} c_i Y^-i, with
    K = 2 * sum(deg) + 1.  Every such ball lies in or misses the cylinder,
    so each is decided by one rational point of it: x + Y^-(K+1), whose
    finite expansion is longer than the cylinder (its denominator has degree
    K + 1).
    """
    K = 2 * sum(a.deg for a in digits) + 1
    den = Poly.monomial(F, K + 1)
    hits = 0
    for cs in itertools.product(range(F.q), repeat=K):
        # x + Y^-(K+1) = (sum c_i Y^(K+1-i) + 1) / Y^(K+1)
        num = Poly(F, [1] + [cs[K - j] for j in range(1, K + 1)])
        if _rational_digits(num, den, len(digits)) == list(digits):
            hits += 1
    return Fraction(hits, F.q ** K)


def _rational_digits(num, den, k):
    """First k digits a_1..a_k of num/den in M (fewer if it terminates)."""
    out = []
    while len(out) < k and num:
        a, r = poly_divmod(den, num)
        out.append(a)
        den, num = num, r
    return out


def brute_sqrt_coeffs(F, f_coeffs, val, n):
    """First n coefficients of sqrt by trying every field element in turn."""
    fc = dict(enumerate(f_coeffs))
    g = []
    for k in range(n):
        for x in range(F.q):
            if k == 0 and x != F.sqrt(f_coeffs[0]):
                continue
            trial = g + [x]
            s = 0
            for i in range(k + 1):
                s = F.add(s, F.mul(trial[i], trial[k - i]))
            if s == fc.get(k, 0):
                g = trial
                break
        else:
            raise AssertionError('no root coefficient')
    return g


def seeded(seed):
    return random.Random(seed)
