"""Univariate polynomials over the supported exact fields, with factorization.

Factorization is available over Q and F_p only.  Over F_p it runs squarefree
decomposition, distinct-degree splitting and seeded Cantor-Zassenhaus
equal-degree splitting.  Over Q it clears denominators, reduces modulo a
good prime, lifts the modular factorization with Hensel steps and recombines
subsets of modular factors.  No lattice reduction: adequate for the small
degrees this package works at.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from . import fields
from .errors import BadSpec, UnsupportedField
from .fields import (Field, PrimeField, Rationals, pdeg, pdivmod, pgcd, pmod,
                     pmonic, pmul, pnormalize, ppowmod, pscale, psub, padd,
                     pderiv, peval)


class Poly:
    """Dense univariate polynomial; coefficients low degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        self.field = field
        self.coeffs = pnormalize(coeffs, field)

    @classmethod
    def from_ints(cls, field: Field, ints):
        return cls(field, [field.from_int(n) for n in ints])

    @classmethod
    def zero(cls, field: Field):
        return cls(field, ())

    @classmethod
    def one(cls, field: Field):
        return cls(field, (field.one,))

    @classmethod
    def x(cls, field: Field):
        return cls(field, (field.zero, field.one))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            return self.field.zero
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def monic(self) -> "Poly":
        return Poly(self.field, pmonic(self.coeffs, self.field))

    def __add__(self, other):
        fields.check_same_field(self.field, other.field)
        return Poly(self.field, padd(self.coeffs, other.coeffs, self.field))

    def __sub__(self, other):
        fields.check_same_field(self.field, other.field)
        return Poly(self.field, psub(self.coeffs, other.coeffs, self.field))

    def __neg__(self):
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        fields.check_same_field(self.field, other.field)
        return Poly(self.field, pmul(self.coeffs, other.coeffs, self.field))

    def scale(self, c):
        return Poly(self.field, pscale(self.coeffs, c, self.field))

    def __pow__(self, e: int):
        r = Poly.one(self.field)
        b = self
        while e > 0:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def divmod(self, other):
        q, r = pdivmod(self.coeffs, other.coeffs, self.field)
        return Poly(self.field, q), Poly(self.field, r)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def deriv(self):
        return Poly(self.field, pderiv(self.coeffs, self.field))

    def __call__(self, x):
        return peval(self.coeffs, x, self.field)

    def __eq__(self, other):
        return (isinstance(other, Poly) and other.field == self.field
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        K = self.field
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if K.is_zero(c):
                continue
            ct = K.text(c)
            if k == 0:
                terms.append(ct)
            else:
                var = "x" if k == 1 else f"x^{k}"
                terms.append(var if ct == "1" else f"({ct})*{var}")
        return "Poly(" + "+".join(terms) + ")"


def poly_gcd(f: Poly, g: Poly) -> Poly:
    fields.check_same_field(f.field, g.field)
    return Poly(f.field, pgcd(f.coeffs, g.coeffs, f.field))


# ---------------------------------------------------------------------------
# factorization over F_p
# ---------------------------------------------------------------------------

def _fp_sqf_list(f, K):
    """Squarefree decomposition of a monic f over F_p.

    Returns [(g, m)] with f = prod g^m, the g monic squarefree and pairwise
    coprime.  Handles the f' = 0 case by taking p-th roots (Frobenius is the
    identity on F_p, so the root of a coefficient is itself).
    """
    p = K.p
    factors = []
    n = 1
    while True:
        d = pderiv(f, K)
        if d:
            g = pgcd(f, d, K)
            h = pdivmod(f, g, K)[0]
            i = 1
            while pdeg(h) > 0:
                gg = pgcd(g, h, K)
                hh = pdivmod(h, gg, K)[0]
                if pdeg(hh) > 0:
                    factors.append((hh, i * n))
                g = pdivmod(g, gg, K)[0]
                h = gg
                i += 1
            if pdeg(g) == 0:
                break
            f = g
        # here every exponent in f is a multiple of p: take the p-th root
        root = [f[i] for i in range(0, len(f), p)]
        f = pnormalize(root, K)
        n *= p
    return factors


def _fp_ddf(f, K):
    """Distinct-degree splitting of a monic squarefree f over F_p."""
    p = K.p
    out = []
    x = (K.zero, K.one)
    h = x
    d = 0
    while pdeg(f) > 0 and 2 * (d + 1) <= pdeg(f):
        d += 1
        h = ppowmod(h, p, f, K)
        g = pgcd(f, psub(h, x, K), K)
        if pdeg(g) > 0:
            out.append((g, d))
            f = pdivmod(f, g, K)[0]
            h = pmod(h, f, K)
    if pdeg(f) > 0:
        out.append((f, pdeg(f)))
    return out


def _fp_edf(f, d, K, rng):
    """Cantor-Zassenhaus equal-degree splitting; f a monic squarefree
    product of irreducibles of degree d."""
    n = pdeg(f)
    if n == d:
        return [f]
    p = K.p
    while True:
        a = pnormalize([rng.randrange(p) for _ in range(n)], K)
        if pdeg(a) < 1:
            continue
        if p == 2:
            t = a
            acc = a
            for _ in range(d - 1):
                t = pmod(pmul(t, t, K), f, K)
                acc = padd(acc, t, K)
            g = pgcd(f, acc, K)
        else:
            e = (p ** d - 1) // 2
            b = ppowmod(a, e, f, K)
            g = pgcd(f, psub(b, (K.one,), K), K)
        if 0 < pdeg(g) < n:
            rest = pdivmod(f, g, K)[0]
            return _fp_edf(g, d, K, rng) + _fp_edf(rest, d, K, rng)


def _factor_fp(f, K, rng):
    out = []
    for g, m in _fp_sqf_list(pmonic(f, K), K):
        for h, d in _fp_ddf(g, K):
            for irr in _fp_edf(h, d, K, rng):
                out.append((irr, m))
    return out


# ---------------------------------------------------------------------------
# factorization over Q: Zassenhaus with Hensel lifting
# ---------------------------------------------------------------------------

def _ztrunc(f, m):
    """Reduce integer coefficients into the symmetric range (-m/2, m/2]."""
    half = m // 2
    out = []
    for c in f:
        c %= m
        if c > half:
            c -= m
        out.append(c)
    while out and out[-1] == 0:
        out.pop()
    return out


def _zadd(f, g):
    n = max(len(f), len(g))
    out = [(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)
           for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _zsub(f, g):
    return _zadd(f, [-c for c in g])


def _zmul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    while out and out[-1] == 0:
        out.pop()
    return out


def _zdivmod_monic(f, g, m):
    """Euclidean division by monic g, coefficients taken mod m (symmetric)."""
    f = list(f)
    q = [0] * max(0, len(f) - len(g) + 1)
    while len(f) >= len(g) and f:
        c = f[-1]
        d = len(f) - len(g)
        q[d] = c
        for i, b in enumerate(g):
            f[d + i] -= c * b
        while f and f[-1] == 0:
            f.pop()
    return _ztrunc(q, m), _ztrunc(f, m)


def _zcontent(f):
    c = 0
    for a in f:
        c = math.gcd(c, a)
    return c


def _zprimitive(f):
    c = _zcontent(f)
    if c == 0:
        return 0, []
    if f[-1] < 0:
        c = -c
    return c, [a // c for a in f]


def _hensel_step(m, f, g, h, s, t):
    """One quadratic Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod m)
    to the same congruences mod m**2.  h must be monic."""
    M = m * m
    e = _ztrunc(_zsub(f, _zmul(g, h)), M)
    q, r = _zdivmod_monic(_zmul(s, e), h, M)
    G = _ztrunc(_zadd(_zadd(g, _zmul(t, e)), _zmul(q, g)), M)
    H = _ztrunc(_zadd(h, r), M)
    u = _ztrunc(_zsub(_zadd(_zmul(s, G), _zmul(t, H)), [1]), M)
    c, d = _zdivmod_monic(_zmul(s, u), H, M)
    S = _ztrunc(_zsub(s, d), M)
    T = _ztrunc(_zsub(_zsub(t, _zmul(t, u)), _zmul(c, G)), M)
    return G, H, S, T


def _hensel_lift(p, f, fac, bound):
    """Lift the mod-p factorization lc(f)*prod(fac) of f to mod p**l with
    p**l >= bound.  fac holds monic mod-p factors as int lists; returns the
    lifted factors (symmetric representation) and the modulus."""
    ell = 1
    modulus = p
    while modulus < bound:
        modulus *= p
        ell += 1
    r = len(fac)
    lc = f[-1]
    if r == 1:
        inv = pow(lc % modulus, -1, modulus)
        return [_ztrunc([c * inv for c in f], modulus)], modulus
    K = PrimeField(p)
    k = r // 2
    g = [lc % p]
    for fi in fac[:k]:
        g = [c % p for c in _zmul(g, fi)]
    h = [1]
    for fi in fac[k:]:
        h = [c % p for c in _zmul(h, fi)]
    gt = pnormalize(g, K)
    ht = pnormalize(h, K)
    d, s, t = fields.pextgcd(gt, ht, K)
    if pdeg(d) != 0:
        raise BadSpec("modular factors not coprime")
    c = K.inv(d[0])
    s = _ztrunc(list(pscale(s, c, K)), p)
    t = _ztrunc(list(pscale(t, c, K)), p)
    g = _ztrunc(g, p)
    h = _ztrunc(h, p)
    m = p
    while m < modulus:
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m *= m
    left, _ = _hensel_lift(p, _ztrunc(g, modulus), fac[:k], bound)
    right, _ = _hensel_lift(p, _ztrunc(h, modulus), fac[k:], bound)
    return left + right, modulus


def _zz_divides(g, f):
    """Exact divisibility test of primitive integer polynomials, with the
    quotient when it divides."""
    QQ = Rationals()
    fq = tuple(Fraction(c) for c in f)
    gq = tuple(Fraction(c) for c in g)
    q, r = pdivmod(fq, gq, QQ)
    if r:
        return None
    return [int(c) for c in q]


def _zassenhaus(f, rng):
    """Factor a primitive squarefree integer polynomial with positive leading
    coefficient into irreducible primitive integer polynomials."""
    n = len(f) - 1
    if n == 1:
        return [f]
    norm = math.isqrt(sum(c * c for c in f)) + 1
    bound = 2 * (2 ** n) * norm * abs(f[-1]) + 1
    p = 2
    K = None
    while True:
        p = _next_prime(p)
        if f[-1] % p == 0:
            continue
        K = PrimeField(p)
        fp = pnormalize([c % p for c in f], K)
        if pdeg(fp) != n:
            continue
        if pdeg(pgcd(fp, pderiv(fp, K), K)) == 0:
            break
    modular = [list(g) for g, _ in _factor_fp(fp, K, rng)]
    modular.sort(key=lambda g: (len(g), g))
    if len(modular) == 1:
        return [f]
    lifted, modulus = _hensel_lift(p, f, modular, bound)
    result = []
    rest = list(f)
    avail = list(range(len(lifted)))
    size = 1
    while 2 * size <= len(avail):
        found = False
        for subset in _subsets(avail, size):
            cand = [rest[-1]]
            for i in subset:
                cand = _ztrunc(_zmul(cand, lifted[i]), modulus)
            _, cand = _zprimitive(cand)
            if not cand:
                continue
            quo = _zz_divides(cand, rest)
            if quo is not None:
                result.append(cand)
                _, rest = _zprimitive(quo)
                avail = [i for i in avail if i not in subset]
                found = True
                break
        if not found:
            size += 1
    if len(rest) > 1:
        result.append(rest)
    return result


def _next_prime(p):
    p += 1
    while not fields.is_prime(p):
        p += 1
    return p


def _subsets(items, size):
    import itertools
    return itertools.combinations(items, size)


def _qq_sqf_list(f, K):
    """Yun squarefree decomposition over Q for monic f."""
    out = []
    d = pgcd(f, pderiv(f, K), K)
    if pdeg(d) == 0:
        return [(f, 1)]
    b = pdivmod(f, d, K)[0]
    c = pdivmod(pderiv(f, K), d, K)[0]
    w = psub(c, pderiv(b, K), K)
    i = 1
    while pdeg(b) > 0:
        a = pgcd(b, w, K)
        if pdeg(a) > 0:
            out.append((a, i))
        b = pdivmod(b, a, K)[0]
        c = pdivmod(w, a, K)[0]
        w = psub(c, pderiv(b, K), K)
        i += 1
    return out


def _factor_qq(f, K, rng):
    out = []
    for g, m in _qq_sqf_list(pmonic(f, K), K):
        den = 1
        for c in g:
            den = den * c.denominator // math.gcd(den, c.denominator)
        zf = [int(c * den) for c in g]
        _, zf = _zprimitive(zf)
        for zfac in _zassenhaus(zf, rng):
            qfac = pmonic(tuple(Fraction(c) for c in zfac), K)
            out.append((qfac, m))
    return out


def factor(f: Poly, seed: int = 0):
    """Factor f into monic irreducibles over Q or F_p.

    Returns a list of (Poly, multiplicity) pairs such that the product of
    the powers times lc(f) equals f, sorted by degree then by coefficient
    sequence.  Inner randomized steps use the given seed.
    """
    if f.is_zero():
        raise BadSpec("cannot factor the zero polynomial")
    K = f.field
    rng = random.Random(seed)
    if isinstance(K, Rationals):
        raw = _factor_qq(f.coeffs, K, rng)
    elif isinstance(K, PrimeField):
        raw = _factor_fp(f.coeffs, K, rng)
    else:
        raise UnsupportedField(f"factorization over {K!r} is not supported")
    raw.sort(key=lambda item: (pdeg(item[0]), item[0]))
    return [(Poly(K, g), m) for g, m in raw]


def is_irreducible(f: Poly, seed: int = 0) -> bool:
    if f.degree < 1:
        return False
    fac = factor(f, seed)
    return len(fac) == 1 and fac[0][1] == 1
