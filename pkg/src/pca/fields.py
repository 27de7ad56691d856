"""Exact base fields and their scalars.

Four field kinds are supported: the rationals, prime fields F_p, the
rational function field F_p(t), and simple extensions base[x]/(minpoly).
Scalars are plain hashable Python values kept in a canonical form, so
``==`` is semantic equality:

* rationals        -> ``fractions.Fraction`` in lowest terms
* F_p              -> ``int`` in [0, p)
* F_p(t)           -> ``RatFunc`` (reduced fraction, monic denominator)
* simple extension -> tuple of base scalars of length deg(minpoly)

All arithmetic goes through the field object (``K.add(a, b)`` etc.), never
through floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import BadSpec, DivisionByZero, FieldMismatch


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test, fine for n < 2**31."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# Dense univariate polynomial helpers over an arbitrary field object K.
# Polynomials are tuples of scalars, low degree first, no trailing zeros.
# These are shared by the function field, extension fields and poly module.
# ---------------------------------------------------------------------------

def pnormalize(cs, K):
    cs = list(cs)
    while cs and K.is_zero(cs[-1]):
        cs.pop()
    return tuple(cs)


def pdeg(f):
    return len(f) - 1


def padd(f, g, K):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else K.zero
        b = g[i] if i < len(g) else K.zero
        out.append(K.add(a, b))
    return pnormalize(out, K)


def pneg(f, K):
    return tuple(K.neg(c) for c in f)


def psub(f, g, K):
    return padd(f, pneg(g, K), K)


def pmul(f, g, K):
    if not f or not g:
        return ()
    out = [K.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if K.is_zero(a):
            continue
        for j, b in enumerate(g):
            if K.is_zero(b):
                continue
            out[i + j] = K.add(out[i + j], K.mul(a, b))
    return pnormalize(out, K)


def pscale(f, c, K):
    if K.is_zero(c):
        return ()
    return pnormalize([K.mul(c, a) for a in f], K)


def pmonic(f, K):
    if not f:
        return f
    lc = f[-1]
    if lc == K.one:
        return f
    return pscale(f, K.inv(lc), K)


def pdivmod(f, g, K):
    if not g:
        raise DivisionByZero("polynomial division by zero")
    f = list(f)
    q = [K.zero] * max(0, len(f) - len(g) + 1)
    inv_lc = K.inv(g[-1])
    while len(f) >= len(g) and f:
        c = K.mul(f[-1], inv_lc)
        d = len(f) - len(g)
        q[d] = c
        for i, b in enumerate(g):
            f[d + i] = K.sub(f[d + i], K.mul(c, b))
        while f and K.is_zero(f[-1]):
            f.pop()
    return pnormalize(q, K), pnormalize(f, K)


def pmod(f, g, K):
    return pdivmod(f, g, K)[1]


def pgcd(f, g, K):
    while g:
        f, g = g, pmod(f, g, K)
    return pmonic(f, K)


def pextgcd(f, g, K):
    """Return (d, s, t) with s*f + t*g = d, d the monic gcd."""
    r0, r1 = f, g
    s0, s1 = (K.one,), ()
    t0, t1 = (), (K.one,)
    while r1:
        q, r = pdivmod(r0, r1, K)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1, K), K)
        t0, t1 = t1, psub(t0, pmul(q, t1, K), K)
    if not r0:
        return (), s0, t0
    lc_inv = K.inv(r0[-1])
    return pscale(r0, lc_inv, K), pscale(s0, lc_inv, K), pscale(t0, lc_inv, K)


def peval(f, x, K):
    acc = K.zero
    for c in reversed(f):
        acc = K.add(K.mul(acc, x), c)
    return acc


def pderiv(f, K):
    out = []
    for i in range(1, len(f)):
        out.append(K.mul(K.from_int(i), f[i]))
    return pnormalize(out, K)


def ppowmod(f, e, m, K):
    """f**e mod m by binary powering."""
    r = (K.one,)
    f = pmod(f, m, K)
    while e > 0:
        if e & 1:
            r = pmod(pmul(r, f, K), m, K)
        f = pmod(pmul(f, f, K), m, K)
        e >>= 1
    return r


# ---------------------------------------------------------------------------
# Field descriptors
# ---------------------------------------------------------------------------

class Field:
    """Base class for exact field descriptors."""

    char: int

    # subclasses set .zero and .one as canonical values

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def from_int(self, n: int):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def text(self, a) -> str:
        raise NotImplementedError

    def random(self, rng, height: int = 5):
        raise NotImplementedError

    def __ne__(self, other):
        return not self.__eq__(other)


class Rationals(Field):
    """The field of rational numbers; scalars are Fraction values."""

    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if not a:
            raise DivisionByZero("1/0 in Q")
        return 1 / a

    def div(self, a, b):
        if not b:
            raise DivisionByZero("division by zero in Q")
        return a / b

    def is_zero(self, a):
        return not a

    def from_int(self, n):
        return Fraction(n)

    def parse(self, text):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise BadSpec(f"bad rational scalar {text!r}") from exc

    def text(self, a):
        return str(a)

    def random(self, rng, height=5):
        return Fraction(rng.randint(-height, height), rng.randint(1, height))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    """F_p for a prime machine integer p; scalars are ints in [0, p)."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise BadSpec(f"{p} is not a prime")
        self.p = p
        self.char = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero(f"1/0 in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return n % self.p

    def parse(self, text):
        try:
            return int(text.strip()) % self.p
        except ValueError as exc:
            raise BadSpec(f"bad F_{self.p} scalar {text!r}") from exc

    def text(self, a):
        return str(a)

    def random(self, rng, height=5):
        return rng.randrange(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"F{self.p}"


class RatFunc:
    """A reduced fraction of F_p[t] polynomials with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num = num
        self.den = den

    def __eq__(self, other):
        return (isinstance(other, RatFunc) and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.num}, {self.den})"


_TERM_RE = re.compile(r"^(\d+)?\*?(t(\^(\d+))?)?$")


def _fp_poly_text(cs) -> str:
    if not cs:
        return "0"
    terms = []
    for k in range(len(cs) - 1, -1, -1):
        c = cs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            var = "t" if k == 1 else f"t^{k}"
            terms.append(var if c == 1 else f"{c}*{var}")
    return "+".join(terms)


def _fp_poly_parse(text: str, p: int):
    text = text.strip().replace(" ", "")
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if not text:
        raise BadSpec("empty polynomial text")
    coeffs = {}
    sign = 1
    term = ""
    pieces = []
    for ch in text + "+":
        if ch in "+-" and term:
            pieces.append((sign, term))
            sign = 1 if ch == "+" else -1
            term = ""
        elif ch in "+-" and not term:
            if ch == "-":
                sign = -sign
        else:
            term += ch
    for sgn, tm in pieces:
        m = _TERM_RE.match(tm)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise BadSpec(f"bad polynomial term {tm!r}")
        c = int(m.group(1)) if m.group(1) is not None else 1
        if m.group(2) is None:
            k = 0
        elif m.group(4) is not None:
            k = int(m.group(4))
        else:
            k = 1
        coeffs[k] = (coeffs.get(k, 0) + sgn * c) % p
    if not coeffs:
        return ()
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class RationalFunctionField(Field):
    """F_p(t): reduced fractions of F_p[t] polynomials."""

    def __init__(self, p: int):
        self.base = PrimeField(p)
        self.p = p
        self.char = p
        self.zero = RatFunc((), (1 % p,))
        self.one = RatFunc((1 % p,), (1 % p,))
        self.t = RatFunc((0, 1 % p), (1 % p,))

    def make(self, num, den):
        """Canonicalize num/den given as F_p coefficient tuples."""
        B = self.base
        num = pnormalize(num, B)
        den = pnormalize(den, B)
        if not den:
            raise DivisionByZero(f"zero denominator in F_{self.p}(t)")
        if not num:
            return self.zero
        g = pgcd(num, den, B)
        if pdeg(g) > 0:
            num = pdivmod(num, g, B)[0]
            den = pdivmod(den, g, B)[0]
        lc = den[-1]
        if lc != 1:
            c = B.inv(lc)
            num = pscale(num, c, B)
            den = pscale(den, c, B)
        return RatFunc(num, den)

    def add(self, a, b):
        B = self.base
        num = padd(pmul(a.num, b.den, B), pmul(b.num, a.den, B), B)
        return self.make(num, pmul(a.den, b.den, B))

    def neg(self, a):
        return RatFunc(pneg(a.num, self.base), a.den)

    def mul(self, a, b):
        B = self.base
        return self.make(pmul(a.num, b.num, B), pmul(a.den, b.den, B))

    def inv(self, a):
        if not a.num:
            raise DivisionByZero(f"1/0 in F_{self.p}(t)")
        return self.make(a.den, a.num)

    def is_zero(self, a):
        return not a.num

    def from_int(self, n):
        n = n % self.p
        if n == 0:
            return self.zero
        return RatFunc((n,), (1,))

    def from_poly(self, cs):
        return self.make(cs, (1,))

    def parse(self, text):
        text = text.strip().replace(" ", "")
        if "/" in text:
            numtext, dentext = text.split("/", 1)
        else:
            numtext, dentext = text, "1"
        num = _fp_poly_parse(numtext, self.p)
        den = _fp_poly_parse(dentext, self.p)
        return self.make(num, den)

    def text(self, a):
        if a.den == (1,):
            return _fp_poly_text(a.num)
        return f"{_fp_poly_text(a.num)}/{_fp_poly_text(a.den)}"

    def random(self, rng, height=5):
        B = self.base
        num = tuple(rng.randrange(self.p) for _ in range(rng.randint(1, 3)))
        den = tuple(rng.randrange(self.p) for _ in range(rng.randint(0, 2))) + (1,)
        return self.make(pnormalize(num, B), den)

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.p == self.p

    def __hash__(self):
        return hash(("Ft", self.p))

    def __repr__(self):
        return f"F{self.p}(t)"


def split_top_level(text: str, sep: str = ",") -> list:
    """Split on a separator, ignoring separators nested inside brackets."""
    parts = []
    depth = 0
    cur = ""
    for ch in text:
        if ch == sep and depth == 0:
            parts.append(cur)
            cur = ""
            continue
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        cur += ch
    parts.append(cur)
    return parts


def _tower_has_function_field(K) -> bool:
    while isinstance(K, SimpleExtension):
        K = K.base
    return isinstance(K, RationalFunctionField)


class SimpleExtension(Field):
    """base[x]/(minpoly) with minpoly monic of degree >= 2.

    Scalars are tuples of base scalars of length deg(minpoly), low power
    first.  Irreducibility of minpoly is verified by factorization when the
    base is Q or F_p; over other bases it is asserted by the caller and
    recorded in ``minpoly_verified``.
    """

    def __init__(self, base: Field, minpoly, name: str = "x"):
        minpoly = pnormalize(minpoly, base)
        if pdeg(minpoly) < 2:
            raise BadSpec("extension minpoly must have degree >= 2")
        if minpoly[-1] != base.one:
            raise BadSpec("extension minpoly must be monic")
        if isinstance(base, SimpleExtension) and _tower_has_function_field(base):
            raise BadSpec("at most one extension level over F_p(t)")
        self.base = base
        self.minpoly = minpoly
        self.name = name
        self.degree = pdeg(minpoly)
        self.char = base.char
        self.minpoly_verified = False
        if isinstance(base, (Rationals, PrimeField)):
            from .poly import Poly, factor
            fac = factor(Poly(base, minpoly))
            if len(fac) != 1 or fac[0][1] != 1:
                raise BadSpec("extension minpoly is reducible")
            self.minpoly_verified = True
        d = self.degree
        self.zero = tuple(base.zero for _ in range(d))
        one = [base.zero] * d
        one[0] = base.one
        self.one = tuple(one)
        gen = [base.zero] * d
        gen[1] = base.one
        self.gen = tuple(gen)
        # reduction table for x^d .. x^(2d-2) modulo minpoly
        self._red = []
        cur = pnormalize([base.neg(c) for c in minpoly[:-1]], base)
        for _ in range(d - 1):
            self._red.append(self._pad(cur))
            cur = list(cur)
            cur.insert(0, base.zero)
            cur = pnormalize(cur, base)
            if pdeg(cur) >= d:
                top = cur[d]
                cur = psub(pnormalize(cur[:d], base),
                           pscale(minpoly[:-1], top, base), base)

    def _pad(self, cs):
        return tuple(cs) + tuple(self.base.zero
                                 for _ in range(self.degree - len(cs)))

    def add(self, a, b):
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        B = self.base
        return tuple(B.neg(x) for x in a)

    def sub(self, a, b):
        B = self.base
        return tuple(B.sub(x, y) for x, y in zip(a, b))

    def mul(self, a, b):
        B = self.base
        d = self.degree
        prod = [B.zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if B.is_zero(x):
                continue
            for j, y in enumerate(b):
                if B.is_zero(y):
                    continue
                prod[i + j] = B.add(prod[i + j], B.mul(x, y))
        out = list(prod[:d])
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if B.is_zero(c):
                continue
            red = self._red[k - d]
            for i in range(d):
                out[i] = B.add(out[i], B.mul(c, red[i]))
        return tuple(out)

    def inv(self, a):
        if self.is_zero(a):
            raise DivisionByZero("1/0 in extension field")
        B = self.base
        g, s, _ = pextgcd(pnormalize(a, B), self.minpoly, B)
        if pdeg(g) != 0:
            raise BadSpec("minpoly not irreducible: gcd witness found")
        s = pscale(s, B.inv(g[0]), B)
        return self._pad(s)

    def is_zero(self, a):
        B = self.base
        return all(B.is_zero(c) for c in a)

    def from_int(self, n):
        out = [self.base.zero] * self.degree
        out[0] = self.base.from_int(n)
        return tuple(out)

    def embed(self, c):
        """Embed a base scalar."""
        out = [self.base.zero] * self.degree
        out[0] = c
        return tuple(out)

    def parse(self, text):
        text = text.strip()
        if not text.startswith("["):
            return self.embed(self.base.parse(text))
        if not text.endswith("]"):
            raise BadSpec(f"bad extension scalar {text!r}")
        parts = split_top_level(text[1:-1])
        if len(parts) > self.degree:
            raise BadSpec(f"too many coefficients in {text!r}")
        out = [self.base.zero] * self.degree
        for i, piece in enumerate(parts):
            out[i] = self.base.parse(piece)
        return tuple(out)

    def text(self, a):
        return "[" + ",".join(self.base.text(c) for c in a) + "]"

    def random(self, rng, height=5):
        return tuple(self.base.random(rng, height) for _ in range(self.degree))

    def __eq__(self, other):
        return (isinstance(other, SimpleExtension) and other.base == self.base
                and other.minpoly == self.minpoly)

    def __hash__(self):
        return hash(("ext", self.base, self.minpoly))

    def __repr__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.minpoly[k] if k < len(self.minpoly) else self.base.zero
            if self.base.is_zero(c):
                continue
            ctext = self.base.text(c)
            if k == 0:
                terms.append(ctext)
            else:
                var = self.name if k == 1 else f"{self.name}^{k}"
                terms.append(var if ctext == "1" else f"({ctext})*{var}")
        return f"{self.base!r}[{self.name}]/({'+'.join(terms)})"


def check_same_field(K1: Field, K2: Field):
    if K1 != K2:
        raise FieldMismatch(f"{K1!r} vs {K2!r}")


def base_tower(K: Field):
    """The chain of fields from K down to its prime-or-rational bottom."""
    chain = [K]
    while isinstance(chain[-1], SimpleExtension):
        chain.append(chain[-1].base)
    return chain


def prime_subfield(K: Field) -> Field:
    return base_tower(K)[-1]
