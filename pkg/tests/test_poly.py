import random
from fractions import Fraction

import pytest

from pca.errors import BadSpec, UnsupportedField
from pca.fields import PrimeField, RationalFunctionField, Rationals
from pca.poly import Poly, factor, is_irreducible, poly_gcd

Q = Rationals()
F2 = PrimeField(2)
F3 = PrimeField(3)
F5 = PrimeField(5)
F7 = PrimeField(7)


def _recompose(f, fac):
    prod = Poly.one(f.field).scale(f.lc())
    for g, m in fac:
        prod = prod * g ** m
    return prod


def test_factor_x3_minus_1_over_q():
    f = Poly.from_ints(Q, [-1, 0, 0, 1])
    fac = factor(f)
    assert [(g.coeffs, m) for g, m in fac] == [
        ((Fraction(-1), Fraction(1)), 1),
        ((Fraction(1), Fraction(1), Fraction(1)), 1),
    ]


def test_factor_x3_minus_1_over_f3():
    fac = factor(Poly.from_ints(F3, [-1, 0, 0, 1]))
    assert [(g.coeffs, m) for g, m in fac] == [((2, 1), 3)]


def test_factor_irreducible_quadratic_over_f2():
    fac = factor(Poly.from_ints(F2, [1, 1, 1]))
    assert [(g.coeffs, m) for g, m in fac] == [((1, 1, 1), 1)]


def test_factor_x7_minus_1_over_f2():
    fac = factor(Poly.from_ints(F2, [1, 0, 0, 0, 0, 0, 0, 1]))
    assert [g.degree for g, _ in fac] == [1, 3, 3]
    assert _recompose(Poly.from_ints(F2, [1, 0, 0, 0, 0, 0, 0, 1]), fac) == \
        Poly.from_ints(F2, [1, 0, 0, 0, 0, 0, 0, 1])


def test_factor_xn_minus_1_battery():
    for K in (Q, F2, F3, F5):
        for n in range(1, 13):
            f = Poly.from_ints(K, [-1] + [0] * (n - 1) + [1])
            fac = factor(f)
            assert _recompose(f, fac) == f
            for g, _ in fac:
                assert g.is_monic()


def test_factor_with_unit_and_multiplicity():
    f = Poly.from_ints(Q, [1, -5, 6])  # (2x-1)(3x-1)
    fac = factor(f)
    assert _recompose(f, fac) == f
    assert sorted(str(g.coeffs[0]) for g, _ in fac) == ["-1/2", "-1/3"]
    g = Poly.from_ints(Q, [-1, 1]) ** 2 * Poly.from_ints(Q, [-2, 1])
    fac = factor(g)
    assert [(g_.degree, m) for g_, m in fac] == [(1, 1), (1, 2)]


def test_factor_subset_recombination():
    # (x^2-2)(x^2-3)(x^2-6) splits further modulo every prime
    f = (Poly.from_ints(Q, [-2, 0, 1]) * Poly.from_ints(Q, [-3, 0, 1])
         * Poly.from_ints(Q, [-6, 0, 1]))
    fac = factor(f)
    assert [g.degree for g, _ in fac] == [2, 2, 2]
    assert _recompose(f, fac) == f


def test_factor_frobenius_powers():
    # x^9 - x^3 = x^3 (x-1)^3 (x+1)^3 over F3
    f = Poly.from_ints(F3, [0, 0, 0, -1, 0, 0, 0, 0, 0, 1])
    fac = factor(f)
    assert _recompose(f, fac) == f
    assert sorted(m for _, m in fac) == [3, 3, 3]


def test_factor_random_products_recompose():
    rng = random.Random(5)
    for K in (F2, F3, F5, Q):
        for _ in range(25):
            f = Poly.one(K)
            for _ in range(rng.randint(1, 3)):
                deg = rng.randint(1, 3)
                g = Poly(K, [K.random(rng) for _ in range(deg)] + [K.one])
                f = f * g
            if K is Q:
                f = f.scale(Q.random(rng, 3) + Fraction(7))
            fac = factor(f)
            assert _recompose(f, fac) == f


def test_small_factors_have_no_roots():
    rng = random.Random(11)
    for K in (F2, F3, F5, F7):
        for _ in range(30):
            f = Poly(K, [K.random(rng) for _ in range(rng.randint(2, 6))]
                     + [K.one])
            for g, _ in factor(f):
                if 2 <= g.degree <= 3:
                    for a in range(K.p):
                        assert not K.is_zero(g(a))


def test_factor_deterministic_and_sorted():
    f = Poly.from_ints(F5, [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1])
    first = factor(f, seed=0)
    second = factor(f, seed=0)
    assert first == second
    degs = [g.degree for g, _ in first]
    assert degs == sorted(degs)


def test_factor_errors():
    with pytest.raises(BadSpec):
        factor(Poly.zero(Q))
    with pytest.raises(UnsupportedField):
        factor(Poly.one(RationalFunctionField(2)))


def test_is_irreducible():
    assert is_irreducible(Poly.from_ints(Q, [1, 1, 1]))
    assert not is_irreducible(Poly.from_ints(Q, [-1, 0, 1]))
    assert not is_irreducible(Poly.one(Q))


def test_gcd_and_division():
    f = Poly.from_ints(Q, [-1, 0, 1])
    g = Poly.from_ints(Q, [-1, 1])
    assert poly_gcd(f, g) == g
    q, r = f.divmod(g)
    assert q * g + r == f
    assert r.is_zero()
    h = Poly.from_ints(F5, [2, 0, 1, 3])
    d = Poly.from_ints(F5, [1, 4])
    q, r = h.divmod(d)
    assert q * d + r == h


def test_poly_evaluation():
    f = Poly.from_ints(Q, [1, 2, 1])
    assert f(Fraction(2)) == Fraction(9)
    assert f(Fraction(-1)) == Fraction(0)
