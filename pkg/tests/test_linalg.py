import random
from fractions import Fraction

import pytest

from pca.errors import AmbientMismatch
from pca.fields import PrimeField, Rationals
from pca.linalg import (Matrix, Subspace, nullspace, rank, rref, solve,
                        solve_many, unit_vec, vec_is_zero)

Q = Rationals()
F5 = PrimeField(5)


def qmat(rows):
    return Matrix(Q, [[Fraction(x) for x in r] for r in rows])


def test_nullspace_example():
    M = qmat([[1, 1], [2, 2]])
    N = nullspace(M)
    assert N.data == ((Fraction(1), Fraction(-1)),)
    assert rank(M) == 1


def test_solve_identity():
    b = (Fraction(1), Fraction(2), Fraction(3))
    assert solve(Matrix.identity(Q, 3), b) == b


def test_solve_inconsistent_is_none():
    M = qmat([[1, 1], [1, 1]])
    assert solve(M, (Fraction(0), Fraction(1))) is None


def test_rref_pivots():
    M = qmat([[0, 2, 1], [0, 4, 2]])
    R, pivots = rref(M)
    assert pivots == (1,)
    assert R.data[0] == (Fraction(0), Fraction(1), Fraction(1, 2))


@pytest.mark.parametrize("K", [Q, F5], ids=["Q", "F5"])
def test_solve_nullspace_rank_properties(K):
    rng = random.Random(7)
    for _ in range(60):
        r = rng.randint(1, 4)
        c = rng.randint(1, 4)
        M = Matrix(K, [[K.random(rng, 4) for _ in range(c)]
                       for _ in range(r)])
        x = tuple(K.random(rng, 4) for _ in range(c))
        b = M.apply(x)
        sol = solve(M, b)
        assert sol is not None
        assert M.apply(sol) == b
        N = nullspace(M)
        for row in N.data:
            assert vec_is_zero(K, M.apply(row))
        assert rank(M) + N.rows == c


def test_solve_many_matches_solve():
    M = qmat([[1, 2], [3, 4]])
    bs = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    sols = solve_many(M, bs)
    assert sols == [solve(M, b) for b in bs]


def test_subspace_sum_idempotent():
    U = Subspace(Q, 3, [unit_vec(Q, 3, 0), unit_vec(Q, 3, 1)])
    assert U.sum(U) == U


def test_subspace_disjoint_intersection():
    U = Subspace(Q, 2, [unit_vec(Q, 2, 0)])
    V = Subspace(Q, 2, [unit_vec(Q, 2, 1)])
    assert U.intersect(V).dim == 0


def test_subspace_intersection_example():
    # span{e1+e2, e2} meets span{e1} in span{e1}
    U = Subspace(Q, 3, [(Fraction(1), Fraction(1), Fraction(0)),
                        (Fraction(0), Fraction(1), Fraction(0))])
    V = Subspace(Q, 3, [unit_vec(Q, 3, 0)])
    W = U.intersect(V)
    assert W == V


def test_subspace_membership_and_coords():
    U = Subspace(Q, 3, [(Fraction(1), Fraction(2), Fraction(0)),
                        (Fraction(0), Fraction(0), Fraction(1))])
    v = (Fraction(2), Fraction(4), Fraction(-3))
    assert U.contains(v)
    cs = U.coords(v)
    assert U.from_coords(cs) == v
    assert not U.contains((Fraction(0), Fraction(1), Fraction(0)))
    assert U.coords((Fraction(0), Fraction(1), Fraction(0))) is None


def test_subspace_intersection_random_property():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 5)
        U = Subspace(F5, n, [[F5.random(rng) for _ in range(n)]
                             for _ in range(rng.randint(0, n))])
        V = Subspace(F5, n, [[F5.random(rng) for _ in range(n)]
                             for _ in range(rng.randint(0, n))])
        W = U.intersect(V)
        for row in W.basis:
            assert U.contains(row) and V.contains(row)
        assert U.sum(V).dim == U.dim + V.dim - W.dim


def test_ambient_mismatch():
    U = Subspace(Q, 2, [])
    V = Subspace(Q, 3, [])
    with pytest.raises(AmbientMismatch):
        U.sum(V)
