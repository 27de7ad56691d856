"""Acceptance suite: one test per criterion, every check exact.

Run with ``pytest -s tests/test_acceptance.py`` to see one PASS line per
criterion.
"""

import random
import subprocess
import sys
import time
from fractions import Fraction

import corpus
from pca import fileio
from pca.algebra import (direct_product, group_algebra, ideal_closure,
                         make_algebra, matrix_algebra,
                         polynomial_quotient_algebra, tensor,
                         triangular_algebra, truncated_polynomial_algebra)
from pca.fields import PrimeField, RationalFunctionField, Rationals
from pca.malcev import (check_ideal_lemma, malcev_conjugator,
                        wedderburn_splitting)
from pca.poly import Poly, factor
from pca.radical import is_semisimple, radical, radical_oracle
from pca.separability import (is_separable, nilpotent_witness, sep_idempotent,
                              universal_derivation_check,
                              verify_sep_idempotent)
from pca.tower import (check_level_isomorphic, cyclic_group_tower,
                       kronecker_quiver, loop_quiver, path_algebra_tower,
                       power_series_tower, quiver_radical_check,
                       tower_radical_check)
from pca.wedderburn import central_idempotents, crt_lift

Q = Rationals()
F2 = PrimeField(2)
F3 = PrimeField(3)
F5 = PrimeField(5)


def _announce(n, text):
    print(f"\nACCEPTANCE criterion {n} PASS: {text}")


def test_criterion_1_radical_oracle_equivalence():
    started = time.monotonic()
    rng = random.Random(0)
    checked = 0
    while checked < 200:
        A = corpus.random_algebra(rng, rng.choice([F2, F3]), 4)
        assert radical(A).radical.space == radical_oracle(A).space
        checked += 1
    elapsed = time.monotonic() - started
    assert elapsed < 60.0
    _announce(1, f"radical == oracle on {checked} random algebras "
                 f"({elapsed:.1f}s)")


def test_criterion_2_maschke_battery():
    for K, p in ((Q, 0), (F2, 2), (F3, 3), (F5, 5)):
        for n in range(1, 13):
            expected = (p == 0) or (n % p != 0)
            assert is_semisimple(group_algebra(n, K)) == expected
    _announce(2, "semisimplicity of k[C_n] matches char k | n for n <= 12 "
                 "over Q, F2, F3, F5")


def test_criterion_3_wedderburn_data():
    cases = [
        (group_algebra(3, Q), [1, 2]),
        (group_algebra(3, F2), [1, 2]),
        (group_algebra(7, F2), [1, 3, 3]),
    ]
    for A, dims in cases:
        dec = central_idempotents(A)
        assert [b["total_dim"] for b in dec.block_data] == dims
    dec = central_idempotents(matrix_algebra(2, F3))
    assert dec.block_data == [
        {"total_dim": 4, "center_dim": 1, "matrix_degree": 2}]
    # cross-check block dimensions against the factors of x^n - 1
    for A, K, n in ((group_algebra(3, Q), Q, 3),
                    (group_algebra(3, F2), F2, 3),
                    (group_algebra(7, F2), F2, 7)):
        f = Poly.from_ints(K, [-1] + [0] * (n - 1) + [1])
        degrees = sorted(g.degree for g, _ in factor(f))
        dec = central_idempotents(A)
        assert sorted(b["total_dim"] for b in dec.block_data) == degrees
    _announce(3, "block data for Q[C3], F2[C3], F2[C7], M2(F3) matches the "
                 "factorization oracle")


def test_criterion_4_inseparability_demo():
    F2T = RationalFunctionField(2)
    E = make_algebra(
        F2T, ["1", "a"],
        [(0, 0, 0, F2T.one), (0, 1, 1, F2T.one), (1, 0, 1, F2T.one),
         (1, 1, 0, F2T.t)])
    assert is_separable(E) is False
    EE = tensor(E, E)
    x = EE.add(EE.basis_element(1), EE.basis_element(2))  # a(x)1 + 1(x)a
    assert nilpotent_witness(EE, x) == 2
    assert ideal_closure(EE, [x]).dim == 2
    _announce(4, "F2(t)[x]/(x^2-t) is inseparable with nilpotency witness 2 "
                 "and a 2-dimensional ideal generated by it")


def test_criterion_5_separability_idempotents():
    instances = [direct_product([group_algebra(1, Q), group_algebra(1, Q)]),
                 group_algebra(3, Q)]
    for p in (F2, F3, F5):
        for n in (1, 2, 3):
            instances.append(matrix_algebra(n, p))
    for A in instances:
        p = sep_idempotent(A)
        assert p is not None
        assert verify_sep_idempotent(A, p.tensor_coeffs)
        assert universal_derivation_check(A)
    _announce(5, f"separability idempotents solved and round-tripped through "
                 f"the universal derivation on {len(instances)} instances")


def test_criterion_6_wedderburn_malcev():
    started = time.monotonic()
    algebras = []
    for K in (Q, F2, F3, F5):
        algebras.append(triangular_algebra(2, K))
    for n in range(1, 6):
        algebras.append(truncated_polynomial_algebra(Q, n))
        algebras.append(truncated_polynomial_algebra(F2, n))
    algebras.append(group_algebra(2, F2))
    algebras.append(group_algebra(4, F2))
    kron = path_algebra_tower(kronecker_quiver(), Q, 2)
    algebras.append(kron.levels[1])
    rng = random.Random(606)
    target = len(algebras) + 50  # the fixed corpus plus 50 random instances
    while len(algebras) < target:
        algebras.append(corpus.random_algebra(
            rng, rng.choice([Q, F2, F3, F5]), 6))
    for trial, A in enumerate(algebras):
        s1 = wedderburn_splitting(A, seed=0)
        assert s1.verify()
        for I in corpus.coordinate_ideals(A):
            assert check_ideal_lemma(s1, I)
        s2 = wedderburn_splitting(A, seed=trial + 1)
        omega = malcev_conjugator(s1, s2)
        assert s1.radical.radical.contains(omega)
    elapsed = time.monotonic() - started
    assert elapsed < 120.0
    _announce(6, f"splittings, ideal lemma and conjugators exact on "
                 f"{len(algebras)} algebras ({elapsed:.1f}s)")


def test_criterion_7_tower_theorems():
    towers = [power_series_tower(Q, 6),
              cyclic_group_tower(2, F2, 3),
              cyclic_group_tower(3, Q, 3),
              path_algebra_tower(kronecker_quiver(), Q, 3)]
    for T in towers:
        report = tower_radical_check(T)
        assert report["radical_onto_radical"]
    loop = path_algebra_tower(loop_quiver(), Q, 4)
    assert check_level_isomorphic(power_series_tower(Q, 4), loop)
    assert quiver_radical_check(loop)
    assert quiver_radical_check(path_algebra_tower(kronecker_quiver(), Q, 3))
    _announce(7, "radical-onto-radical, loop/power-series isomorphism and "
                 "arrow-ideal radicals verified levelwise")


def test_criterion_8_crt_lift():
    rng = random.Random(808)
    root_pools = [[0, 1], [0, 1, -1], [1, 2, -3, 5]]
    for roots in root_pools:
        roots = [Fraction(r) for r in roots]
        f = Poly.one(Q)
        for r in roots:
            f = f * Poly(Q, (-r, Fraction(1)))
        A = polynomial_quotient_algebra(f)
        ideals = []
        for r in roots:
            gen = [Q.neg(r), Fraction(1)] + [Fraction(0)] * (A.dim - 2)
            ideals.append(ideal_closure(A, [tuple(gen)]))
        for _ in range(5):
            targets = [tuple(Q.random(rng) for _ in range(A.dim))
                       for _ in roots]
            a = crt_lift(A, ideals, targets)
            for idl, t in zip(ideals, targets):
                assert idl.contains(A.sub(a, t))
    _announce(8, "CRT lift reproduces arbitrary residue targets for split "
                 "polynomial algebras with 2 to 4 factors")


def test_criterion_9_cli_determinism(tmp_path):
    t2 = triangular_algebra(2, Q)
    fileio.save_canonical(str(tmp_path / "t2q.alg"), fileio.algebra_to_doc(t2))
    fileio.save_canonical(str(tmp_path / "qc3.alg"),
                          fileio.algebra_to_doc(group_algebra(3, Q)))
    fileio.save_canonical(str(tmp_path / "loop.quiver"),
                          fileio.quiver_to_doc(loop_quiver()))
    commands = [
        ("radical", "t2q.alg"),
        ("radical", "t2q.alg", "--json"),
        ("wedderburn", "qc3.alg", "--json"),
        ("sepidem", "qc3.alg", "--json"),
        ("split", "t2q.alg", "--seed", "5", "--json"),
        ("tower", "build", "--kind", "path", "--field", "Q", "--depth", "3",
         "--quiver", "loop.quiver", "-o", "loop.tower", "--json"),
        ("tower", "check", "loop.tower", "--json"),
    ]
    for argv in commands:
        runs = [subprocess.run([sys.executable, "-m", "pca", *argv],
                               capture_output=True, cwd=tmp_path)
                for _ in range(2)]
        assert runs[0].stdout == runs[1].stdout, argv
        assert runs[0].returncode == runs[1].returncode, argv
    _announce(9, f"{len(commands)} CLI commands re-run byte-identically")
