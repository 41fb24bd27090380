"""Exact cyclotomic arithmetic against closed forms and float cross-checks."""

import cmath
import random
from fractions import Fraction

import numpy as np
import pytest

from pseries import CycloMatrix, CycloNum, SparseReducer, rank, solve_affine
from pseries.cyclo import CycloError, cyclotomic_poly, power_fold

CONDUCTORS = [1, 2, 3, 4, 6, 8, 12]


def rand_num(e, rng, dense=True):
    phi = len(CycloNum.zero(e).c)
    return CycloNum(e, [Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                        for _ in range(phi)])


def test_cyclotomic_poly_known_values():
    # coefficient tuples, constant term first
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_root_has_exact_order():
    for e in CONDUCTORS:
        z = CycloNum.root(e, 1)
        acc = CycloNum.one(e)
        for t in range(1, e + 1):
            acc = acc * z
            if t < e:
                assert acc != CycloNum.one(e)
        assert acc == CycloNum.one(e)


def test_root_exponent_wraps():
    for e in CONDUCTORS:
        for t in range(2 * e):
            assert CycloNum.root(e, t) == CycloNum.root(e, t % e)
            assert CycloNum.root(e, t) == CycloNum.root(e, 1) ** t


def test_field_identities_random():
    rng = random.Random(11)
    for e in CONDUCTORS:
        one = CycloNum.one(e)
        for _ in range(25):
            a, b, c = (rand_num(e, rng) for _ in range(3))
            assert a * (b + c) == a * b + a * c
            assert (a + b) * c == a * c + b * c
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a - a == CycloNum.zero(e)
            if not a.is_zero():
                assert a * a.inverse() == one
            # conjugation is a ring automorphism fixing the rationals
            assert (a * b).conj() == a.conj() * b.conj()
            assert (a + b).conj() == a.conj() + b.conj()
            assert a.conj().conj() == a
            # a * conj(a) is a nonnegative rational only when rational; check norm > 0 numerically
            if not a.is_zero():
                assert abs(a.to_complex()) > 0


def test_scalar_coercion():
    a = CycloNum.root(8, 1)
    assert 2 * a == a + a
    assert a * 2 == a + a
    assert Fraction(1, 2) * (a + a) == a
    assert a + 0 == a
    assert 1 + a == a + CycloNum.one(8)


def test_conductor_mismatch_raises():
    with pytest.raises(CycloError):
        CycloNum.root(4, 1) + CycloNum.root(8, 1)


def test_complex_embedding():
    for e in CONDUCTORS:
        for t in range(e):
            got = CycloNum.root(e, t).to_complex()
            want = cmath.exp(2j * cmath.pi * t / e)
            assert abs(got - want) < 1e-12
    rng = random.Random(3)
    for e in CONDUCTORS:
        for _ in range(10):
            a, b = rand_num(e, rng), rand_num(e, rng)
            assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9
            assert abs(a.conj().to_complex() - a.to_complex().conjugate()) < 1e-12


def test_rational_detection():
    a = CycloNum.rational(8, Fraction(3, 7))
    assert a.is_rational() and a.as_fraction() == Fraction(3, 7)
    z = CycloNum.root(8, 1)
    assert not z.is_rational()
    with pytest.raises(CycloError):
        z.as_fraction()
    # zeta_8^2 + zeta_8^6 = i - i = 0
    assert (CycloNum.root(8, 2) + CycloNum.root(8, 6)).is_zero()


def test_power_fold_matches_products():
    for e in CONDUCTORS:
        fold = power_fold(e)
        phi = len(CycloNum.zero(e).c)
        for s in range(phi):
            for t in range(phi):
                mono_s = CycloNum(e, [1 if i == s else 0 for i in range(phi)])
                mono_t = CycloNum(e, [1 if i == t else 0 for i in range(phi)])
                assert (mono_s * mono_t).c == tuple(Fraction(x) for x in fold[s][t])


def test_rank_against_float_svd():
    rng = random.Random(5)
    for e in [1, 2, 3, 4, 6, 8]:
        for m, n, r in [(6, 6, 3), (10, 7, 5), (12, 12, 12), (9, 4, 2)]:
            left = [[rand_num(e, rng) for _ in range(r)] for _ in range(m)]
            right = [[rand_num(e, rng) for _ in range(n)] for _ in range(r)]
            zero = CycloNum.zero(e)
            prod = [[sum((left[i][k] * right[k][j] for k in range(r)), zero)
                     for j in range(n)] for i in range(m)]
            exact = rank(CycloMatrix(e, prod))
            emb = np.array([[x.to_complex() for x in row] for row in prod])
            assert exact == np.linalg.matrix_rank(emb)
            assert exact <= r


def test_rank_big_random_full():
    # generic square matrices are full rank; 50x50 to exercise the pivoting
    rng = random.Random(9)
    rows = [[CycloNum.rational(1, Fraction(rng.randint(-20, 20), rng.randint(1, 9)))
             for _ in range(50)] for _ in range(50)]
    m = CycloMatrix(1, rows)
    emb = np.array([[float(x.c[0]) for x in row] for row in rows])
    assert rank(m) == np.linalg.matrix_rank(emb) == 50


def test_solve_affine_consistent():
    rng = random.Random(7)
    for e in [1, 4, 8]:
        zero = CycloNum.zero(e)
        for m, n in [(5, 3), (4, 6), (6, 6)]:
            mat = [[rand_num(e, rng) for _ in range(n)] for _ in range(m)]
            x0 = [rand_num(e, rng) for _ in range(n)]
            rhs = [sum((mat[i][j] * x0[j] for j in range(n)), zero) for i in range(m)]
            sol = solve_affine(CycloMatrix(e, mat), rhs)
            assert sol is not None
            # the particular point solves the system
            for i in range(m):
                assert sum((mat[i][j] * sol.particular[j] for j in range(n)), zero) == rhs[i]
            # each nullspace vector maps to zero
            for v in sol.nullspace:
                for i in range(m):
                    assert sum((mat[i][j] * v[j] for j in range(n)), zero).is_zero()
            assert sol.dimension == n - rank(CycloMatrix(e, mat))


def test_solve_affine_inconsistent():
    e = 4
    zero, one = CycloNum.zero(e), CycloNum.one(e)
    # 0 * x = 1 has no solution
    assert solve_affine(CycloMatrix(e, [[zero]]), [one]) is None
    # duplicate row with different rhs
    mat = CycloMatrix(e, [[one, one], [one, one]])
    assert solve_affine(mat, [one, zero]) is None
    assert solve_affine(mat, [one, one]) is not None


def test_sparse_reducer_matches_dense_rank():
    rng = random.Random(13)
    for e in [1, 2, 8]:
        vecs = []
        for _ in range(12):
            vec = {rng.randrange(30): rand_num(e, rng) for _ in range(rng.randint(1, 5))}
            vecs.append(vec)
        red = SparseReducer(e)
        for v in vecs:
            red.feed(v)
        zero = CycloNum.zero(e)
        dense = [[v.get(j, zero) for j in range(30)] for v in vecs]
        assert red.rank == rank(CycloMatrix(e, dense))


def test_sparse_reducer_membership_and_coords():
    e = 4
    rng = random.Random(17)
    red = SparseReducer(e)
    basis = []
    for i in range(4):
        vec = {i: CycloNum.one(e), 10 + i: rand_num(e, rng)}
        red.feed(vec)
        basis.append(vec)
    # a random combination of basis rows is contained, with matching coordinates
    coeffs = [rand_num(e, rng) for _ in range(4)]
    combo = {}
    for cf, vec in zip(coeffs, basis):
        for k, val in vec.items():
            combo[k] = combo.get(k, CycloNum.zero(e)) + cf * val
    assert red.contains(combo)
    got = red.coords_list(combo)
    assert got is not None
    rebuilt = {}
    for cf, row in zip(got, red.basis_rows()):
        for k, val in row.items():
            rebuilt[k] = rebuilt.get(k, CycloNum.zero(e)) + cf * val
    for k in set(combo) | set(rebuilt):
        assert (combo.get(k, CycloNum.zero(e)) - rebuilt.get(k, CycloNum.zero(e))).is_zero()
    # something outside the span
    outside = {25: CycloNum.one(e)}
    assert not red.contains(outside)
    assert red.coords_list(outside) is None
