from fractions import Fraction as F
import random

import pytest
import sympy

from rigidkit.linalg import (
    GF,
    PRIME,
    Q,
    DenseMatrix,
    EchelonModP,
    FieldError,
    is_probable_prime,
    mat_vec,
    matrix_rank,
    nullspace,
    rank_mod_p,
    rank_rational,
    vec_mat,
)
from rigidkit.oracle import Framework, rigidity_matrix
from rigidkit.graph import complete_graph


def test_prime_is_prime():
    assert sympy.isprime(PRIME)
    assert is_probable_prime(PRIME)
    assert PRIME == 2**62 - 57
    assert not is_probable_prime(PRIME - 2)
    assert all(is_probable_prime(p) == sympy.isprime(p) for p in range(2000))


def test_trivial_ranks():
    I = DenseMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert matrix_rank(I) == 3
    Z = DenseMatrix.from_rows([[0] * 7] * 4)
    assert matrix_rank(Z) == 0
    assert nullspace(I, "left") == [] and nullspace(I, "right") == []


def _rand_matrix(rng, r, c, rank):
    A = sympy.Matrix(r, rank, lambda i, j: rng.randint(-9, 9))
    B = sympy.Matrix(rank, c, lambda i, j: F(rng.randint(-9, 9), rng.randint(1, 5)))
    return A * B


@pytest.mark.parametrize("trial", range(12))
def test_rank_against_sympy(trial):
    rng = random.Random(trial)
    r, c = rng.randint(1, 8), rng.randint(1, 8)
    M = _rand_matrix(rng, r, c, rng.randint(0, min(r, c)))
    rows = [[F(str(x)) for x in M.row(i)] for i in range(r)]
    want = M.rank()
    assert rank_rational(rows, c) == want
    # clear denominators for the modular rank; a rank drop mod p is astronomically unlikely here
    ints = [[int(x * 3600) for x in row] for row in rows]
    assert rank_mod_p(ints, c) == want
    assert EchelonModP(ints, c).rank == want


def test_nullspace_against_sympy():
    rng = random.Random(5)
    M = _rand_matrix(rng, 5, 7, 3)
    D = DenseMatrix.from_rows([[F(str(x)) for x in M.row(i)] for i in range(5)])
    right = nullspace(D, "right")
    left = nullspace(D, "left")
    assert len(right) == len(M.nullspace()) == 4
    assert len(left) == 2
    for v in right:
        assert not any(mat_vec(D, v))
    for v in left:
        assert not any(vec_mat(v, D))


def test_echelon_contains():
    E = EchelonModP([[1, 2, 3], [0, 1, 1]], 3)
    assert E.contains([1, 3, 4])
    assert not E.contains([0, 0, 1])
    assert E.contains_sparse({0: 2, 1: 5, 2: 7})


def test_k5_rigidity_matrix():
    rng = random.Random(1)
    K = complete_graph("abcde")
    fw = Framework(K, 3, {v: tuple(F(rng.randint(-50, 50)) for _ in range(3)) for v in K.vertices})
    M = rigidity_matrix(fw)
    assert matrix_rank(M) == 9
    assert len(nullspace(M, "left")) == 1
    Mp = DenseMatrix.from_rows([[int(x) for x in r] for r in M.to_rows()], field=GF)
    assert matrix_rank(Mp) == 9


def test_planar_triangle_flexes():
    T = complete_graph("abc")
    fw = Framework(T, 3, {"a": (0, 0, 0), "b": (1, 0, 0), "c": (0, 1, 0)})
    assert len(nullspace(rigidity_matrix(fw), "right")) == 6


def test_field_tags():
    with pytest.raises(FieldError):
        DenseMatrix(1, 1, (1,), "reals")
    with pytest.raises(FieldError):
        nullspace(DenseMatrix.from_rows([[1]], field=GF))
    assert DenseMatrix.from_rows([[F(1, 2)]], field=Q)[0, 0] == F(1, 2)
