import random
from fractions import Fraction
from itertools import permutations

import pytest

from galecross.errors import InvalidInputError
from galecross.linalg import Matrix, det, kernel_basis, rank, rref


def det_by_permutations(m):
    """Leibniz expansion; independent of the Bareiss code path."""
    assert m.rows == m.cols
    total = Fraction(0)
    for perm in permutations(range(m.rows)):
        sign = 1
        seen = list(perm)
        for i in range(len(seen)):
            for j in range(i + 1, len(seen)):
                if seen[i] > seen[j]:
                    sign = -sign
        term = Fraction(1)
        for i, j in enumerate(perm):
            term *= m.entry(i, j)
        total += sign * term
    return total


def random_matrix(rng, rows, cols, spread=6):
    return Matrix([[rng.randint(-spread, spread) for _ in range(cols)] for _ in range(rows)])


def matmul(a, b):
    return Matrix.from_columns([a.mul_vec(b.column(j)) for j in range(b.cols)])


def test_matrix_validation():
    with pytest.raises(InvalidInputError):
        Matrix([[1, 2], [3]])
    with pytest.raises(InvalidInputError):
        Matrix([[1, 2]], cols=3)
    with pytest.raises(InvalidInputError):
        Matrix([[1, 2]]).mul_vec((1, 2, 3))


def test_empty_matrix_needs_cols():
    m = Matrix([], cols=3)
    assert m.rows == 0 and m.cols == 3
    assert kernel_basis(m) == [
        (Fraction(1), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1)),
    ]


def test_transpose_round_trip():
    m = Matrix([[1, 2, 3], [4, 5, 6]])
    assert m.transpose().transpose() == m
    assert m.column(1) == (Fraction(2), Fraction(5))


def test_kernel_frozen_example():
    m = Matrix([[0, 1, 2], [1, 1, 1]])
    assert kernel_basis(m) == [(Fraction(1), Fraction(-2), Fraction(1))]


def test_vandermonde_det():
    nodes = [1, 2, 3]
    m = Matrix([[t**k for k in range(3)] for t in nodes])
    assert det(m) == 2  # product of pairwise node differences


def test_det_swap_sign():
    assert det(Matrix([[0, 1], [1, 0]])) == -1
    assert det(Matrix([[1]])) == 1


def test_det_matches_leibniz():
    rng = random.Random(4)
    for size in (2, 3, 4):
        for _ in range(15):
            m = random_matrix(rng, size, size)
            assert det(m) == det_by_permutations(m)


def test_det_multiplicative():
    rng = random.Random(5)
    for _ in range(20):
        a = random_matrix(rng, 3, 3)
        b = random_matrix(rng, 3, 3)
        assert det(matmul(a, b)) == det(a) * det(b)


def test_det_requires_square():
    with pytest.raises(InvalidInputError):
        det(Matrix([[1, 2, 3], [4, 5, 6]]))


def test_rref_idempotent_and_pivots():
    rng = random.Random(6)
    for _ in range(25):
        m = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 5))
        r, pivots = rref(m)
        again, pivots2 = rref(r)
        assert again == r and pivots2 == pivots
        for k, j in enumerate(pivots):
            col = r.column(j)
            assert col[k] == 1
            assert all(col[i] == 0 for i in range(r.rows) if i != k)


def test_kernel_properties():
    rng = random.Random(7)
    for _ in range(30):
        m = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 6))
        basis = kernel_basis(m)
        assert len(basis) == m.cols - rank(m)
        zero = tuple(Fraction(0) for _ in range(m.rows))
        for v in basis:
            assert m.mul_vec(v) == zero
        # canonical form: each vector has a 1 in its own free column
        if basis:
            _, pivots = rref(m)
            free = [j for j in range(m.cols) if j not in pivots]
            for v, j in zip(basis, free):
                assert v[j] == 1
                assert all(v[jj] == 0 for jj in free if jj != j)
