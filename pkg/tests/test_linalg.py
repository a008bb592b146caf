from fractions import Fraction

import pytest

from core.Errors import IndefiniteFormError
from linalg.Congruence import diagonalize, is_definite, signature
from linalg.LLL import lll_reduce
from linalg.MatrixTools import determinant, gram_of, inverse, mat_mul, transpose
from linalg.NormalForms import column_combinations, hnf, invariant_factors, kernel_basis, snf, solve_in_span, \
    span_basis, xgcd

A2 = [[2, -1], [-1, 2]]
U = [[0, 1], [1, 0]]


@pytest.mark.parametrize("a,b,g", [(12, 18, 6), (-4, 6, 2), (7, 0, 7), (0, -5, 5)])
def test_xgcd(a, b, g):
    x, y, d = xgcd(a, b)
    assert d == g
    assert x * a + y * b == g


def test_hnf():
    M = [[2, 4], [1, 3]]
    H, T = hnf(M)
    assert H == [[1, 1], [0, 2]]
    assert mat_mul(T, M) == H
    assert abs(determinant(T)) == 1


def test_hnf_moves_zero_rows_down():
    H, _ = hnf([[1, 2], [2, 4], [0, 3]])
    assert H[-1] == [0, 0]
    assert H[0][0] == 1 and H[1] == [0, 3]


def test_hnf_transform_of_dependent_rows():
    M = [[1, 2], [2, 4], [0, 3]]
    H, T = hnf(M)
    assert mat_mul(T, M) == H
    assert abs(determinant(T)) == 1
    assert kernel_basis(M) == [[2, -1, 0]]


def test_kernel_basis_is_saturated():
    assert kernel_basis([[1], [1]]) == [[1, -1]]
    K = kernel_basis([[2, 4], [1, 2], [0, 0]])
    assert len(K) == 2
    for row in K:
        assert mat_mul([row], [[2, 4], [1, 2], [0, 0]]) == [[0, 0]]


def test_snf():
    M = [[2, 4], [6, 8]]
    D, S, T = snf(M)
    assert mat_mul(mat_mul(S, M), T) == D
    assert invariant_factors(M) == [2, 4]
    assert invariant_factors(A2) == [1, 3]
    D, S, T = snf(A2)
    assert D == [[1, 0], [0, 3]]
    assert mat_mul(mat_mul(S, A2), T) == D
    assert abs(determinant(S)) == 1 and abs(determinant(T)) == 1


def test_span_basis_of_dependent_generators():
    basis = span_basis([[2, 0], [0, 2], [1, 1]])
    assert basis == [[1, 1], [0, 2]]
    assert solve_in_span(basis, [3, 5]) == [3, 1]
    assert solve_in_span(basis, [1, 0]) is None
    assert solve_in_span(basis, [Fraction(1, 2), Fraction(1, 2)]) is None


def test_column_combinations():
    g, coeffs = column_combinations([4, 6, 0])
    assert g == 2
    assert sum(c * v for c, v in zip(coeffs, [4, 6, 0])) == 2


def test_determinant_and_inverse():
    assert determinant(A2) == 3
    inv = inverse(A2)
    assert inv == [[Fraction(2, 3), Fraction(1, 3)], [Fraction(1, 3), Fraction(2, 3)]]
    with pytest.raises(ZeroDivisionError):
        inverse([[1, 2], [2, 4]])


def test_signature_and_definiteness():
    assert signature(U) == (1, 1, 0)
    assert is_definite(A2) == 1
    assert is_definite([[-x for x in row] for row in A2]) == -1
    assert is_definite(U) == 0
    d, P = diagonalize(U)
    D = mat_mul(mat_mul(P, U), transpose(P))
    assert D == [[d[0], 0], [0, d[1]]]
    assert min(d) < 0 < max(d)


def test_lll_reduces_a_skewed_a2_basis():
    G = gram_of([[1, 0], [5, 1]], A2)
    reduced, T = lll_reduce(G)
    assert reduced == mat_mul(mat_mul(transpose(T), G), T)
    assert abs(determinant(T)) == 1
    assert reduced[0][0] == 2


def test_lll_rejects_indefinite_forms():
    with pytest.raises(IndefiniteFormError):
        lll_reduce(U)
