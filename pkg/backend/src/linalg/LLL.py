"""Exact LLL reduction of a Gram matrix (Cohen's integral-free variant on Q)."""
import logging
from fractions import Fraction
from typing import Sequence, Tuple

from core.Errors import DependentVectorsError, IndefiniteFormError
from linalg.Congruence import is_definite
from linalg.MatrixTools import Matrix, gram_of, identity, transpose

logger = logging.getLogger(__name__)


def _round(x: Fraction) -> int:
    return (x + Fraction(1, 2)).__floor__()


def lll_reduce(G: Sequence[Sequence[int]], delta: Fraction = Fraction(3, 4)) -> Tuple[Matrix, Matrix]:
    """
    LLL-reduce a definite Gram matrix.

    Returns ``(G', T)`` with ``G' = Tᵀ·G·T`` and ``T`` unimodular; the columns
    of ``T`` are the reduced basis in the input coordinates. Negative definite
    input is reduced through its negative.
    """
    n = len(G)
    if n == 0:
        return [], []
    sign = is_definite(G)
    if sign == 0:
        raise IndefiniteFormError("LLL requires definite form")
    A = [[Fraction(sign * x) for x in row] for row in G]
    basis = identity(n)
    mu = [[Fraction(0)] * n for _ in range(n)]
    B = [Fraction(0)] * n
    B[0] = A[0][0]
    k, kmax = 1, 0
    swaps = 0

    def red(k, l):
        if abs(mu[k][l]) <= Fraction(1, 2):
            return
        q = _round(mu[k][l])
        akl = A[k][l]
        basis[k] = [a - q * b for a, b in zip(basis[k], basis[l])]
        A[k][k] = A[k][k] - 2 * q * akl + q * q * A[l][l]
        for i in range(n):
            if i != k:
                A[k][i] -= q * A[l][i]
                A[i][k] = A[k][i]
        mu[k][l] -= q
        for i in range(l):
            mu[k][i] -= q * mu[l][i]

    def swap(k):
        basis[k], basis[k - 1] = basis[k - 1], basis[k]
        A[k], A[k - 1] = A[k - 1], A[k]
        for row in A:
            row[k], row[k - 1] = row[k - 1], row[k]
        for j in range(k - 1):
            mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
        m = mu[k][k - 1]
        b_new = B[k] + m * m * B[k - 1]
        mu[k][k - 1] = m * B[k - 1] / b_new
        B[k] = B[k - 1] * B[k] / b_new
        B[k - 1] = b_new
        for i in range(k + 1, kmax + 1):
            t = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m * t
            mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]

    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k):
                mu[k][j] = (A[k][j] - sum(mu[j][i] * mu[k][i] * B[i] for i in range(j))) / B[j]
            B[k] = A[k][k] - sum(mu[k][j] * mu[k][j] * B[j] for j in range(k))
            if B[k] == 0:
                raise DependentVectorsError("Gram matrix is degenerate", dependency=basis[k])
        red(k, k - 1)
        if B[k] < (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            swap(k)
            swaps += 1
            k = max(1, k - 1)
            continue
        for l in range(k - 2, -1, -1):
            red(k, l)
        k += 1
    logger.debug("LLL finished on rank %d after %d swaps", n, swaps)
    reduced = gram_of(basis, [[int(x) for x in row] for row in G])
    return reduced, transpose(basis)
