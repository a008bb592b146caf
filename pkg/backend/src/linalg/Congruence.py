"""Exact congruence diagonalisation of symmetric rational matrices."""
from fractions import Fraction
from typing import List, Sequence, Tuple

from core.Errors import IndefiniteFormError


def diagonalize(G: Sequence[Sequence]) -> Tuple[List[Fraction], List[List[Fraction]]]:
    """
    Return ``(d, P)`` with ``P·G·Pᵀ = diag(d)`` over Q.

    A zero pivot is repaired by a swap with a later nonzero diagonal entry or,
    when the remaining diagonal vanishes, by adding a row/column with a
    nonzero off-diagonal entry.
    """
    n = len(G)
    A = [[Fraction(x) for x in row] for row in G]
    P = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def swap(i, j):
        A[i], A[j] = A[j], A[i]
        for row in A:
            row[i], row[j] = row[j], row[i]
        P[i], P[j] = P[j], P[i]

    def add(target, source, f):
        # row/column operation target += f * source, applied congruently
        A[target] = [a + f * b for a, b in zip(A[target], A[source])]
        for row in A:
            row[target] += f * row[source]
        P[target] = [a + f * b for a, b in zip(P[target], P[source])]

    for i in range(n):
        if A[i][i] == 0:
            j = next((j for j in range(i + 1, n) if A[j][j] != 0), None)
            if j is not None:
                swap(i, j)
            else:
                j = next((j for j in range(i + 1, n) if A[i][j] != 0), None)
                if j is None:
                    continue
                add(i, j, Fraction(1))
        pivot = A[i][i]
        for j in range(i + 1, n):
            if A[j][i]:
                add(j, i, -A[j][i] / pivot)
    return [A[i][i] for i in range(n)], P


def signature(G: Sequence[Sequence]) -> Tuple[int, int, int]:
    """``(positive, negative, zero)`` counts of the diagonalised form."""
    d, _ = diagonalize(G)
    return sum(1 for x in d if x > 0), sum(1 for x in d if x < 0), sum(1 for x in d if x == 0)


def is_definite(G: Sequence[Sequence]) -> int:
    """+1 for positive definite, -1 for negative definite, 0 otherwise."""
    if len(G) == 0:
        return 1
    pos, neg, zero = signature(G)
    if zero:
        return 0
    if neg == 0:
        return 1
    if pos == 0:
        return -1
    return 0


def cholesky(G: Sequence[Sequence]) -> List[List[Fraction]]:
    """
    Fincke–Pohst square completion of a positive definite form.

    Returns ``Q`` with ``x·G·x = sum_i Q[i][i] * (x_i + sum_{j>i} Q[i][j] x_j)^2``.
    """
    n = len(G)
    Q = [[Fraction(x) for x in row] for row in G]
    for i in range(n):
        if Q[i][i] <= 0:
            raise IndefiniteFormError("square completion requires a positive definite form")
        for j in range(i + 1, n):
            Q[j][i] = Q[i][j]
            Q[i][j] = Q[i][j] / Q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                Q[k][l] -= Q[k][i] * Q[i][l]
    return Q
