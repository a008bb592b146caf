"""Small exact matrix helpers shared by the whole toolkit.

Matrices are plain lists of rows holding ``int`` or ``Fraction`` entries.
Determinants, ranks and inverses go through sympy's ``DomainMatrix`` over
``ZZ``/``QQ``.
"""
from fractions import Fraction
from math import gcd
from typing import List, Sequence

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

Matrix = List[List[int]]


def _is_integral(M) -> bool:
    return all(not isinstance(x, Fraction) or x.denominator == 1 for row in M for x in row)


def to_domain(M, domain=None) -> DomainMatrix:
    """Convert a list-of-rows matrix to a ``DomainMatrix``."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if domain is None:
        domain = ZZ if _is_integral(M) else QQ
    if domain == ZZ:
        data = [[ZZ(int(x)) for x in row] for row in M]
    else:
        data = [[QQ(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in M]
    return DomainMatrix(data, (rows, cols), domain)


def from_domain(dM) -> list:
    """Convert a ``DomainMatrix`` back to rows of ``int``/``Fraction``."""
    out = []
    for row in dM.to_Matrix().tolist():
        new_row = []
        for e in row:
            frac = Fraction(int(e.p), int(e.q))
            new_row.append(frac.numerator if frac.denominator == 1 else frac)
        out.append(new_row)
    return out


def determinant(M):
    if len(M) == 0:
        return 1
    if len(M) != len(M[0]):
        raise ValueError("determinant of a non-square matrix")
    d = to_domain(M).det()
    if _is_integral(M):
        return int(d)
    return Fraction(int(d.numerator), int(d.denominator))


def rank(M) -> int:
    if len(M) == 0 or len(M[0]) == 0:
        return 0
    return int(to_domain(M, QQ).rank())


def inverse(M) -> list:
    """Exact inverse over Q; raises ``ZeroDivisionError`` when singular."""
    if determinant(M) == 0:
        raise ZeroDivisionError("matrix is singular")
    return from_domain(to_domain(M, QQ).inv())


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(M) -> list:
    if not M:
        return []
    return [list(col) for col in zip(*M)]


def mat_mul(A, B) -> list:
    if not A:
        return []
    Bt = transpose(B)
    if not Bt:
        return [[] for _ in A]
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def vec_mat(v: Sequence, M) -> list:
    if not M:
        return []
    return [sum(v[i] * M[i][j] for i in range(len(v))) for j in range(len(M[0]))]


def bilinear(x: Sequence, G, y: Sequence):
    return sum(x[i] * sum(G[i][j] * y[j] for j in range(len(y)) if G[i][j]) for i in range(len(x)) if x[i])


def gram_of(rows, G) -> list:
    """Gram matrix ``rows · G · rowsᵀ``."""
    RG = mat_mul(rows, G)
    return [[sum(a * b for a, b in zip(ri, rj)) for rj in rows] for ri in RG]


def normalize(M) -> list:
    """Turn integral ``Fraction`` entries back into ``int``."""
    out = []
    for row in M:
        new_row = []
        for x in row:
            if isinstance(x, Fraction) and x.denominator == 1:
                x = x.numerator
            new_row.append(x)
        out.append(new_row)
    return out


def require_integral(M, what="matrix") -> Matrix:
    for row in M:
        for x in row:
            if isinstance(x, Fraction) and x.denominator != 1:
                raise ValueError(f"{what} is not integral: entry {x}")
    return [[int(x) for x in row] for row in M]


def is_symmetric(M) -> bool:
    n = len(M)
    return all(len(row) == n for row in M) and all(M[i][j] == M[j][i] for i in range(n) for j in range(i))


def lcm_denominator(rows) -> int:
    d = 1
    for row in rows:
        for x in row:
            den = Fraction(x).denominator
            d = d * den // gcd(d, den)
    return d
