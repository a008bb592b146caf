"""Hermite and Smith normal forms over Z.

Row conventions throughout: ``hnf(M)`` returns ``(H, U)`` with ``H = U·M``,
``snf(M)`` returns ``(D, U, V)`` with ``D = U·M·V``. The reductions are
sympy's ``normalforms`` on ``DomainMatrix`` over ``ZZ``; sympy's Hermite form
is column-style, so ``hnf`` feeds it the column-reversed transpose.
"""
import logging
from bisect import bisect_left
from typing import List, Optional, Sequence, Tuple

from sympy import ZZ
from sympy.core.intfunc import igcdex
from sympy.polys.matrices.normalforms import hermite_normal_form
from sympy.polys.matrices.normalforms import invariant_factors as _invariant_factors
from sympy.polys.matrices.normalforms import smith_normal_decomp

from linalg.MatrixTools import Matrix, determinant, identity, to_domain

logger = logging.getLogger(__name__)


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(x, y, g)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x, y, g = igcdex(int(a), int(b))
    return int(x), int(y), int(g)


def _to_ints(dM) -> Matrix:
    return [[int(x) for x in row] for row in dM.to_list()]


def hnf(M: Sequence[Sequence[int]]) -> Tuple[Matrix, Matrix]:
    """
    Row-style Hermite normal form.

    Pivots are positive, entries above a pivot lie in ``[0, pivot)``, and
    zero rows are moved to the bottom. ``U`` is unimodular; it is read off
    the Hermite form of ``[M | I]``, whose last rows are the left kernel.

    >>> hnf([[2, 4], [1, 3]])[0]
    [[1, 1], [0, 2]]
    """
    m = len(M)
    if m == 0:
        return [], []
    n = len(M[0])
    I = identity(m)
    B = [[int(x) for x in row] + I[i] for i, row in enumerate(M)]
    N = n + m
    # columns of A are the rows of B, coordinates reversed
    A = [[B[i][N - 1 - c] for i in range(m)] for c in range(N)]
    W = _to_ints(hermite_normal_form(to_domain(A, ZZ)))
    r = len(W[0]) if W else 0
    rows = [[W[N - 1 - c][r - 1 - t] for c in range(N)] for t in range(r)]
    return [row[:n] for row in rows], [row[n:] for row in rows]


def hnf_rank(H: Matrix) -> int:
    return sum(1 for row in H if any(row))


def kernel_basis(M: Sequence[Sequence[int]]) -> Matrix:
    """
    HNF basis of the left kernel ``{x in Z^m : x·M = 0}``.

    The kernel is saturated in ``Z^m`` by construction.
    """
    H, U = hnf(M)
    return U[hnf_rank(H):]


def snf(M: Sequence[Sequence[int]]) -> Tuple[Matrix, Matrix, Matrix]:
    """
    Smith normal form ``D = U·M·V`` with ``d_1 | d_2 | ...`` and ``d_i >= 0``.

    ``U`` and ``V`` are unimodular; zero invariants come last.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    if m == 0 or n == 0:
        return [[0] * n for _ in range(m)], identity(m), identity(n)
    D, U, V = smith_normal_decomp(to_domain(M, ZZ))
    return _to_ints(D), _to_ints(U), _to_ints(V)


def invariant_factors(M: Sequence[Sequence[int]]) -> List[int]:
    """Nonzero invariant factors, units included: ``[1, 3]`` for ``A2``."""
    if not M or not M[0]:
        return []
    return [int(d) for d in _invariant_factors(to_domain(M, ZZ)) if d]


class IncrementalHNF:
    """
    Z-span of a stream of integer vectors, kept in echelon form.

    Vectors are inserted one at a time by extended-gcd pivot updates, which
    keeps the cost per generator proportional to the current rank; this is
    what makes spanning sets with thousands of generators cheap.
    """

    __slots__ = ["N", "basis", "pivot_location_in_column", "pivot_location_in_row", "changes"]

    def __init__(self, ambient_dimension: int):
        self.N = ambient_dimension
        self.pivot_location_in_column = [None] * ambient_dimension
        self.pivot_location_in_row = []
        self.basis = []
        self.changes = 0

    def __len__(self):
        return len(self.basis)

    def __contains__(self, vec) -> bool:
        return solve_in_span(self.basis, vec) is not None

    def add_vector(self, vec0: Sequence[int]):
        col_piv = self.pivot_location_in_column
        row_piv = self.pivot_location_in_row
        N = self.N
        basis = self.basis
        if len(vec0) != N:
            raise ValueError(f"vector of length {len(vec0)} in ambient dimension {N}")
        vec = [int(v) for v in vec0]
        for j in range(N):
            if not vec[j]:
                continue
            p = col_piv[j]
            if p is None:
                where = bisect_left(row_piv, j)
                basis.insert(where, vec)
                row_piv.insert(where, j)
                for ii in range(where, len(basis)):
                    col_piv[row_piv[ii]] = ii
                self._touch()
                return
            row = basis[p]
            a = row[j]
            b = vec[j]
            if b % a == 0:
                q = b // a
                for jj in range(j, N):
                    vec[jj] -= q * row[jj]
            else:
                x, y, g = xgcd(a, b)
                ag = a // g
                mbg = -b // g
                for jj in range(j, N):
                    aa = row[jj]
                    bb = vec[jj]
                    row[jj] = x * aa + y * bb
                    vec[jj] = mbg * aa + ag * bb
                self._touch()

    def _touch(self):
        self.changes += 1
        if self.changes % 64 == 0:
            self.reduce()

    def reduce(self):
        """Bring the basis to the canonical (reduced) Hermite form."""
        basis = self.basis
        for k, row in enumerate(basis):
            pc = self.pivot_location_in_row[k]
            if row[pc] < 0:
                basis[k] = row = [-v for v in row]
            p = row[pc]
            for i in range(k):
                q = basis[i][pc] // p
                if q:
                    other = basis[i]
                    for jj in range(pc, self.N):
                        other[jj] -= q * row[jj]

    def hermite_basis(self) -> Matrix:
        self.reduce()
        return [list(row) for row in self.basis]


def span_basis(rows: Sequence[Sequence[int]], ambient_dimension: Optional[int] = None) -> Matrix:
    """Canonical HNF basis of the Z-span of ``rows`` (dependent rows allowed)."""
    rows = list(rows)
    if ambient_dimension is None:
        if not rows:
            return []
        ambient_dimension = len(rows[0])
    lattice = IncrementalHNF(ambient_dimension)
    for row in rows:
        lattice.add_vector(row)
    logger.debug("Spanned %d generators to rank %d", len(rows), len(lattice))
    return lattice.hermite_basis()


def solve_in_span(basis: Sequence[Sequence[int]], x: Sequence) -> Optional[List[int]]:
    """
    Integer coordinates of ``x`` with respect to an echelon ``basis``.

    Returns ``None`` when ``x`` is not in the Z-span. ``x`` may hold
    ``Fraction`` entries.
    """
    rest = list(x)
    coords = []
    for row in basis:
        pc = next(j for j, v in enumerate(row) if v)
        if any(rest[j] for j in range(pc)):
            return None
        if rest[pc] % row[pc]:
            return None
        q = rest[pc] // row[pc]
        q = int(q)
        coords.append(q)
        if q:
            for jj in range(pc, len(rest)):
                rest[jj] -= q * row[jj]
    if any(rest):
        return None
    return coords


def is_unimodular(U: Sequence[Sequence[int]]) -> bool:
    return len(U) > 0 and abs(determinant(U)) == 1


def column_combinations(values: Sequence[int]) -> Tuple[int, List[int]]:
    """
    gcd of ``values`` and integer coefficients ``c`` with ``sum(c*v) == gcd``.
    """
    g = 0
    coeffs = [0] * len(values)
    for i, v in enumerate(values):
        if v == 0:
            continue
        x, y, g2 = xgcd(g, v)
        coeffs = [x * c for c in coeffs]
        coeffs[i] = y
        g = g2
    return g, coeffs


__all__ = [
    "xgcd", "hnf", "hnf_rank", "kernel_basis", "snf", "invariant_factors",
    "IncrementalHNF", "span_basis", "solve_in_span", "is_unimodular", "column_combinations",
]

