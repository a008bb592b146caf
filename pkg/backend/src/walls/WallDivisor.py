"""
The numerical wall-divisor predicate and the search for walls inside a sublattice.

For ``D ∈ L_n`` let ``T_D`` be the saturation of ``⟨v, D⟩`` in ``L_M`` and
complete ``v`` to a basis ``{v, r}`` of ``T_D`` with ``0 ≤ (v,r) ≤ v²/2``.
``D`` is a wall divisor when ``r² = -2`` or ``0 ≤ r²v² ≤ (v,r)² < (v²/2)²``.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Dict, List, Optional, Sequence

from core.Errors import DependentVectorsError, IndefiniteFormError, InputError
from enumeration.ShortVectors import coset_vectors, short_vectors
from lattice.Lattice import Lattice, LatticeVector
from linalg.MatrixTools import inverse, mat_mul, transpose, vec_mat
from linalg.NormalForms import column_combinations, xgcd
from walls.WallContext import WallContext

logger = logging.getLogger(__name__)

ROOT_CLAUSE = "root"
NORM_CLAUSE = "norm"


@dataclass
class WallReport:
    divisor: List[int]
    divisor_square: int
    t_gram: List[List[int]] = field(default_factory=list)
    r: Optional[List[int]] = None
    pairing: Optional[int] = None
    r_square: Optional[int] = None
    clause: Optional[str] = None
    divisor_in_sublattice: Optional[List[int]] = None

    @property
    def is_wall(self) -> bool:
        return self.clause is not None

    def to_record(self) -> Dict:
        record = {"divisor": self.divisor, "divisor_square": self.divisor_square, "t_gram": self.t_gram,
                  "r": self.r, "v_r": self.pairing, "r_square": self.r_square, "clause": self.clause,
                  "wall": self.is_wall}
        if self.divisor_in_sublattice is not None:
            record["divisor_in_sublattice"] = self.divisor_in_sublattice
        return record


def clause_of(v_square: int, s: int, r_square: int) -> Optional[str]:
    """Which clause a normalized ``r`` with ``(v,r) = s`` satisfies, if any."""
    if r_square == -2:
        return ROOT_CLAUSE
    if 0 <= r_square * v_square <= s * s < Fraction(v_square, 2) ** 2:
        return NORM_CLAUSE
    return None


def normalize_generator(L: Lattice, v: Sequence[int], r: Sequence[int]) -> List[int]:
    """``r ↦ ±r + kv`` with ``0 ≤ (v,r) ≤ v²/2``."""
    v2 = L.norm(v)
    s = L.pairing(v, r)
    # s + k·v² in (-v²/2, v²/2]
    k = (v2 - 2 * s) // (2 * v2) if v2 else 0
    r = [a + k * b for a, b in zip(r, v)]
    if L.pairing(v, r) < 0:
        r = [-a for a in r]
    return r


def _is_primitive_pair(a: Sequence[int], b: Sequence[int]) -> bool:
    minors = (a[i] * b[j] - a[j] * b[i] for i, j in combinations(range(len(a)), 2))
    return reduce(gcd, (abs(m) for m in minors), 0) == 1


def _report(L: Lattice, v, d, r) -> WallReport:
    r = normalize_generator(L, v, r)
    s, r2 = L.pairing(v, r), L.norm(r)
    gram = [[L.norm(v), s], [s, r2]]
    return WallReport(list(d), L.norm(d), gram, r, s, r2, clause_of(L.norm(v), s, r2))


def is_wall_divisor(ctx: WallContext, D) -> WallReport:
    """``D`` in the coordinates of ``ctx.complement``."""
    coords = list(D.coords if isinstance(D, LatticeVector) else D)
    if not any(coords):
        raise InputError("a wall divisor must be nonzero")
    L = ctx.lattice
    d = ctx.complement.to_ambient(coords)
    if ctx.v is None:
        q = L.norm(d)
        return WallReport(d, q, [[q]], clause=ROOT_CLAUSE if q == -2 else None)
    try:
        T = L.sublattice([ctx.v, d]).saturation()
    except DependentVectorsError:
        raise InputError("D is proportional to v")
    a, b = T.coordinates_of(ctx.v)
    x, y, g = xgcd(a, b)
    if g != 1:
        raise InputError("v is not primitive in T_D")
    r = T.to_ambient([-y, x])
    return _report(L, ctx.v, d, r)


def _primitive(x: Sequence[int]) -> List[int]:
    g = reduce(gcd, (abs(int(c)) for c in x), 0)
    return [int(c) // g for c in x]


def numerical_wall_in(S: Lattice, ctx: WallContext, cap: Optional[int] = None) -> Optional[WallReport]:
    """
    First wall divisor of ``ctx`` lying in ``S``, or ``None``.

    The search runs over the saturation ``K`` of ``S + Zv``: every
    ``s = (v,r)`` in ``[0, v²/2]`` admitted by ``K`` fixes a coset of ``S``
    containing the projections ``u = r - (s/v²)v``, and both clauses bound
    ``|u²|`` by ``2 + v²/4``.
    """
    if not S.is_negative_definite:
        raise IndefiniteFormError(f"{S.name} is not negative definite")
    L = ctx.lattice
    rows = ctx.in_lattice(S)
    if ctx.v is None:
        for vec in short_vectors(S, 2, up_to_sign=True, cap=cap):
            if vec.norm == -2:
                return WallReport(vec_mat(list(vec.coords), rows), -2, [[-2]], clause=ROOT_CLAUSE,
                                  divisor_in_sublattice=list(vec.coords))
        return None
    v, v2 = ctx.v, ctx.v_square
    K = L.sublattice(rows + [v]).saturation()
    kappa = [list(r) for r in K.coords]
    g, coeffs = column_combinations([L.pairing(v, k) for k in kappa])
    gram_s = S.gram
    inv_s = inverse(gram_s)
    rows_g = mat_mul(rows, L.gram)
    bound = 2 + Fraction(v2, 4)
    for s in range(0, v2 // 2 + 1, g):
        r_s = [sum((s // g) * c * k[j] for c, k in zip(coeffs, kappa)) for j in range(L.rank)]
        projection = [Fraction(x) - Fraction(s, v2) * y for x, y in zip(r_s, v)]
        pairings = [sum(projection[j] * row[j] for j in range(L.rank)) for row in rows_g]
        shift = [sum(pairings[i] * inv_s[i][j] for i in range(len(rows))) for j in range(len(rows))]
        for u, u_square in coset_vectors(S, shift, bound, cap=cap):
            if not any(u):
                continue
            r_square = u_square + Fraction(s * s, v2)
            clause = clause_of(v2, s, r_square)
            if clause is None:
                continue
            u_lattice = [sum(u[i] * rows[i][j] for i in range(len(rows))) for j in range(L.rank)]
            r = [int(a + Fraction(s, v2) * b) for a, b in zip(u_lattice, v)]
            if not _is_primitive_pair(v, r):
                continue
            t = _primitive([v2 * a - s * b for a, b in zip(r, v)])
            report = WallReport(t, L.norm(t), [[v2, s], [s, int(r_square)]], r, s, int(r_square), clause)
            report.divisor_in_sublattice = [int(c) for c in _sublattice_coordinates(rows, t, L)]
            logger.info("Wall in %s: s = %d, r² = %s, clause %s", S.name, s, r_square, clause)
            return report
    logger.info("No numerical wall divisor in %s for n = %d", S.name, ctx.n)
    return None


def _sublattice_coordinates(rows: List[List[int]], x: Sequence[int], L: Lattice) -> List[Fraction]:
    gram = mat_mul(mat_mul(rows, L.gram), transpose(rows))
    pairings = [sum(x[j] * c for j, c in enumerate(row)) for row in mat_mul(rows, L.gram)]
    inv = inverse(gram)
    return [sum(pairings[i] * inv[i][j] for i in range(len(rows))) for j in range(len(rows))]
