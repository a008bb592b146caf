"""
Fincke–Pohst enumeration of short vectors in definite lattices.

The Gram matrix is LLL-reduced first and the quadratic form is completed to
squares with exact rational arithmetic; the interval of every coordinate is
computed exactly, so no vector near the bound is lost to rounding. The
branches of the last coordinate are independent and may run in parallel.
"""
import logging
from fractions import Fraction
from math import floor, isqrt
from typing import List, Optional, Sequence, Tuple

from core.Errors import EnumerationCapError, IndefiniteFormError
from core.Runtime import parallel_map
from lattice.Lattice import Lattice, LatticeVector
from linalg.Congruence import cholesky, is_definite
from linalg.LLL import lll_reduce
from linalg.MatrixTools import inverse
from utils.GlobalVarGetter import GlobalVarGetter

logger = logging.getLogger(__name__)

Point = Tuple[Tuple[int, ...], Fraction]


def _candidates(center: Fraction, remaining: Fraction, weight: Fraction) -> List[int]:
    """Integers ``x`` with ``weight·(x - center)² ≤ remaining``."""
    if remaining < 0:
        return []
    radius = isqrt(floor(remaining / weight))
    base = floor(center)
    return [x for x in range(base - radius - 1, base + radius + 3) if weight * (x - center) ** 2 <= remaining]


def _enumerate_branch(Q, bound: Fraction, shift, top: int, cap: int) -> Tuple[List[Point], bool]:
    """
    All ``y`` with ``y[-1] == top`` and ``Q(y + shift) ≤ bound``.

    Returns the points and whether ``cap`` was reached.
    """
    n = len(Q)
    y = [0] * n
    found: List[Point] = []
    overflow = [False]

    def center(i):
        return -shift[i] - sum(Q[i][j] * (y[j] + shift[j]) for j in range(i + 1, n))

    def descend(i, remaining):
        c = center(i)
        for value in _candidates(c, remaining, Q[i][i]):
            y[i] = value
            rest = remaining - Q[i][i] * (value - c) ** 2
            if i == 0:
                found.append((tuple(y), bound - rest))
                if len(found) > cap:
                    overflow[0] = True
                    return
            else:
                descend(i - 1, rest)
            if overflow[0]:
                return

    c = -shift[n - 1]
    y[n - 1] = top
    rest = bound - Q[n - 1][n - 1] * (top - c) ** 2
    if rest >= 0:
        if n == 1:
            found.append((tuple(y), bound - rest))
        else:
            descend(n - 2, rest)
    return found, overflow[0]


class _Enumerator:
    """Reduced-basis data shared by the short-vector and coset enumerations."""

    def __init__(self, L: Lattice):
        self.sign = is_definite(L.gram)
        if self.sign == 0 or L.rank == 0:
            raise IndefiniteFormError(f"short-vector enumeration needs a definite lattice, {L.name} is not")
        self.lattice = L
        reduced, T = lll_reduce(L.gram)
        self.reduced = reduced
        self.T = T
        self.Q = cholesky([[self.sign * x for x in row] for row in reduced])

    def branches(self, bound: Fraction, shift) -> List[int]:
        n = len(self.Q)
        return _candidates(-shift[n - 1], bound, self.Q[n - 1][n - 1])

    def to_lattice_coordinates(self, y: Sequence) -> List:
        T = self.T
        return [sum(T[i][j] * y[j] for j in range(len(y)) if y[j]) for i in range(len(T))]

    def run(self, bound: Fraction, shift, cap: int, start: int = 0, partial=None, n_jobs=None) -> List[Point]:
        branches = self.branches(bound, shift)
        tasks = [(self.Q, bound, shift, top, cap) for top in branches[start:]]
        results = parallel_map(_enumerate_branch, tasks, n_jobs)
        collected = list(partial or [])
        for offset, (points, overflow) in enumerate(results):
            if overflow or len(collected) + len(points) > cap:
                raise EnumerationCapError(
                    f"enumeration of {self.lattice.name} exceeded the cap of {cap} vectors",
                    partial=collected, next_branch=start + offset, cap=cap)
            collected.extend(points)
            logger.debug("Branch %d/%d of %s done: %d points", start + offset + 1, len(branches),
                         self.lattice.name, len(points))
        return collected


def short_vectors(L: Lattice, bound: int, up_to_sign: bool = False, cap: Optional[int] = None,
                  n_jobs: Optional[int] = None, resume: Optional[EnumerationCapError] = None) -> List[LatticeVector]:
    """
    Every nonzero ``v`` with ``|q(v)| ≤ bound``, sorted by coordinates.

    With ``up_to_sign`` only the member of each ``±v`` pair whose first nonzero
    coordinate is positive is kept. ``resume`` continues an enumeration that
    stopped with ``EnumerationCapError``.
    """
    if cap is None:
        cap = GlobalVarGetter.option("enumeration_cap")
    enumerator = _Enumerator(L)
    bound = Fraction(bound)
    zero = [Fraction(0)] * L.rank
    start, partial = (resume.next_branch, resume.partial) if resume is not None else (0, None)
    points = enumerator.run(bound, zero, cap, start, partial, n_jobs)
    out = []
    for y, _ in points:
        if not any(y):
            continue
        coords = enumerator.to_lattice_coordinates(y)
        if up_to_sign and next(c for c in coords if c) < 0:
            continue
        out.append(coords)
    out.sort()
    logger.info("Enumerated %d vectors of %s with |norm| ≤ %s", len(out), L.name, bound)
    return [LatticeVector(L, c) for c in out]


def coset_vectors(L: Lattice, shift: Sequence, bound, cap: Optional[int] = None,
                  n_jobs: Optional[int] = None) -> List[Tuple[List[Fraction], Fraction]]:
    """
    Every ``u`` in ``shift + L`` with ``|q(u)| ≤ bound`` as ``(coordinates, norm)``.

    ``shift`` is a rational vector in the coordinates of ``L``; ``u = 0`` is
    included when ``shift`` lies in ``L``.
    """
    if cap is None:
        cap = GlobalVarGetter.option("enumeration_cap")
    enumerator = _Enumerator(L)
    shift = [Fraction(s) for s in shift]
    reduced_shift = [sum(row[j] * shift[j] for j in range(len(shift))) for row in inverse(enumerator.T)]
    points = enumerator.run(Fraction(bound), reduced_shift, cap, n_jobs=n_jobs)
    out = []
    for y, value in points:
        coords = enumerator.to_lattice_coordinates(y)
        out.append(([Fraction(c) + s for c, s in zip(coords, shift)], enumerator.sign * value))
    out.sort()
    return out
