import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Optional

from enumeration.ShortVectors import short_vectors
from lattice.Lattice import Lattice, LatticeVector
from linalg.LLL import lll_reduce

logger = logging.getLogger(__name__)


@dataclass
class NormCensus:
    """Number of lattice vectors of each norm up to ``bound`` (in absolute value)."""
    counts: Dict[int, int] = field(default_factory=dict)
    bound: int = 0
    up_to_sign: bool = False

    def count(self, norm: int) -> int:
        return self.counts.get(norm, 0)

    def s_name(self) -> str:
        """The ``2^i 3^j`` label of a negative definite census (pairs of norm -4 and -6)."""
        factor = 1 if self.up_to_sign else 2
        return f"2^{self.count(-4) // factor} 3^{self.count(-6) // factor}"

    def to_record(self) -> Dict:
        return {str(k): v for k, v in sorted(self.counts.items())}


def norm_census(L: Lattice, bound: int, up_to_sign: bool = False, n_jobs: Optional[int] = None) -> NormCensus:
    vectors = short_vectors(L, bound, up_to_sign=up_to_sign, n_jobs=n_jobs)
    counts = Counter(v.norm for v in vectors)
    return NormCensus(dict(sorted(counts.items())), bound, up_to_sign)


def min_norm(L: Lattice) -> int:
    """The nonzero norm of least absolute value, with its sign."""
    reduced, _ = lll_reduce(L.gram)
    bound = min(abs(reduced[i][i]) for i in range(L.rank))
    vectors = short_vectors(L, bound)
    return min((v.norm for v in vectors), key=abs)


def has_roots(L: Lattice) -> bool:
    return any(abs(v.norm) == 2 for v in short_vectors(L, 2, up_to_sign=True))


def primitive_represents(L: Lattice, m: int, box: int = 2) -> Optional[LatticeVector]:
    """
    A primitive vector of norm ``m``, or ``None``.

    Exhaustive for definite lattices; indefinite lattices are searched over
    coefficient vectors with entries in ``[-box, box]``.
    """
    sign = 1 if L.is_positive_definite else (-1 if L.is_negative_definite else 0)
    if sign == 0:
        logger.debug("Bounded search for a primitive vector of norm %d in %s", m, L.name)
        for coords in itertools.product(range(-box, box + 1), repeat=L.rank):
            if L.norm(coords) == m and Lattice.is_primitive_vector(coords):
                return LatticeVector(L, coords)
        return None
    if m == 0 or (m > 0) != (sign > 0):
        return None
    for v in short_vectors(L, abs(m), up_to_sign=True):
        if v.norm == m and v.is_primitive:
            return v
    return None
