"""
The Leech lattice on the 24 coordinates ``W = P¹(Z/23)``.

Coordinates ``0..22`` are the residues and ``23`` is the point at infinity.
Vectors are stored as ``√8`` times their real coordinates, with form
``-(x·y)/8``.
"""
import logging
from functools import lru_cache
from itertools import combinations, product
from typing import List

from lattice.EuclideanModel import EuclideanModel
from lattice.Lattice import Lattice

logger = logging.getLogger(__name__)

INFINITY = 23
LEECH_SCALE = 8

# a(...) vectors spanning the 2^9 3^6 S-lattice, already multiplied by √8
NINE_VECTORS = [
    [0, 0, 0, 0, 0, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0],
    [4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0],
    [-4, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2, 0, 0, 0, 0, -2, -2, -2, -2, 0, 0, 0, 0],
    [-2, -2, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2, 0, 0, 0, 0],
    [2, 2, 2, 2, 0, 0, 0, 0, -2, -2, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 2, -2, -2, -2, 0, 0, 0, 0, -2, 2, 2, 2, 0, 0, 0, 0],
    [-2, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, -2, -2, -2, 0, 0, 0, 0],
    [2, -2, -2, -2, 0, 0, 0, 0, -2, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
]


def quadratic_residues() -> List[int]:
    """``Q``: the nonzero squares mod 23 together with 0."""
    return sorted({(k * k) % 23 for k in range(23)})


def leech_generators() -> List[List[int]]:
    gens = []
    Q = quadratic_residues()
    for shift in range(23):
        v = [0] * 24
        for q in Q:
            v[(q + shift) % 23] = 2
        gens.append(v)
    for position in range(24):
        v = [1] * 24
        v[position] = -3
        gens.append(v)
    for i, j in combinations(range(24), 2):
        for si, sj in product((4, -4), repeat=2):
            v = [0] * 24
            v[i], v[j] = si, sj
            gens.append(v)
    return gens


@lru_cache(maxsize=None)
def leech_model() -> EuclideanModel:
    gens = leech_generators()
    logger.info("Spanning the Leech lattice from %d generators", len(gens))
    return EuclideanModel.from_generators(gens, scale=LEECH_SCALE, sign=-1, name="Leech")


def leech() -> Lattice:
    return leech_model().to_lattice()


def translation_permutation(step: int = 1) -> List[int]:
    """``x ↦ x + step`` on ``P¹(Z/23)``, fixing infinity."""
    return [(k + step) % 23 for k in range(23)] + [INFINITY]


def nine_vector_model() -> EuclideanModel:
    """Span of the nine listed vectors, with the Leech form."""
    return EuclideanModel.from_generators(NINE_VECTORS, scale=LEECH_SCALE, sign=-1, name="2^9 3^6")
