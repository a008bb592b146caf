"""
The exceptional coinvariant lattices and the S-lattices they are built from.

Recipes:

* ``BW16(-1)``: ``{x ∈ Z^16 : x mod 2 ∈ RM(1,4), Σx ≡ 0 mod 4}`` with form ``-(x·y)/2``.
* ``D12+(-2)``: ``2·D12 ∪ (2·D12 + 1^12)`` with form ``-(x·y)/2``.
* ``S3exo``: ``{a - φ(a)}`` for the cyclic permutation ``φ`` of ``E8(-1)^3``.
* ``S_{p.K3}``, ``S5exo``, ``S11``, ``W(-1)``: coinvariant lattices of glue
  translations and copy permutations on holy frames.
"""
import logging
from functools import lru_cache
from itertools import product
from typing import Callable, Dict, List

from autos.Isometry import Isometry
from autos.IsometryGroup import IsometryGroup
from construction.GlueCode import parse_word
from construction.Holy import holy_frame, rotate_tail
from construction.Leech import nine_vector_model
from construction.Niemeier import niemeier
from construction.RootLattices import root_lattice
from core.Errors import InputError
from lattice.EuclideanModel import EuclideanModel
from lattice.Lattice import Lattice

logger = logging.getLogger(__name__)

# S-lattice Grams as printed; both are unique in their genus
S_LATTICE_GRAMS = {
    "2^5 3^10": [[-4, -1, -1, 1], [-1, -4, 1, -1], [-1, 1, -4, -1], [1, -1, -1, -4]],
    "2^9 3^6": [[-4, 2, -2, 1], [2, -4, 1, -2], [-2, 1, -4, 2], [1, -2, 2, -4]],
}


def reed_muller_words() -> List[List[int]]:
    """The 32 words of RM(1,4): affine functions on ``F_2^4``, points in binary order."""
    points = list(product((0, 1), repeat=4))
    words = []
    for a in product((0, 1), repeat=4):
        for b in (0, 1):
            words.append([(sum(x * y for x, y in zip(a, p)) + b) % 2 for p in points])
    return words


@lru_cache(maxsize=None)
def bw16_model() -> EuclideanModel:
    gens = reed_muller_words()
    for i in range(16):
        for j in range(i + 1, 16):
            for sign in (1, -1):
                v = [0] * 16
                v[i], v[j] = 2, 2 * sign
                gens.append(v)
    return EuclideanModel.from_generators(gens, scale=2, sign=-1, name="BW16(-1)")


def bw16() -> Lattice:
    return bw16_model().to_lattice()


@lru_cache(maxsize=None)
def d12plus_model() -> EuclideanModel:
    gens = []
    for i in range(11):
        v = [0] * 12
        v[i], v[i + 1] = 2, -2
        gens.append(v)
    v = [0] * 12
    v[10], v[11] = 2, 2
    gens.append(v)
    gens.append([1] * 12)
    return EuclideanModel.from_generators(gens, scale=2, sign=-1, name="D12+(-2)")


def d12plus() -> Lattice:
    return d12plus_model().to_lattice()


@lru_cache(maxsize=None)
def e8_cubed() -> Lattice:
    return niemeier("N3")


def e8_cubed_permutation() -> List[int]:
    """Block permutation ``a_0 → a_1 → a_2 → a_0`` of the three ``E8(-1)`` copies."""
    return [1, 2, 0]


@lru_cache(maxsize=None)
def s3exo() -> Lattice:
    """``{a - φ(a)}`` inside ``E8(-1)^3``."""
    rows = []
    for shift in (0, 8):
        for i in range(8):
            v = [0] * 24
            v[shift + i], v[shift + 8 + i] = 1, -1
            rows.append(v)
    return e8_cubed().sublattice(rows, "S3exo")


def s3exo_complement() -> Lattice:
    """The diagonal ``E8(-3)`` orthogonal to ``S3exo`` in ``E8(-1)^3``."""
    return s3exo().orthogonal_complement("E8(-3)")


def holy_coinvariant(frame_name: str, word, name: str) -> Lattice:
    frame = holy_frame(frame_name)
    L = frame.leech_like()
    g = Isometry(L, frame.leech_model.permutation_matrix(frame.translation_permutation(word)),
                 "".join(map(str, word)), check=False)
    S = IsometryGroup(L, [g]).coinvariant_lattice()
    logger.info("Coinvariant of %s on holy %s: rank %d", g.name, frame_name, S.rank)
    return L.sublattice([list(r) for r in S.coords], name)


def first_word(frame_name: str, weight: int):
    words = holy_frame(frame_name).code.words_of_weight(weight)
    if not words:
        raise InputError(f"the glue code of {frame_name} has no word of weight {weight}")
    return words[0]


@lru_cache(maxsize=None)
def w_minus_one() -> Lattice:
    return holy_coinvariant("N22", first_word("N22", 9), "W(-1)")


@lru_cache(maxsize=None)
def s_27_36() -> Lattice:
    """``2^27 3^36``: the orthogonal of ``W(-1)`` in the holy ``A2^12`` Leech lattice."""
    return w_minus_one().orthogonal_complement("2^27 3^36")


@lru_cache(maxsize=None)
def s5exo() -> Lattice:
    return holy_coinvariant("N20", first_word("N20", 5), "S5exo")


@lru_cache(maxsize=None)
def s11() -> Lattice:
    frame = holy_frame("N22")
    L = frame.leech_like()
    g = Isometry(L, frame.leech_model.permutation_matrix(frame.copy_permutation(rotate_tail(frame.copies))),
                 "rot11", check=False)
    S = IsometryGroup(L, [g]).coinvariant_lattice()
    return L.sublattice([list(r) for r in S.coords], "S11")


@lru_cache(maxsize=None)
def s_pk3(p: int) -> Lattice:
    """Coinvariant lattice of a symplectic automorphism of order ``p`` of a K3 surface."""
    if p == 2:
        return root_lattice("E", 8).rescale(-2, "S2.K3")
    if p == 3:
        return holy_coinvariant("N22", first_word("N22", 6), "S3.K3")
    if p == 5:
        return holy_coinvariant("N20", first_word("N20", 4), "S5.K3")
    if p == 7:
        return holy_coinvariant("N17", parse_word("2130"), "S7.K3")
    raise InputError(f"no K3 coinvariant lattice of order {p}; supported: 2, 3, 5, 7")


def s_lattice(name: str) -> Lattice:
    if name in S_LATTICE_GRAMS:
        return Lattice(S_LATTICE_GRAMS[name], name)
    if name == "2^27 3^36":
        return s_27_36()
    if name == "nine":
        return nine_vector_model().to_lattice()
    raise InputError(f"unknown S-lattice {name}; supported: {', '.join(list(S_LATTICE_GRAMS) + ['2^27 3^36', 'nine'])}")


EXCEPTIONAL: Dict[str, Callable[[], Lattice]] = {
    "BW16(-1)": bw16,
    "D12+(-2)": d12plus,
    "S3exo": s3exo,
    "E8(-3)": s3exo_complement,
    "W(-1)": w_minus_one,
    "S5exo": s5exo,
    "S11": s11,
    "S2.K3": lambda: s_pk3(2),
    "S3.K3": lambda: s_pk3(3),
    "S5.K3": lambda: s_pk3(5),
    "S7.K3": lambda: s_pk3(7),
    "2^5 3^10": lambda: s_lattice("2^5 3^10"),
    "2^9 3^6": lambda: s_lattice("2^9 3^6"),
    "2^27 3^36": s_27_36,
}


def exceptional(name: str) -> Lattice:
    if name not in EXCEPTIONAL:
        raise InputError(f"unknown exceptional lattice {name}; catalog: {', '.join(EXCEPTIONAL)}")
    return EXCEPTIONAL[name]()
