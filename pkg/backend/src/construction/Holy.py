"""
The holy construction of the Leech lattice from a deep hole of type ``A_n^m``.

Coordinates are ``2(n+1)`` times the real ones, ``n+1`` per copy, with form
``-(x·y)/(2(n+1))²``. The hole vertices of copy ``j`` are the extended
simple roots ``f_i^j``; the glue vectors ``h_w`` carry, in each copy, the
shifted Weyl vector ``g_{w_j}`` with ``g_i - g_0 = [i]``.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence

from construction.GlueCode import DIAGRAMS, GlueCode, Word, glue_code
from core.Errors import InputError
from lattice.EuclideanModel import EuclideanModel
from lattice.Lattice import Lattice

logger = logging.getLogger(__name__)


def copy_permutation(block: int, copies: int, sigma: Sequence[int]) -> List[int]:
    """Coordinate permutation moving block ``j`` onto block ``sigma[j]``."""
    if sorted(sigma) != list(range(copies)):
        raise InputError(f"{list(sigma)} is not a permutation of {copies} copies")
    return [sigma[j] * block + k for j in range(copies) for k in range(block)]


def rotate_tail(copies: int) -> List[int]:
    """Fix copy 0 and rotate copies ``1..m-1`` by one step."""
    return [0] + [1 + j % (copies - 1) for j in range(1, copies)]


@dataclass
class HolyFrame:
    name: str
    code: GlueCode

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def copies(self) -> int:
        return self.code.copies

    @property
    def h(self) -> int:
        return self.code.modulus

    @property
    def dimension(self) -> int:
        return self.h * self.copies

    @property
    def scale(self) -> int:
        return 4 * self.h * self.h

    def roots(self) -> List[List[int]]:
        """Every ``f_i^j``: ``f_i = 2h(e_i - e_{i-1})`` and ``f_0 = 2h(e_0 - e_n)``."""
        h, out = self.h, []
        for j in range(self.copies):
            for i in range(h):
                v = [0] * self.dimension
                v[j * h + i] += 2 * h
                v[j * h + (i - 1) % h] -= 2 * h
                out.append(v)
        return out

    def weyl_vector(self, i: int) -> List[int]:
        """``g_i[k] = g_0[(k+i) mod h]`` with ``g_0[k] = 2k - n``."""
        return [2 * ((k + i) % self.h) - self.n for k in range(self.h)]

    def glue_vector(self, word: Word) -> List[int]:
        return [x for letter in word for x in self.weyl_vector(letter)]

    def _models(self):
        zero = self.glue_vector(tuple(0 for _ in range(self.copies)))
        words = self.code.elements()
        differences = [[a - b for a, b in zip(self.glue_vector(w), zero)] for w in words if any(w)]
        roots = self.roots()
        logger.info("Holy %s: %d roots and %d glue words", self.name, len(roots), len(words))
        hole = EuclideanModel.from_generators(roots + differences, self.scale, -1, f"hole({self.name})")
        leech = EuclideanModel.from_generators([[a - b for a, b in zip(f, zero)] for f in roots] + differences,
                                               self.scale, -1, f"Λ({self.name})")
        return hole, leech

    @property
    def hole_model(self) -> EuclideanModel:
        return _holy_models(self.name)[0]

    @property
    def leech_model(self) -> EuclideanModel:
        return _holy_models(self.name)[1]

    def hole(self) -> Lattice:
        return self.hole_model.to_lattice()

    def leech_like(self) -> Lattice:
        return self.leech_model.to_lattice()

    def translation_permutation(self, word: Sequence[int]) -> List[int]:
        """
        Coordinate permutation of ``h_w ↦ h_{w+t}``: inside copy ``j`` the new
        coordinate ``k`` is the old coordinate ``k + t_j``.
        """
        if len(word) != self.copies:
            raise InputError(f"word of length {len(word)} on {self.copies} copies")
        if tuple(word) not in self.code:
            raise InputError(f"{''.join(map(str, word))} is not in the glue code of {self.name}")
        h = self.h
        return [j * h + (k - word[j]) % h for j in range(self.copies) for k in range(h)]

    def copy_permutation(self, sigma: Sequence[int]) -> List[int]:
        images = [tuple(w[sigma.index(j)] for j in range(self.copies)) for w in self.code.generators]
        if any(w not in self.code for w in images):
            raise InputError(f"copy permutation {list(sigma)} does not preserve the glue code of {self.name}")
        return copy_permutation(self.h, self.copies, sigma)


@lru_cache(maxsize=None)
def _holy_models(name: str):
    return holy_frame(name)._models()


@lru_cache(maxsize=None)
def holy_frame(name: str) -> HolyFrame:
    name = DIAGRAMS.get(name, name)
    return HolyFrame(name, glue_code(name))


def holy_construction(name: str):
    """``(leech_like, hole, frame)`` for a pure ``A``-type Niemeier diagram."""
    frame = holy_frame(name)
    return frame.leech_like(), frame.hole(), frame
