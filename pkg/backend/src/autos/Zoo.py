"""Explicit isometries of Niemeier and Leech lattices."""
import logging
from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Callable, Dict, List, Optional, Sequence

from autos.Isometry import Isometry
from autos.IsometryGroup import IsometryGroup
from construction.Exceptional import e8_cubed, e8_cubed_permutation, first_word
from construction.GlueCode import parse_word
from construction.Holy import HolyFrame, copy_permutation, holy_frame, rotate_tail
from construction.Leech import leech_model, translation_permutation
from construction.Niemeier import niemeier_model
from core.Errors import InputError
from lattice.Lattice import Lattice

logger = logging.getLogger(__name__)

# (order, invariant rank) -> conjugacy class name in Co_0
CLASS_LABELS = {(5, 0): "5A", (5, 8): "5B", (5, 4): "5C", (3, 8): "3D"}


def glue_translation_isometry(frame: HolyFrame, word: Sequence[int]) -> Isometry:
    perm = frame.translation_permutation(word)
    L = frame.leech_like()
    return Isometry(L, frame.leech_model.permutation_matrix(perm), "t" + "".join(map(str, word)), check=False)


def copy_permutation_isometry(frame: HolyFrame, sigma: Sequence[int]) -> Isometry:
    perm = frame.copy_permutation(list(sigma))
    L = frame.leech_like()
    return Isometry(L, frame.leech_model.permutation_matrix(perm), f"σ{list(sigma)}", check=False)


def niemeier_copy_permutation(name: str, sigma: Sequence[int]) -> Isometry:
    """Permutation of the ``A_n`` copies of a Niemeier model."""
    frame = holy_frame(name)
    model = niemeier_model(name)
    frame.copy_permutation(list(sigma))
    perm = copy_permutation(frame.h, frame.copies, list(sigma))
    return Isometry(model.to_lattice(), model.permutation_matrix(perm), f"σ{list(sigma)}", check=False)


def leech_translation(step: int = 1) -> Isometry:
    """``x ↦ x + step`` on ``P¹(Z/23)``."""
    model = leech_model()
    return Isometry(model.to_lattice(), model.permutation_matrix(translation_permutation(step)), f"x+{step}")


def block_permutation(L: Lattice, blocks: int, perm: Sequence[int]) -> Isometry:
    """Permute ``blocks`` equal orthogonal summands: block ``j`` goes to block ``perm[j]``."""
    if L.rank % blocks or sorted(perm) != list(range(blocks)):
        raise InputError(f"cannot permute {blocks} blocks of {L.name} by {list(perm)}")
    b = L.rank // blocks
    P = [[0] * L.rank for _ in range(L.rank)]
    for j in range(blocks):
        for k in range(b):
            P[perm[j] * b + k][j * b + k] = 1
    return Isometry(L, P, f"π{list(perm)}")


def translation_invariant_rank(frame: HolyFrame, word: Sequence[int]) -> int:
    """
    Rank of the invariant lattice of a glue translation: a shift by ``t`` in a
    copy has ``gcd(t, n+1)`` cycles, each contributing one invariant direction
    beyond the sum-zero constraint.
    """
    return sum(gcd(t % frame.h, frame.h) - 1 for t in word)


def invariant_rank_census(frame: HolyFrame) -> Dict[int, int]:
    ranks = Counter(translation_invariant_rank(frame, w) for w in frame.code.elements() if any(w))
    return dict(sorted(ranks.items()))


def frame_shape(order: int, invariant_rank: int) -> str:
    """Frame shape ``1^a p^b`` of an element of prime order from its invariant rank."""
    b = (24 - invariant_rank) // (order - 1)
    a = invariant_rank - b
    return f"1^{a} {order}^{b}"


def class_label(order: int, invariant_rank: int) -> str:
    return CLASS_LABELS.get((order, invariant_rank), frame_shape(order, invariant_rank))


@dataclass
class ZooEntry:
    name: str
    order: int
    build: Callable[[], Isometry]
    description: str = ""

    def report(self) -> Dict:
        g = self.build()
        G = IsometryGroup(g.lattice, [g])
        T = G.invariant_lattice()
        return {"name": self.name, "order": self.order, "lattice": g.lattice.name, "description": self.description,
                "invariant_rank": T.rank, "coinvariant_rank": g.lattice.rank - T.rank,
                "class": class_label(self.order, T.rank) if g.lattice.rank == 24 else None}


def _word_entry(name: str, frame_name: str, order: int, weight: Optional[int] = None,
                word: Optional[str] = None) -> ZooEntry:
    def build():
        frame = holy_frame(frame_name)
        w = parse_word(word) if word else first_word(frame_name, weight)
        return glue_translation_isometry(frame, w)

    what = f"word {word}" if word else f"first word of weight {weight}"
    return ZooEntry(name, order, build, f"glue translation on holy {frame_name}, {what}")


def zoo() -> List[ZooEntry]:
    entries = [_word_entry(f"A1^24/w{w}", "N23", 2, weight=w) for w in (8, 12, 16, 24)]
    entries += [_word_entry(f"A2^12/w{w}", "N22", 3, weight=w) for w in (6, 9, 12)]
    entries.append(ZooEntry("E8^3/cycle", 3, lambda: block_permutation(e8_cubed(), 3, e8_cubed_permutation()),
                            "cyclic permutation of the E8(-1) copies"))
    entries += [_word_entry(f"A4^6/w{w}", "N20", 5, weight=w) for w in (4, 5, 6)]
    entries += [_word_entry(f"A6^4/{w}", "N17", 7, word=w) for w in ("2130", "1216")]
    entries.append(ZooEntry("A2^12/rot11", 11, lambda: copy_permutation_isometry(holy_frame("N22"),
                                                                                   rotate_tail(12)),
                            "fix copy 0, rotate copies 1..11 on holy A2^12"))
    entries.append(ZooEntry("N22/rot11", 11, lambda: niemeier_copy_permutation("N22", rotate_tail(12)),
                            "fix copy 0, rotate copies 1..11 on N22"))
    entries.append(_word_entry("A12^2/w2", "N10", 13, weight=2))
    entries.append(ZooEntry("Leech/x+1", 23, leech_translation, "x ↦ x+1 on P¹(Z/23)"))
    return entries


def zoo_entry(name: str) -> ZooEntry:
    for entry in zoo():
        if entry.name == name:
            return entry
    raise InputError(f"unknown zoo entry {name}; known: {', '.join(e.name for e in zoo())}")
