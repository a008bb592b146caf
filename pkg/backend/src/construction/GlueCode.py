"""
Glue codes of the pure ``A``-type Niemeier lattices.

Generator words are written as in the Niemeier table: ``[1(01441)]`` is the
word with fixed prefix ``1`` followed by every cyclic shift of ``01441``;
``[(114)]`` stands for all cyclic shifts of ``114``; ``[15]`` is one word.
"""
import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Tuple

from core.Errors import InputError
from discform.GlueMap import span_elements

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]

_WORD = re.compile(r"^\[(?P<prefix>\d*)(?:\((?P<cycle>\d+)\))?\]$")

# name: (n of A_n, copies, generator notation, Coxeter number)
NIEMEIER_TABLE: Dict[str, Tuple[int, int, str, int]] = {
    "N4": (24, 1, "[5]", 25),
    "N10": (12, 2, "[15]", 13),
    "N15": (8, 3, "[(114)]", 9),
    "N17": (6, 4, "[1(216)]", 7),
    "N20": (4, 6, "[1(01441)]", 5),
    "N21": (3, 8, "[3(2001011)]", 4),
    "N22": (2, 12, "[2(11211122212)]", 3),
    "N23": (1, 24, "[1(00000101001100110101111)]", 2),
}

DIAGRAMS = {f"A{n}" + (f"^{m}" if m > 1 else ""): name for name, (n, m, _, _) in NIEMEIER_TABLE.items()}


def parse_words(notation: str) -> List[Word]:
    match = _WORD.match(notation.replace(" ", ""))
    if not match:
        raise InputError(f"cannot parse glue word notation {notation!r}")
    prefix = [int(c) for c in match.group("prefix")]
    cycle = match.group("cycle")
    if cycle is None:
        return [tuple(prefix)]
    letters = [int(c) for c in cycle]
    return [tuple(prefix + letters[k:] + letters[:k]) for k in range(len(letters))]


def parse_word(text: str) -> Word:
    """A single word such as ``2130`` or ``[2130]``."""
    words = parse_words(text if text.startswith("[") else f"[{text}]")
    if len(words) != 1:
        raise InputError(f"{text!r} describes {len(words)} words, expected one")
    return words[0]


@dataclass
class GlueCode:
    """The code over ``Z/(n+1)`` generated by the table words of ``A_n^m``."""
    n: int
    copies: int
    generators: List[Word]
    _elements: set = field(default=None, repr=False)

    @property
    def modulus(self) -> int:
        return self.n + 1

    def elements(self) -> List[Word]:
        if self._elements is None:
            self._elements = span_elements(self.generators, [self.modulus] * self.copies)
            logger.debug("Glue code of A%d^%d has %d words", self.n, self.copies, len(self._elements))
        return sorted(self._elements)

    def __contains__(self, word) -> bool:
        self.elements()
        return tuple(int(x) % self.modulus for x in word) in self._elements

    @staticmethod
    def weight(word: Word) -> int:
        return sum(1 for x in word if x)

    def words_of_weight(self, weight: int) -> List[Word]:
        return [w for w in self.elements() if self.weight(w) == weight]

    def add(self, a: Word, b: Word) -> Word:
        return tuple((x + y) % self.modulus for x, y in zip(a, b))


def glue_vector(n: int, i: int) -> List[int]:
    """
    The ``A_n`` glue vector ``[i]`` scaled by ``n+1``: ``n+1-i`` entries ``i``
    followed by ``i`` entries ``-(n+1-i)``.
    """
    h = n + 1
    i %= h
    return [i] * (h - i) + [-(h - i)] * i


@lru_cache(maxsize=None)
def glue_code(name: str) -> GlueCode:
    """Glue code of a supported Niemeier name (``N20``) or diagram (``A4^6``)."""
    name = DIAGRAMS.get(name, name)
    if name not in NIEMEIER_TABLE:
        raise InputError(f"no glue code for {name}; supported: {', '.join(sorted(NIEMEIER_TABLE))}")
    n, m, notation, _ = NIEMEIER_TABLE[name]
    words = parse_words(notation)
    if any(len(w) != m for w in words):
        raise InputError(f"glue words of {name} do not have length {m}")
    return GlueCode(n, m, words)
