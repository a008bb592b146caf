import logging
from typing import Dict, Sequence

from checker.AbstractChecker import AbstractChecker
from construction.Catalog import named
from construction.Exceptional import s_lattice
from construction.Holy import holy_frame
from construction.Leech import leech
from construction.Niemeier import COXETER_NUMBERS, niemeier
from discform.FiniteQuadraticForm import discriminant_form
from discform.GaussSum import lattice_signature_mod8, milgram_signature
from enumeration.NormCensus import has_roots, min_norm, norm_census
from enumeration.ShortVectors import short_vectors
from lattice.Lattice import Lattice

logger = logging.getLogger(__name__)


def root_count(L: Lattice) -> int:
    return sum(1 for v in short_vectors(L, 2) if abs(v.norm) == 2)


def permuted(L: Lattice) -> Lattice:
    """``L`` in the reversed basis."""
    order = list(reversed(range(L.rank)))
    return Lattice([[L.gram[i][j] for j in order] for i in order], f"{L.name}/reversed")


class LeechChecker(AbstractChecker):
    def __init__(self, census: bool = False, permuted_census: bool = False):
        super().__init__(census=census, permuted_census=permuted_census)
        self.census = census
        self.permuted_census = permuted_census

    def check(self) -> Dict:
        L = leech()
        self.expect(L.is_even, "Leech model is odd")
        self.expect_equal(L.determinant, 1, "Leech determinant")
        self.expect_equal(L.signature, (0, 24), "Leech signature")
        self.expect(not has_roots(L), "Leech model has vectors of norm -2")
        self.expect_equal(min_norm(L), -4, "Leech minimal norm")
        record = {"det": 1, "signature": [0, 24], "min_norm": -4, "roots": 0}
        if self.census:
            kissing = 2 * norm_census(L, 4, up_to_sign=True).count(-4)
            self.expect_equal(kissing, 196560, "norm -4 count")
            record["kissing"] = kissing
            if self.permuted_census:
                again = 2 * norm_census(permuted(L), 4, up_to_sign=True).count(-4)
                self.expect_equal(again, kissing, "norm -4 count in the reversed basis")
        return record


class NiemeierChecker(AbstractChecker):
    def __init__(self, names: Sequence[str] = ("N23", "N22", "N20", "N17", "N10", "N3")):
        super().__init__(names=list(names))
        self.names = list(names)

    def check(self) -> Dict:
        record = {}
        for name in self.names:
            L = niemeier(name)
            self.expect_equal(L.determinant, 1, f"{name} determinant")
            roots = root_count(L)
            self.expect_equal(roots, 24 * COXETER_NUMBERS[name], f"{name} root count")
            record[name] = roots
        return record


class HolyChecker(AbstractChecker):
    def __init__(self, names: Sequence[str] = ("N23", "N22", "N20", "N17")):
        super().__init__(names=list(names))
        self.names = list(names)

    def check(self) -> Dict:
        record = {}
        for name in self.names:
            frame = holy_frame(name)
            hole, sum_zero = frame.hole(), frame.leech_like()
            self.expect_equal(hole.determinant, 1, f"holy {name} hole determinant")
            self.expect_equal(root_count(hole), 24 * frame.h, f"holy {name} hole root count")
            self.expect(sum_zero.is_even, f"holy {name} sum-zero lattice is odd")
            self.expect_equal(sum_zero.rank, 24, f"holy {name} rank")
            self.expect_equal(sum_zero.determinant, 1, f"holy {name} determinant")
            self.expect(not has_roots(sum_zero), f"holy {name} sum-zero lattice has roots")
            record[name] = {"hole_roots": 24 * frame.h, "leech": True}
        return record


class MilgramChecker(AbstractChecker):
    def __init__(self, names: Sequence[str] = ()):
        super().__init__(names=list(names))
        self.names = list(names)

    def check(self) -> Dict:
        record = {}
        for name in self.names:
            L = named(name)
            sigma = milgram_signature(discriminant_form(L), decompose=True)
            self.expect_equal(sigma, lattice_signature_mod8(L), f"Milgram signature of {name}")
            record[name] = sigma
        return record


class SLatticeChecker(AbstractChecker):
    def __init__(self, names: Sequence[str] = ("2^5 3^10", "2^9 3^6", "2^27 3^36")):
        super().__init__(names=list(names))
        self.names = list(names)

    def check(self) -> Dict:
        record = {}
        for name in self.names:
            label = norm_census(s_lattice(name), 6, up_to_sign=True).s_name()
            self.expect_equal(label, name, "S-lattice census")
            record[name] = label
        return record


class SaturationChecker(AbstractChecker):
    """Saturation is idempotent and the double orthogonal complement of a primitive sublattice is itself."""

    def __init__(self, names: Sequence[str] = ("E8", "D4⊕A2", "Leech")):
        super().__init__(names=list(names))
        self.names = list(names)

    def check(self) -> Dict:
        record = {}
        for name in self.names:
            L = named(name)
            rows = [[2 * int(i == j) + int(j == i + 1) for j in range(L.rank)] for i in range(L.rank // 2)]
            sat = L.sublattice(rows).saturation()
            again = sat.saturation()
            self.expect(sat.index_in(again) == 1, f"saturation of a sublattice of {name} is not idempotent")
            double = sat.orthogonal_complement().orthogonal_complement()
            self.expect(all(sat.contains(r) for r in double.coords) and all(double.contains(r) for r in sat.coords),
                        f"double complement differs from the saturation in {name}")
            record[name] = {"rank": sat.rank, "complement_rank": L.rank - sat.rank}
        return record
