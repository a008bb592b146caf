import logging
from typing import Dict, Optional, Sequence

from autos.IsometryGroup import IsometryGroup, group_closure
from autos.Zoo import invariant_rank_census, zoo, zoo_entry
from checker.AbstractChecker import AbstractChecker
from construction.Catalog import mukai_complements, named
from construction.Holy import holy_frame
from discform.Nikulin import two_modular_invariants
from lattice.Lattice import Lattice

logger = logging.getLogger(__name__)


class OrderFiveCensusChecker(AbstractChecker):
    """Invariant ranks of the nonzero glue translations of holy ``A4^6``."""

    def __init__(self, frame: str = "N20", expected: Optional[Dict[int, int]] = None):
        expected = {int(k): v for k, v in (expected or {0: 40, 4: 24, 8: 60}).items()}
        super().__init__(frame=frame, expected=expected)
        self.frame = frame
        self.expected = expected

    def check(self) -> Dict:
        census = invariant_rank_census(holy_frame(self.frame))
        self.expect_equal(census, self.expected, f"invariant-rank census of {self.frame}")
        return {str(k): v for k, v in census.items()}


class OrderElevenChecker(AbstractChecker):
    def __init__(self, entry: str = "N22/rot11"):
        super().__init__(entry=entry)
        self.entry = entry

    def check(self) -> Dict:
        report = zoo_entry(self.entry).report()
        self.expect_equal(report["coinvariant_rank"], 20, "order-11 coinvariant rank")
        self.expect_equal(report["invariant_rank"], 4, "order-11 invariant rank")
        dets = [T.determinant for T in mukai_complements("S11")]
        self.expect(all(d == 121 for d in dets), f"order-11 complements have determinants {dets}")
        return {"coinvariant_rank": 20, "invariant_rank": 4, "complement_dets": dets}


class ZooRankChecker(AbstractChecker):
    """Coinvariant ranks realized by the isometry zoo, per prime order."""

    def __init__(self, expected: Optional[Dict[int, Sequence[int]]] = None, e8_entry: str = "A1^24/w8"):
        expected = {int(k): sorted(v) for k, v in
                    (expected or {2: [8, 12, 16, 24], 3: [12, 16, 18, 24], 13: [24], 23: [22]}).items()}
        super().__init__(expected=expected, e8_entry=e8_entry)
        self.expected = expected
        self.e8_entry = e8_entry

    def check(self) -> Dict:
        ranks = {}
        for entry in zoo():
            if entry.order in self.expected:
                ranks.setdefault(entry.order, set()).add(entry.report()["coinvariant_rank"])
        found = {p: sorted(r) for p, r in ranks.items()}
        self.expect_equal(found, self.expected, "coinvariant ranks by order")
        g = zoo_entry(self.e8_entry).build()
        S = IsometryGroup(g.lattice, [g]).coinvariant_lattice()
        invariants = two_modular_invariants(Lattice(S.gram, S.name))
        self.expect_equal(invariants.to_record(), two_modular_invariants(named("E8(-2)")).to_record(),
                          "2-modular invariants of the rank-8 involution lattice")
        return {"ranks": {str(p): r for p, r in found.items()}, "e8_invariants": invariants.to_record()}


class TorsionChecker(AbstractChecker):
    """``|G|·L ⊂ T_G ⊕ S_G`` for cyclic groups of the zoo."""

    def __init__(self, entries: Sequence[str] = ("A1^24/w8", "A2^12/w6", "E8^3/cycle", "A4^6/w5")):
        super().__init__(entries=list(entries))
        self.entries = list(entries)

    def check(self) -> Dict:
        record = {}
        for name in self.entries:
            g = zoo_entry(name).build()
            G = group_closure(g.lattice, [g])
            self.expect(G.torsion_check(), f"torsion check failed for {name}")
            record[name] = {"order": G.order, "torsion_index": G.torsion_index()}
        return record
