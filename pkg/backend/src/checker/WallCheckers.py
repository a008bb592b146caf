import logging
from typing import Dict, List, Optional, Sequence

from checker.AbstractChecker import AbstractChecker
from construction.Catalog import mukai_complements
from construction.Exceptional import exceptional
from core.Verdict import Realizability
from walls.Classification import classification_table
from walls.Exclusions import bw16_exclusion, d12_exclusion, s3exo_exclusion
from walls.Realizability import conway_from_coinvariant, huybrechts_equivalents, realizability
from walls.WallContext import WallContext
from walls.WallDivisor import is_wall_divisor

logger = logging.getLogger(__name__)

# indices of L_M = U^4 ⊕ E8(-1)^2
E4, F4, FIRST_E8, SECOND_E8 = 6, 7, 8, 16


def standard_divisor(ctx: WallContext, entries: Dict[int, int]) -> List[int]:
    """A vector of ``L_n`` given by its nonzero ``L_M`` coordinates."""
    x = [0] * ctx.lattice.rank
    for i, c in entries.items():
        x[i] = c
    return ctx.complement.coordinates_of(x)


class WallPredicateChecker(AbstractChecker):
    """Walls of ``L_2``: a root, a norm -10 vector of divisibility 2, and a norm -4 non-wall."""

    def check(self) -> Dict:
        ctx = WallContext.standard(2)
        cases = {
            "root": ({FIRST_E8: 1}, True),
            "norm -10": ({E4: 1, F4: -1, FIRST_E8: 2}, True),
            "norm -4": ({FIRST_E8: 1, SECOND_E8: 1}, False),
        }
        record = {}
        for label, (entries, wall) in cases.items():
            D = standard_divisor(ctx, entries)
            report = is_wall_divisor(ctx, D)
            flipped = is_wall_divisor(ctx, [-c for c in D])
            self.expect_equal(report.is_wall, wall, f"wall verdict for the {label} divisor")
            self.expect_equal(flipped.clause, report.clause, f"clause under D ↦ -D for the {label} divisor")
            record[label] = report.to_record()
        return record


class HuybrechtsChecker(AbstractChecker):
    def __init__(self, expected: Optional[Dict[str, bool]] = None):
        expected = dict(expected or {"S2.K3": True, "BW16(-1)": False, "S11": True})
        super().__init__(expected=expected)
        self.expected = expected

    def check(self) -> Dict:
        record = {}
        for name, holds in self.expected.items():
            M = exceptional(name)
            report = huybrechts_equivalents(M)
            conway = conway_from_coinvariant(M)
            self.expect_equal(report.mukai_embedding, holds, f"embedding condition for {name}")
            self.expect_equal(conway.holds, report.mukai_embedding, f"Conway condition for {name}")
            record[name] = report.to_record()
        return record


class RealizabilityChecker(AbstractChecker):
    def check(self) -> Dict:
        e8 = realizability(exceptional("S2.K3"), 2, mukai_complements("S2.K3"))
        self.expect_equal(e8.verdict, Realizability.REALIZABLE, "E8(-2) on L_2")
        bw16 = realizability(exceptional("BW16(-1)"), 3, mukai_complements("BW16(-1)"))
        self.expect_equal(bw16.verdict, Realizability.OBSTRUCTED, "BW16(-1) on L_3")
        return {"E8(-2)": e8.to_record(), "BW16(-1)": bw16.to_record()}


class ExclusionChecker(AbstractChecker):
    def __init__(self, d12: Sequence[int] = (2, 3), bw16: Sequence[int] = (3,), s3exo: Sequence[int] = (4,)):
        super().__init__(d12=list(d12), bw16=list(bw16), s3exo=list(s3exo))
        self.cases = [(d12_exclusion, list(d12)), (bw16_exclusion, list(bw16)), (s3exo_exclusion, list(s3exo))]

    def check(self) -> Dict:
        record = {}
        for build, ns in self.cases:
            for n in ns:
                report = build(n)
                self.expect(report.revalidated.is_wall, f"{report.lattice} witness for n = {n} is not a wall")
                record[f"{report.lattice}/n={n}"] = report.to_record()
        return record


class ClassificationChecker(AbstractChecker):
    def __init__(self, expected: Optional[List[List]] = None):
        expected = [list(r) for r in (expected or [[2, "E8(-2)", 1], [3, "S3.K3", 1], [3, "W(-1)", 2],
                                                   [5, "S5.K3", 1], [5, "S5exo", 3], [7, "S7.K3", 1],
                                                   [11, "S11", 2]])]
        super().__init__(expected=expected)
        self.expected = expected

    def check(self) -> Dict:
        table = classification_table()
        rows = [[r.p, r.lattice, r.minimal_n] for r in table.rows]
        self.expect_equal(rows, self.expected, "classification rows")
        order_eleven = next(r for r in table.rows if r.p == 11)
        self.expect_equal(order_eleven.deformation_classes, 2, "order-11 deformation classes")
        self.expect_equal(len(table.exclusions), 3, "exclusion witnesses")
        for r in table.rejections:
            self.expect(r["rejected"], f"order {r['p']} not rejected")
        return table.to_record()
