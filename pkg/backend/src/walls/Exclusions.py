"""
Lattices that satisfy the Leech-pair conditions but never occur as coinvariant
lattices of symplectic automorphisms on ``K3^[n]``-type manifolds.

Each exclusion glues the lattice to its complement in ``L_M``, picks ``v``
in the complement and exhibits a wall divisor inside the lattice.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from autos.Zoo import zoo_entry
from construction.Catalog import mukai_complements
from construction.Exceptional import exceptional
from core.Errors import InputError, PropertyViolation
from discform.FiniteQuadraticForm import discriminant_form
from discform.GlueMap import find_anti_isometry, glue_overlattice
from walls.Realizability import find_representing_vector
from walls.WallContext import WallContext
from walls.WallDivisor import WallReport, is_wall_divisor, numerical_wall_in

logger = logging.getLogger(__name__)

# prime -> zoo entry realizing a coinvariant lattice of that order
PRIME_REJECTIONS = {13: "A12^2/w2", 23: "Leech/x+1"}


@dataclass
class ExclusionReport:
    lattice: str
    n: int
    complement: str
    v: List[int]
    witness: WallReport
    revalidated: WallReport
    printed_gram: Optional[List[List[int]]] = None

    def to_record(self) -> Dict:
        record = {"lattice": self.lattice, "n": self.n, "complement": self.complement, "v": self.v,
                  "witness": self.witness.to_record(), "revalidated": self.revalidated.is_wall}
        if self.printed_gram is not None:
            record["printed_gram"] = self.printed_gram
        return record


def exclusion_witness(name: str, n: int) -> ExclusionReport:
    S = exceptional(name)
    T = mukai_complements(name)[0]
    glue = find_anti_isometry(discriminant_form(S), discriminant_form(T))
    if glue is None:
        raise PropertyViolation(f"A_{S.name} and A_{T.name} are not anti-isometric", check="exclusion")
    glued = glue_overlattice(S, T, glue, "L_M")
    if abs(glued.lattice.determinant) != 1:
        raise PropertyViolation(f"{S.name} ⊕ {T.name} glued is not unimodular", check="exclusion")
    v = find_representing_vector(T, 2 * n - 2)
    if v is None:
        raise InputError(f"{T.name} does not represent {2 * n - 2} primitively")
    ctx = WallContext.from_overlattice(glued, list(v.coords), n)
    witness = numerical_wall_in(glued.left, ctx)
    if witness is None:
        raise PropertyViolation(f"no wall divisor found in {S.name} for n = {n}", check="exclusion")
    revalidated = is_wall_divisor(ctx, ctx.complement.coordinates_of(witness.divisor))
    if not revalidated.is_wall:
        raise PropertyViolation(f"witness in {S.name} is not a wall divisor", check="exclusion")
    logger.info("%s excluded for n = %d: t² = %d, clause %s", S.name, n, witness.divisor_square, witness.clause)
    return ExclusionReport(S.name, n, T.name, list(v.coords), witness, revalidated)


def d12_exclusion(n: int) -> ExclusionReport:
    """
    ``t ∈ D12+(-2)`` of square ``-2n-6`` with ``(v+t)/2 ∈ L_M``, so that
    ``⟨v, (v+t)/2⟩`` has Gram ``(2-2n, n-1; n-1, -2)`` up to the sign of ``v²``.
    """
    if n < 2:
        raise InputError(f"the D12+(-2) exclusion needs n ≥ 2, got {n}")
    report = exclusion_witness("D12+(-2)", n)
    gram = report.witness.t_gram
    if report.witness.divisor_square != -2 * n - 6 or gram[0][1] != n - 1 or gram[1][1] != -2:
        raise PropertyViolation(f"unexpected D12+(-2) witness {gram}, t² = {report.witness.divisor_square}",
                                check="d12_exclusion")
    report.printed_gram = [[2 - 2 * n, n - 1], [n - 1, -2]]
    return report


def bw16_exclusion(n: int) -> ExclusionReport:
    """``U(2)^4`` only represents ``2n-2`` for odd ``n``."""
    if n < 3 or n % 2 == 0:
        raise InputError(f"BW16(-1) embeds into L_n only for odd n ≥ 3, got {n}")
    return exclusion_witness("BW16(-1)", n)


def s3exo_exclusion(n: int) -> ExclusionReport:
    """``U(3)^4`` only represents ``2n-2`` for ``n ≡ 1 mod 3``."""
    if n < 4 or n % 3 != 1:
        raise InputError(f"S3exo embeds into L_n only for n ≡ 1 mod 3, n ≥ 4, got {n}")
    return exclusion_witness("S3exo", n)


def prime_rejections() -> List[Dict]:
    """Coinvariant ranks of orders 13 and 23: both exceed 20, so neither order acts."""
    out = []
    for p, entry in PRIME_REJECTIONS.items():
        report = zoo_entry(entry).report()
        rank = report["coinvariant_rank"]
        out.append({"p": p, "isometry": entry, "coinvariant_rank": rank, "rejected": rank > 20})
    return out
