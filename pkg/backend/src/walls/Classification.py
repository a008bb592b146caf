"""Minimal ``n`` for which each admissible coinvariant lattice occurs on ``K3^[n]``-type manifolds."""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from construction.Catalog import mukai_complements, named
from construction.Exceptional import exceptional
from core.Errors import InputError, LatticeError, PropertyViolation
from core.Verdict import Realizability, Verdict
from discform.Nikulin import nikulin_embedding_exists, nikulin_unique
from enumeration.NormCensus import has_roots
from lattice.Lattice import Lattice
from walls.Exclusions import bw16_exclusion, d12_exclusion, prime_rejections, s3exo_exclusion
from walls.Realizability import ConwayReport, conway_from_coinvariant, find_representing_vector, realizability

logger = logging.getLogger(__name__)

# (p, catalog id, printed name)
CLASSIFICATION = [
    (2, "S2.K3", "E8(-2)"),
    (3, "S3.K3", "S3.K3"),
    (3, "W(-1)", "W(-1)"),
    (5, "S5.K3", "S5.K3"),
    (5, "S5exo", "S5exo"),
    (7, "S7.K3", "S7.K3"),
    (11, "S11", "S11"),
]

EXCLUSIONS = [("D12+(-2)", d12_exclusion, 2), ("BW16(-1)", bw16_exclusion, 3), ("S3exo", s3exo_exclusion, 4)]

MAX_N = 30


@dataclass
class ClassificationRow:
    p: int
    lattice: str
    minimal_n: int
    witness: Dict
    deformation_classes: Optional[int] = None
    conway: Optional[ConwayReport] = None
    leech_pair: Dict = field(default_factory=dict)

    def validate(self):
        """Re-check the representing vector of the witness."""
        if self.minimal_n == 1:
            return
        T = named(self.witness["complement"])
        v = self.witness["v"]
        if T.norm(v) != 2 * self.minimal_n - 2 or not Lattice.is_primitive_vector(v):
            raise PropertyViolation(f"witness for {self.lattice} does not represent {2 * self.minimal_n - 2}",
                                    check="classification")

    def to_record(self) -> Dict:
        record = {"p": self.p, "lattice": self.lattice, "minimal_n": self.minimal_n, "witness": self.witness,
                  "leech_pair": self.leech_pair}
        if self.deformation_classes is not None:
            record["deformation_classes"] = self.deformation_classes
        if self.conway is not None:
            record["conway"] = self.conway.to_record()
        return record

    @staticmethod
    def from_record(record: Dict) -> "ClassificationRow":
        try:
            row = ClassificationRow(int(record["p"]), record["lattice"], int(record["minimal_n"]),
                                    dict(record["witness"]), record.get("deformation_classes"),
                                    leech_pair=dict(record.get("leech_pair", {})))
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"malformed classification row: {e}")
        row.validate()
        return row


def _catalog_entry(name: str):
    for p, catalog_id, printed in CLASSIFICATION:
        if name in (catalog_id, printed):
            return p, catalog_id, printed
    raise InputError(f"{name} is not in the classification catalog; known: "
                     f"{', '.join(printed for _, _, printed in CLASSIFICATION)}")


def minimal_n(name: str, max_n: int = MAX_N) -> ClassificationRow:
    """
    The smallest ``n`` with a primitive embedding ``S ⊂ L_n`` free of walls.

    ``n = 1`` is the K3 case: an embedding into ``U^3 ⊕ E8(-1)^2`` and no
    roots. Otherwise some complement must primitively represent ``2n-2``;
    when ``p | n-1`` every glue choice is also checked for walls.
    """
    p, catalog_id, printed = _catalog_entry(name)
    S = exceptional(catalog_id)
    conway = conway_from_coinvariant(S)
    root_free = not has_roots(S)
    leech_pair = {"negative_definite": S.is_negative_definite, "root_free": root_free}

    def row(n, witness, classes=None):
        return ClassificationRow(p, printed, n, witness, classes, conway, leech_pair)

    embedding = nikulin_embedding_exists(S, (3, 19)) if root_free else None
    if embedding is not None and embedding.verdict == Verdict.YES:
        logger.info("%s embeds into the K3 lattice", printed)
        # a unique complement genus class means a single deformation class
        unique = nikulin_unique(embedding.complement_signature, embedding.complement_form) == Verdict.UNIQUE
        return row(1, {"embedding": "K3"}, 1 if unique else None)
    complements = mukai_complements(catalog_id)
    for n in range(2, max_n + 1):
        representing = []
        for T in complements:
            v = find_representing_vector(T, 2 * n - 2)
            if v is not None:
                representing.append((T, v))
        if not representing:
            continue
        if (n - 1) % p == 0:
            report = realizability(S, n, [T for T, _ in representing])
            if report.verdict != Realizability.REALIZABLE:
                logger.info("%s: n = %d rejected (%s)", printed, n, report.verdict)
                continue
        T, v = representing[0]
        logger.info("%s: minimal n = %d via %s", printed, n, T.name)
        return row(n, {"complement": T.name, "v": list(v.coords)}, len(representing) if n == 2 else None)
    raise InputError(f"no admissible n ≤ {max_n} for {printed}")


def exclusions() -> List[Dict]:
    out = []
    for name, build, n in EXCLUSIONS:
        try:
            out.append(build(n).to_record())
        except LatticeError as e:
            raise PropertyViolation(f"exclusion of {name} failed: {e}", check="classification")
    return out


@dataclass
class ClassificationTable:
    rows: List[ClassificationRow]
    exclusions: List[Dict]
    rejections: List[Dict]

    def to_record(self) -> Dict:
        return {"rows": [r.to_record() for r in self.rows], "exclusions": self.exclusions,
                "rejections": self.rejections}


def classification_table() -> ClassificationTable:
    rows = [minimal_n(printed) for _, _, printed in CLASSIFICATION]
    return ClassificationTable(rows, exclusions(), prime_rejections())


def classify_prime(p: int) -> Dict:
    """Rows for one prime; orders above 11 are rejected by coinvariant rank."""
    if p < 2 or any(p % d == 0 for d in range(2, p)):
        raise InputError(f"{p} is not prime")
    rows = [minimal_n(printed).to_record() for q, _, printed in CLASSIFICATION if q == p]
    rejections = [r for r in prime_rejections() if r["p"] == p] if p >= 13 else []
    if p >= 13 and not rejections:
        rejections = [{"p": p, "rejected": True, "reason": "coinvariant rank at least 22 for p ≥ 13"}]
    return {"p": p, "rows": rows, "rejections": rejections}
