"""Existence, embedding and uniqueness criteria for even lattices with a given discriminant form."""
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from core.Errors import InputError, OddLatticeError
from core.Verdict import Verdict
from discform.FiniteQuadraticForm import FiniteQuadraticForm, discriminant_form
from discform.GaussSum import milgram_signature

logger = logging.getLogger(__name__)


@dataclass
class ExistenceVerdict:
    verdict: Verdict
    reason: str = ""

    def to_record(self) -> Dict:
        return {"verdict": self.verdict, "reason": self.reason}


@dataclass
class EmbeddingVerdict:
    """Outcome of the primitive-embedding test, with the invariants a complement must have."""
    verdict: Verdict
    complement_signature: Optional[Tuple[int, int]] = None
    complement_form: Optional[FiniteQuadraticForm] = None
    reason: str = ""

    def to_record(self) -> Dict:
        record = {"verdict": self.verdict, "reason": self.reason}
        if self.complement_signature is not None:
            record["complement_signature"] = list(self.complement_signature)
        if self.complement_form is not None:
            record["complement_form"] = self.complement_form.to_record()
            record["complement_length"] = self.complement_form.length
        return record


@dataclass
class TwoModularInvariants:
    rank: int
    signature: Tuple[int, int]
    length: int
    delta: int

    def to_record(self) -> Dict:
        return {"rank": self.rank, "signature": list(self.signature), "length": self.length, "delta": self.delta}


def nikulin_lattice_exists(sig: Tuple[int, int], q: FiniteQuadraticForm) -> ExistenceVerdict:
    """
    Whether an even lattice of signature ``sig`` with discriminant form ``q`` exists.

    NO when a signature is negative or ``t+ - t-`` disagrees with the Milgram
    signature mod 8; INCONCLUSIVE when the rank is below ``l(A)``; YES otherwise.
    """
    t_pos, t_neg = sig
    if t_pos < 0 or t_neg < 0:
        return ExistenceVerdict(Verdict.NO, f"negative signature {sig}")
    sigma = milgram_signature(q, decompose=True)
    if (t_pos - t_neg - sigma) % 8:
        return ExistenceVerdict(Verdict.NO, f"signature {t_pos - t_neg} is not the Milgram signature {sigma} mod 8")
    length = q.length
    if t_pos + t_neg < length:
        return ExistenceVerdict(Verdict.INCONCLUSIVE, f"rank {t_pos + t_neg} is below the length {length}")
    return ExistenceVerdict(Verdict.YES, f"rank {t_pos + t_neg} ≥ length {length}, Milgram signature {sigma}")


def nikulin_embedding_exists(S, target_sig: Tuple[int, int]) -> EmbeddingVerdict:
    """Primitive embedding of the even lattice ``S`` into an even unimodular lattice of ``target_sig``."""
    if not S.is_even:
        raise OddLatticeError(f"{S.name} is odd")
    l_pos, l_neg = target_sig
    s_pos, s_neg = S.signature
    complement_sig = (l_pos - s_pos, l_neg - s_neg)
    if complement_sig[0] < 0 or complement_sig[1] < 0:
        return EmbeddingVerdict(Verdict.NO, complement_sig,
                                reason=f"rank obstruction: {S.name} has signature {S.signature}, "
                                       f"target {target_sig}")
    if (l_pos - l_neg) % 8:
        return EmbeddingVerdict(Verdict.NO, complement_sig,
                                reason=f"no even unimodular lattice has signature {target_sig}")
    complement_form = discriminant_form(S).negate()
    existence = nikulin_lattice_exists(complement_sig, complement_form)
    logger.debug("Embedding %s into %s: %s", S.name, target_sig, existence.verdict)
    return EmbeddingVerdict(existence.verdict, complement_sig, complement_form, existence.reason)


def nikulin_unique(sig: Tuple[int, int], q: FiniteQuadraticForm) -> Verdict:
    """UNIQUE for indefinite signatures with ``rank ≥ 2 + l(A)``, INCONCLUSIVE otherwise."""
    t_pos, t_neg = sig
    if t_pos > 0 and t_neg > 0 and t_pos + t_neg >= 2 + q.length:
        return Verdict.UNIQUE
    return Verdict.INCONCLUSIVE


def two_modular_invariants(L) -> TwoModularInvariants:
    """Rank, signature, length and ``Δ`` of a 2-elementary even lattice."""
    q = discriminant_form(L)
    if any(d != 2 for d in q.factors):
        raise InputError(f"the discriminant group of {L.name} is not 2-elementary: factors {q.factors}")
    # q is integral on all of A as soon as it is on the generators
    delta = 0 if all(q.q[i][i].denominator == 1 for i in range(len(q.factors))) else 1
    return TwoModularInvariants(L.rank, L.signature, len(q.factors), delta)
