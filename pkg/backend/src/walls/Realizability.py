import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Dict, Iterator, List, Optional, Sequence

from autos.IsometryGroup import IsometryGroup, LeechPairReport, leech_pair_check
from core.Errors import BoundExceededError, GlueError, InputError, PropertyViolation
from core.Verdict import Applicability, Realizability, Verdict
from discform.FiniteQuadraticForm import discriminant_form, subgroup_elements
from discform.GlueMap import glue_overlattice, iter_anti_isometries
from discform.Nikulin import nikulin_embedding_exists
from enumeration.ShortVectors import short_vectors
from lattice.Lattice import Lattice, LatticeVector
from linalg.MatrixTools import inverse
from utils.GlobalVarGetter import GlobalVarGetter
from walls.WallContext import WallContext
from walls.WallDivisor import WallReport, numerical_wall_in

logger = logging.getLogger(__name__)


# -- lattice-theoretic conditions ----------------------------------------------


@dataclass
class ConwayReport:
    coinvariant_rank: int
    invariant_rank: int
    invariant_length: int

    @property
    def holds(self) -> bool:
        return self.coinvariant_rank <= 20 and self.invariant_rank > self.invariant_length

    def to_record(self) -> Dict:
        return {"coinvariant_rank": self.coinvariant_rank, "invariant_rank": self.invariant_rank,
                "invariant_length": self.invariant_length, "holds": self.holds}


def conway_condition(G: IsometryGroup) -> ConwayReport:
    """``rk S_G(Λ) ≤ 20`` and ``rk T_G(Λ) > l(A_{T_G(Λ)})``."""
    T = G.invariant_lattice()
    length = discriminant_form(Lattice(T.gram, T.name)).length if T.rank else 0
    return ConwayReport(G.lattice.rank - T.rank, T.rank, length)


def conway_from_coinvariant(S: Lattice) -> ConwayReport:
    """The same condition read off ``S`` alone: ``A_T ≅ A_S`` inside the unimodular Leech lattice."""
    return ConwayReport(S.rank, 24 - S.rank, discriminant_form(S).length)


@dataclass
class HuybrechtsReport:
    leech_embedding: bool
    mukai_embedding: bool
    signature_1_20: bool
    rank_three_positive: bool

    def to_record(self) -> Dict:
        return {"leech_embedding": self.leech_embedding, "mukai_embedding": self.mukai_embedding,
                "signature_1_20": self.signature_1_20, "rank_three_positive": self.rank_three_positive}


def huybrechts_equivalents(M: Lattice) -> HuybrechtsReport:
    """
    The four equivalent conditions on a negative definite ``M`` of rank ≤ 20.

    The first two are computed; the last two are equivalent to the second
    without further lattice data.
    """
    if not M.is_negative_definite or M.rank > 20:
        raise InputError(f"{M.name} must be negative definite of rank at most 20")
    length = discriminant_form(M).length
    room = 24 - M.rank > length
    into_leech = nikulin_embedding_exists(M, (0, 24)).verdict == Verdict.YES and room
    into_mukai = nikulin_embedding_exists(M, (4, 20)).verdict == Verdict.YES and room
    if into_leech != into_mukai:
        raise PropertyViolation(f"embedding conditions disagree for {M.name}", check="huybrechts")
    return HuybrechtsReport(into_leech, into_mukai, into_mukai, into_mukai)


# -- discriminant generators and the obstruction ----------------------------------


@dataclass
class DiscriminantGenerator:
    vector: List[int]
    divisibility: int
    square: int

    def to_record(self) -> Dict:
        return {"t": self.vector, "div": self.divisibility, "square": self.square}


def discriminant_generators(M: Lattice, bound: int) -> List[DiscriminantGenerator]:
    """
    Primitive ``t ∈ M`` with ``|t²| ≤ bound`` whose classes ``[t/div(t)]``
    generate ``A_M``, shortest first.

    Candidates come from short vectors of the dual lattice, scaled up to ``M``.
    """
    q = discriminant_form(M)
    if q.is_trivial():
        return []
    exponent = max(q.factors)
    smallest_prime = min(q.primes)
    inv = inverse(M.gram)
    dual = Lattice([[int(exponent * x) for x in row] for row in inv], f"{M.name}^∨({exponent})")
    chosen: List[DiscriminantGenerator] = []
    H = subgroup_elements(q, [])
    previous = None
    for level in range(2, bound + 1, 2):
        dual_bound = floor(Fraction(exponent * level, smallest_prime ** 2))
        if dual_bound == previous or dual_bound == 0:
            continue
        previous = dual_bound
        candidates = []
        for y in short_vectors(dual, dual_bound, up_to_sign=True):
            y_m = [sum(c * inv[i][j] for i, c in enumerate(y.coords)) for j in range(M.rank)]
            k = q.element_order(q.class_of(y_m))
            if k == 1:
                continue
            t = [int(k * x) for x in y_m]
            if not Lattice.is_primitive_vector(t) or abs(M.norm(t)) > level:
                continue
            candidates.append((abs(M.norm(t)), t))
        for square, t in sorted(candidates):
            div = M.divisibility(t)
            cls = q.class_of([Fraction(x, div) for x in t])
            if cls in H:
                continue
            chosen.append(DiscriminantGenerator(t, div, -square if M.is_negative_definite else square))
            H = subgroup_elements(q, [q.class_of([Fraction(x, g.divisibility) for x in g.vector]) for g in chosen])
            if len(H) == q.order:
                logger.info("A_%s generated by %d vectors of square at most %d", M.name, len(chosen), level)
                return chosen
    logger.info("A_%s not generated by vectors of square at most %d", M.name, bound)
    return chosen


@dataclass
class ObstructionReport:
    applicability: Applicability
    n: int
    generators: List[DiscriminantGenerator] = field(default_factory=list)
    reason: str = ""

    def to_record(self) -> Dict:
        return {"applicability": self.applicability, "n": self.n, "reason": self.reason,
                "generators": [g.to_record() for g in self.generators]}


def wall_in_s_obstruction(M: Lattice, n: int, generators: Optional[Sequence[Sequence[int]]] = None) -> ObstructionReport:
    """
    ``M`` contains a wall divisor for ``n`` when ``rk M + l(A_M) = 24`` and
    ``A_M`` is generated by ``[t_i/div(t_i)]`` with ``|t_i²| ≤ div(t_i)²(n+3)/2``.
    """
    q = discriminant_form(M)
    if M.rank + q.length != 24:
        return ObstructionReport(Applicability.INAPPLICABLE, n,
                                 reason=f"rank {M.rank} + length {q.length} is not 24")
    if generators is None:
        exponent = max(q.factors)
        found = discriminant_generators(M, floor(Fraction(exponent ** 2 * (n + 3), 2)))
    else:
        found = [DiscriminantGenerator(list(t), M.divisibility(t), M.norm(t)) for t in generators]
    for g in found:
        if not Lattice.is_primitive_vector(g.vector):
            raise InputError(f"{g.vector} is not primitive")
        if 2 * abs(g.square) > g.divisibility ** 2 * (n + 3):
            return ObstructionReport(Applicability.FAILS, n, found,
                                     f"|t²| = {abs(g.square)} exceeds div²(n+3)/2 for div {g.divisibility}")
    classes = [q.class_of([Fraction(x, g.divisibility) for x in g.vector]) for g in found]
    if len(subgroup_elements(q, classes)) != q.order:
        return ObstructionReport(Applicability.FAILS, n, found, "the classes do not generate A_M")
    return ObstructionReport(Applicability.APPLIES, n, found, "every generator satisfies the norm bound")


# -- realizability -------------------------------------------------------------


def _isotropic_pair_candidates(T: Lattice, m: int) -> Iterator[List[int]]:
    G, n = T.gram, T.rank
    for i in range(n):
        for j in range(i + 1, n):
            k = G[i][j]
            if G[i][i] or G[j][j] or k == 0:
                continue
            for extra in [None] + [l for l in range(n) if l not in (i, j) and G[l][i] == G[l][j] == 0]:
                rest = m - (G[extra][extra] if extra is not None else 0)
                if rest % (2 * k):
                    continue
                x = [0] * n
                x[i], x[j] = 1, rest // (2 * k)
                if extra is not None:
                    x[extra] = 1
                yield x


def iter_representing_vectors(T: Lattice, m: int, box: int = 2) -> Iterator[LatticeVector]:
    """
    Distinct primitive vectors of square ``m``, one per sign pair.

    Definite lattices are searched exhaustively. Indefinite ones first try
    ``e_i + c·e_j`` and ``e_i + c·e_j + e_l`` over isotropic basis pairs
    ``(e_i, e_j)``, then a bounded box.
    """
    seen = set()

    def fresh(coords):
        key = tuple(coords)
        if key in seen or tuple(-x for x in key) in seen:
            return False
        seen.add(key)
        return True

    if T.is_positive_definite or T.is_negative_definite:
        if m == 0 or (m > 0) != T.is_positive_definite:
            return
        for v in short_vectors(T, abs(m), up_to_sign=True):
            if v.norm == m and v.is_primitive and fresh(v.coords):
                yield v
        return
    for x in _isotropic_pair_candidates(T, m):
        if T.norm(x) == m and Lattice.is_primitive_vector(x) and fresh(x):
            yield LatticeVector(T, x)
    for coords in itertools.product(range(-box, box + 1), repeat=T.rank):
        if T.norm(coords) == m and Lattice.is_primitive_vector(coords) and fresh(coords):
            yield LatticeVector(T, coords)


def find_representing_vector(T: Lattice, m: int, box: int = 2) -> Optional[LatticeVector]:
    """A primitive vector of square ``m``, or ``None``."""
    return next(iter_representing_vectors(T, m, box), None)


@dataclass
class Embedding:
    complement: str
    v: List[int]
    glue_index: int

    def to_record(self) -> Dict:
        return {"complement": self.complement, "v": self.v, "glue_index": self.glue_index}


@dataclass
class RealizabilityReport:
    verdict: Realizability
    n: int
    witness: Optional[WallReport] = None
    embedding: Optional[Embedding] = None
    leech_pair: Optional[LeechPairReport] = None
    embeddings_tried: int = 0
    reason: str = ""

    def to_record(self) -> Dict:
        return {"verdict": self.verdict, "n": self.n, "reason": self.reason,
                "embeddings_tried": self.embeddings_tried,
                "witness": self.witness.to_record() if self.witness else None,
                "embedding": self.embedding.to_record() if self.embedding else None,
                "leech_pair": self.leech_pair.to_record() if self.leech_pair else None}


def _k3_realizability(S: Lattice) -> RealizabilityReport:
    embedding = nikulin_embedding_exists(S, (3, 19))
    if embedding.verdict != Verdict.YES:
        return RealizabilityReport(Realizability.INCONCLUSIVE, 1, reason=f"no embedding into L_1: {embedding.reason}")
    for vec in short_vectors(S, 2, up_to_sign=True):
        if vec.norm == -2:
            return RealizabilityReport(Realizability.OBSTRUCTED, 1, WallReport(list(vec.coords), -2, [[-2]],
                                                                               clause="root"),
                                       reason="S contains a vector of square -2")
    return RealizabilityReport(Realizability.REALIZABLE, 1, reason="root-free and embeds into the K3 lattice")


def realizability(S: Lattice, n: int, complements: Sequence[Lattice] = (), G: Optional[IsometryGroup] = None,
                  glue_choices: Optional[int] = None) -> RealizabilityReport:
    """
    Whether ``S`` is the coinvariant lattice of a realizable group on ``L_n``.

    Embeddings come from gluing ``S`` to each complement ``T`` along every
    anti-isometry ``A_S → A_T``, paired with every primitive ``v ∈ T`` of
    square ``2n-2`` taken up to sign. Both the anti-isometries and the
    vectors are bounded by ``glue_choices`` per complement. REALIZABLE as
    soon as one embedding has no numerical wall divisor; OBSTRUCTED when
    every embedding tried has one.

    Arguments run ``S, n, complements, G``: the group is optional and comes
    last. When given, the Leech pair check is attached to the report.
    """
    if not S.is_negative_definite:
        return RealizabilityReport(Realizability.NOT_DEFINITE, n, reason=f"{S.name} has signature {S.signature}")
    leech_pair = None
    if G is not None:
        if G.invariant_lattice().rank:
            raise InputError(f"the group does not have {S.name} as coinvariant lattice")
        leech_pair = leech_pair_check(S, G)
    if n == 1:
        report = _k3_realizability(S)
        report.leech_pair = leech_pair
        return report
    qS = discriminant_form(S)
    witness, tried = None, 0
    if glue_choices is None:
        glue_choices = GlobalVarGetter.option("glue_choices")
    for T in complements:
        vectors = list(itertools.islice(iter_representing_vectors(T, 2 * n - 2), glue_choices))
        if not vectors:
            logger.info("%s does not represent %d primitively", T.name, 2 * n - 2)
            continue
        try:
            glues = iter_anti_isometries(qS, discriminant_form(T), limit=glue_choices)
        except BoundExceededError as e:
            logger.warning("Anti-isometry search for %s and %s stopped: %s", S.name, T.name, e)
            continue
        for index, glue in enumerate(glues):
            try:
                glued = glue_overlattice(S, T, glue)
            except GlueError as e:
                logger.debug("Glue %d rejected: %s", index, e)
                continue
            if abs(glued.lattice.determinant) != 1:
                continue
            for v in vectors:
                tried += 1
                ctx = WallContext.from_overlattice(glued, list(v.coords), n)
                found = numerical_wall_in(glued.left, ctx)
                embedding = Embedding(T.name, list(v.coords), index)
                if found is None:
                    return RealizabilityReport(Realizability.REALIZABLE, n, None, embedding, leech_pair, tried,
                                               f"no numerical wall divisor in {S.name} ⊂ L_{n}")
                witness = witness or (found, embedding)
    if witness is None:
        return RealizabilityReport(Realizability.INCONCLUSIVE, n, leech_pair=leech_pair, embeddings_tried=tried,
                                   reason="no primitive embedding into L_n was constructed")
    return RealizabilityReport(Realizability.OBSTRUCTED, n, witness[0], witness[1], leech_pair, tried,
                               "every embedding tried contains a numerical wall divisor")
