"""Isometries between finite quadratic forms and overlattice gluing."""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from core.Errors import BoundExceededError, GlueError, InputError
from core.Verdict import Verdict
from discform.FiniteQuadraticForm import (DiscriminantForm, Element, FiniteQuadraticForm, discriminant_form,
                                          group_structure, mod1, mod2)
from discform.GaussSum import milgram_signature
from lattice.Lattice import Lattice
from linalg.MatrixTools import inverse, lcm_denominator
from linalg.NormalForms import span_basis
from utils.GlobalVarGetter import GlobalVarGetter

logger = logging.getLogger(__name__)


def span_elements(gens: Sequence[Sequence[int]], moduli: Sequence[int]) -> set:
    """All elements of the subgroup of ``⊕ Z/m_i`` generated by ``gens``."""
    zero = tuple(0 for _ in moduli)
    H = {zero}
    for g in gens:
        g = tuple(int(x) % m for x, m in zip(g, moduli))
        multiple = g
        new = set(H)
        while multiple not in H:
            new.update(tuple((a + b) % m for a, b, m in zip(h, multiple, moduli)) for h in H)
            multiple = tuple((a + b) % m for a, b, m in zip(multiple, g, moduli))
        H = new
    return H


@dataclass
class GlueMap:
    """
    An anti-isometry ``γ: H_S → H_T`` between subgroups of two discriminant forms.

    ``domain`` generates ``H_S`` and ``images[i] = γ(domain[i])``.
    """
    source: FiniteQuadraticForm
    target: FiniteQuadraticForm
    domain: List[Element]
    images: List[Element]

    def __post_init__(self):
        self.domain = [self.source.normalize(x) for x in self.domain]
        self.images = [self.target.normalize(y) for y in self.images]
        if len(self.domain) != len(self.images):
            raise InputError("glue map needs one image per domain generator")

    @property
    def matrix(self) -> List[List[int]]:
        return [list(y) for y in self.images]

    @property
    def subgroup_order(self) -> int:
        return len(span_elements(self.domain, self.source.factors))

    def validate(self):
        """Raise ``GlueError`` naming the first element where ``γ`` is not an anti-isometry."""
        S, T = self.source, self.target
        for x, y in zip(self.domain, self.images):
            if S.element_order(x) != T.element_order(y):
                raise GlueError(f"γ({list(x)}) = {list(y)} changes the order", element=x)
            if mod2(S.value(x) + T.value(y)) != 0:
                raise GlueError(f"q_T(γ{list(x)}) = {T.value(y)} is not -q_S = {-S.value(x)} mod 2", element=x)
        for i, (x1, y1) in enumerate(zip(self.domain, self.images)):
            for x2, y2 in zip(self.domain[i + 1:], self.images[i + 1:]):
                if mod1(S.bilinear(x1, x2) + T.bilinear(y1, y2)) != 0:
                    raise GlueError(f"γ does not negate b on {list(x1)}, {list(x2)}", element=x1)
        graph = span_elements([tuple(x) + tuple(y) for x, y in zip(self.domain, self.images)],
                              S.factors + T.factors)
        image = span_elements(self.images, T.factors)
        order = self.subgroup_order
        if len(graph) != order or len(image) != order:
            raise GlueError("γ is not a well defined group isomorphism onto its image")

    def is_full(self) -> bool:
        return self.subgroup_order == self.source.order == self.target.order

    def to_record(self) -> Dict:
        return {"domain": [list(x) for x in self.domain], "images": self.matrix,
                "source": self.source.to_record(), "target": self.target.to_record()}


# -- isometry search ----------------------------------------------------------


def _primary_generators(q: FiniteQuadraticForm) -> List[Tuple[int, int, Element]]:
    """(snf index, p-power order, element) of a basis adapted to the p-primary splitting."""
    out = []
    for p in q.primes:
        part = q.primary_part(p)
        for element, order in zip(part.embedding, part.factors):
            index = next(i for i, x in enumerate(element) if x)
            out.append((index, order, element))
    out.sort(key=lambda t: -t[1])
    return out


def _snf_images(q1: FiniteQuadraticForm, q2: FiniteQuadraticForm, gens, images) -> List[Element]:
    """Images of the invariant-factor generators of ``q1`` from images of the p-primary basis."""
    out = []
    for i, d in enumerate(q1.factors):
        y = tuple(0 for _ in q2.factors)
        for (index, order, element), image in zip(gens, images):
            if index != i:
                continue
            u = pow(d // order, -1, order)
            y = q2.add(y, q2.scale(u, image))
        out.append(y)
    return out


def iter_isometries(q1: FiniteQuadraticForm, q2: FiniteQuadraticForm, sign: int = 1,
                    cap: Optional[int] = None) -> Iterator[List[Element]]:
    """
    Yield images of the generators of ``q1`` under isomorphisms ``φ: A1 → A2``
    with ``q2(φx) = sign·q1(x)``.

    The search assigns images to a p-primary basis, largest order first,
    pruning by order, value, pairings with earlier images and independence.
    ``cap`` bounds the number of search nodes; ``BoundExceededError`` is
    raised when it is reached.
    """
    if group_structure(q1) != group_structure(q2):
        return
    if cap is None:
        cap = 100 * GlobalVarGetter.option("group_cap")
    gens = _primary_generators(q1)
    buckets: Dict[Tuple[int, Fraction], List[Element]] = {}
    for y in q2.elements():
        key = (q2.element_order(y), q2.value(y))
        buckets.setdefault(key, []).append(y)
    targets = [(order, mod2(sign * q1.value(x))) for _, order, x in gens]
    pairings = [[mod1(sign * q1.bilinear(gens[i][2], gens[j][2])) for j in range(i)] for i in range(len(gens))]
    zero = tuple(0 for _ in q2.factors)
    nodes = [0]

    def search(level: int, chosen: List[Element], H: set):
        if level == len(gens):
            yield list(chosen)
            return
        order, value = targets[level]
        p_power = order
        p = min(f for f in range(2, order + 1) if order % f == 0)
        for y in buckets.get((order, value), []):
            nodes[0] += 1
            if nodes[0] > cap:
                raise BoundExceededError(f"isometry search exceeded {cap} nodes", size=nodes[0], bound=cap)
            if any(q2.bilinear(y, chosen[j]) != pairings[level][j] for j in range(level)):
                continue
            if q2.scale(p_power // p, y) in H:
                continue
            new_H = set(H)
            multiple = y
            while multiple != zero:
                new_H.update(q2.add(h, multiple) for h in H)
                multiple = q2.add(multiple, y)
            chosen.append(y)
            yield from search(level + 1, chosen, new_H)
            chosen.pop()

    for images in search(0, [], {zero}):
        yield _snf_images(q1, q2, gens, images)


def find_isometry(q1: FiniteQuadraticForm, q2: FiniteQuadraticForm,
                  cap: Optional[int] = None) -> Optional[List[Element]]:
    return next(iter_isometries(q1, q2, 1, cap), None)


def find_anti_isometry(qS: FiniteQuadraticForm, qT: FiniteQuadraticForm,
                       cap: Optional[int] = None) -> Optional[GlueMap]:
    """A full anti-isometry ``A_S → A_T`` or ``None`` when none exists."""
    images = next(iter_isometries(qS, qT, -1, cap), None)
    if images is None:
        return None
    return GlueMap(qS, qT, [tuple(1 if j == i else 0 for j in range(len(qS.factors)))
                            for i in range(len(qS.factors))], images)


def iter_anti_isometries(qS: FiniteQuadraticForm, qT: FiniteQuadraticForm, limit: Optional[int] = None,
                         cap: Optional[int] = None) -> List[GlueMap]:
    if limit is None:
        limit = GlobalVarGetter.option("glue_choices")
    domain = [tuple(1 if j == i else 0 for j in range(len(qS.factors))) for i in range(len(qS.factors))]
    out = []
    for images in iter_isometries(qS, qT, -1, cap):
        out.append(GlueMap(qS, qT, domain, images))
        if len(out) >= limit:
            break
    return out


def forms_isomorphic(q1: FiniteQuadraticForm, q2: FiniteQuadraticForm, bound: Optional[int] = None) -> Verdict:
    """YES/NO when decided, INCONCLUSIVE when ``|A|`` exceeds ``bound`` or the search cap."""
    if bound is None:
        bound = GlobalVarGetter.option("iso_bound")
    if group_structure(q1) != group_structure(q2):
        return Verdict.NO
    if q1.order > GlobalVarGetter.option("milgram_bound"):
        return Verdict.INCONCLUSIVE
    if q1.value_multiset() != q2.value_multiset():
        return Verdict.NO
    if milgram_signature(q1, decompose=True) != milgram_signature(q2, decompose=True):
        return Verdict.NO
    if q1.order > bound:
        logger.info("|A| = %d exceeds the isomorphism bound %d", q1.order, bound)
        return Verdict.INCONCLUSIVE
    try:
        found = find_isometry(q1, q2)
    except BoundExceededError as e:
        logger.info("Isometry search stopped: %s", e)
        return Verdict.INCONCLUSIVE
    return Verdict.YES if found is not None else Verdict.NO


# -- gluing -------------------------------------------------------------------


@dataclass
class Overlattice:
    """An overlattice of ``S ⊕ T`` together with the two summands inside it."""
    lattice: Lattice
    left: Lattice
    right: Lattice
    basis: List[List[Fraction]] = field(repr=False)
    index: int = 1

    def to_record(self) -> Dict:
        return {"lattice": self.lattice.to_record(), "index": self.index,
                "left": [list(r) for r in self.left.coords], "right": [list(r) for r in self.right.coords]}


def _form_of(L: Lattice, q: FiniteQuadraticForm) -> DiscriminantForm:
    if isinstance(q, DiscriminantForm) and q.lattice.gram == L.gram:
        return q
    return discriminant_form(L)


def glue_overlattice(S: Lattice, T: Lattice, glue: GlueMap, name: Optional[str] = None) -> Overlattice:
    """
    The overlattice of ``S ⊕ T`` generated by the lifts ``(x, γx)`` of the graph of ``glue``.
    """
    glue.validate()
    dS, dT = _form_of(S, glue.source), _form_of(T, glue.target)
    s, t = S.rank, T.rank
    rows = [[Fraction(int(i == j)) for j in range(s + t)] for i in range(s + t)]
    for x, y in zip(glue.domain, glue.images):
        rows.append(dS.lift(x) + dT.lift(y))
    D = lcm_denominator(rows)
    basis_int = span_basis([[int(v * D) for v in row] for row in rows], s + t)
    basis = [[Fraction(v, D) for v in row] for row in basis_int]
    GS, GT = S.gram, T.gram

    def pair(a, b):
        left = sum(a[i] * GS[i][j] * b[j] for i in range(s) if a[i] for j in range(s))
        right = sum(a[s + i] * GT[i][j] * b[s + j] for i in range(t) if a[s + i] for j in range(t))
        return left + right

    gram = [[pair(a, b) for b in basis] for a in basis]
    for i, row in enumerate(gram):
        if any(v.denominator != 1 for v in row):
            raise GlueError("glued lattice is not integral", element=glue.domain[0] if glue.domain else None)
        if row[i].numerator % 2:
            raise GlueError("glued lattice is odd", element=glue.domain[0] if glue.domain else None)
    lattice = Lattice([[int(v) for v in row] for row in gram], name or f"({S.name}⊕{T.name})+")
    back = inverse(basis)
    coords = [[int(v) for v in row] for row in back]
    left = lattice.sublattice(coords[:s], S.name)
    right = lattice.sublattice(coords[s:], T.name)
    index = glue.subgroup_order
    logger.info("Glued %s and %s along a subgroup of order %d: det %d", S.name, T.name, index, lattice.determinant)
    return Overlattice(lattice, left, right, basis, index)
