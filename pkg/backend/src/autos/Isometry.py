"""
Isometries of lattices in the column convention.

``P`` acts on coordinate columns: ``Pᵀ·G·P = G``. A row vector ``x`` is sent
to ``x·Pᵀ``.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from core.Errors import InputError, NonIntegralError
from discform.FiniteQuadraticForm import discriminant_form
from discform.GlueMap import Overlattice
from lattice.Lattice import Lattice, LatticeVector
from linalg.MatrixTools import identity, inverse, mat_mul, transpose
from linalg.NormalForms import is_unimodular

logger = logging.getLogger(__name__)


def is_isometry(L: Lattice, P: Sequence[Sequence[int]]) -> bool:
    n = L.rank
    if len(P) != n or any(len(row) != n for row in P):
        return False
    if any(isinstance(x, Fraction) and x.denominator != 1 for row in P for x in row):
        return False
    P = [[int(x) for x in row] for row in P]
    return mat_mul(mat_mul(transpose(P), L.gram), P) == L.gram and (n == 0 or is_unimodular(P))


class Isometry:
    def __init__(self, lattice: Lattice, matrix: Sequence[Sequence[int]], name: str = "g", check: bool = True):
        self.lattice = lattice
        self.matrix = [[int(x) for x in row] for row in matrix]
        self.name = name
        if check and not is_isometry(lattice, self.matrix):
            raise InputError(f"{name} is not an isometry of {lattice.name}")
        self._key = tuple(tuple(row) for row in self.matrix)

    @classmethod
    def identity(cls, L: Lattice) -> "Isometry":
        return cls(L, identity(L.rank), "id", check=False)

    @property
    def key(self) -> Tuple[Tuple[int, ...], ...]:
        return self._key

    @property
    def is_identity(self) -> bool:
        return self.matrix == identity(self.lattice.rank)

    def apply(self, x: Sequence) -> list:
        """Image of a row vector in lattice coordinates."""
        n = self.lattice.rank
        return [sum(self.matrix[i][j] * x[j] for j in range(n) if x[j]) for i in range(n)]

    def __call__(self, v):
        if isinstance(v, LatticeVector):
            return LatticeVector(self.lattice, self.apply(v.coords))
        return self.apply(v)

    def __mul__(self, other: "Isometry") -> "Isometry":
        """``(g*h)(x) = g(h(x))``."""
        return Isometry(self.lattice, mat_mul(self.matrix, other.matrix), f"{self.name}{other.name}", check=False)

    def inverse(self) -> "Isometry":
        return Isometry(self.lattice, inverse(self.matrix), f"{self.name}^-1", check=False)

    def order(self, cap: int = 10 ** 4) -> int:
        power, k = self, 1
        while not power.is_identity:
            power, k = power * self, k + 1
            if k > cap:
                raise InputError(f"{self.name} has order larger than {cap}")
        return k

    def to_record(self) -> Dict:
        return {"lattice": self.lattice.name, "matrix": self.matrix}

    @staticmethod
    def from_record(record: Dict, lattice: Lattice) -> "Isometry":
        if not isinstance(record, dict) or "matrix" not in record:
            raise InputError("isometry record needs a 'matrix' field")
        return Isometry(lattice, record["matrix"], record.get("name", "g"))

    def __eq__(self, other):
        return isinstance(other, Isometry) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"Isometry({self.name} on {self.lattice.name})"


def reflection(L: Lattice, v) -> Isometry:
    """``x ↦ x - 2(x,v)/q(v)·v``."""
    coords = list(v.coords if isinstance(v, LatticeVector) else v)
    qv = L.norm(coords)
    if qv == 0:
        raise InputError("cannot reflect along an isotropic vector")
    Gv = [sum(L.gram[i][j] * coords[j] for j in range(L.rank)) for i in range(L.rank)]
    P = [[Fraction(int(k == i)) - Fraction(2 * Gv[i], qv) * coords[k] for i in range(L.rank)] for k in range(L.rank)]
    if any(x.denominator != 1 for row in P for x in row):
        raise NonIntegralError(f"reflection along a vector of square {qv} is not integral on {L.name}")
    return Isometry(L, [[int(x) for x in row] for row in P], f"R{coords}")


@dataclass
class DiscriminantAction:
    """Images of the discriminant generators under one isometry."""
    factors: List[int]
    images: List[Tuple[int, ...]] = field(default_factory=list)

    @property
    def is_trivial(self) -> bool:
        return all(img == tuple(int(i == j) for j in range(len(self.factors))) for i, img in enumerate(self.images))

    def to_record(self) -> Dict:
        return {"factors": self.factors, "images": [list(x) for x in self.images], "trivial": self.is_trivial}


def discriminant_action(g: Isometry) -> DiscriminantAction:
    q = discriminant_form(g.lattice)
    images = [q.class_of(g.apply(y)) for y in q.generators]
    return DiscriminantAction(list(q.factors), images)


def extend_by_identity(g: Isometry, glued: Overlattice, name: Optional[str] = None) -> Isometry:
    """
    ``g ⊕ Id`` on the overlattice of ``S ⊕ T``; ``g`` acts on ``S`` and must
    act trivially on ``A_S``.
    """
    s = glued.left.rank
    if g.lattice.gram != glued.left.gram:
        raise InputError(f"{g.name} does not act on the left summand {glued.left.name}")
    if not discriminant_action(g).is_trivial:
        raise InputError("cannot extend by the identity: the isometry must act trivially on the discriminant group")
    t = glued.right.rank
    H = [[Fraction(0)] * (s + t) for _ in range(s + t)]
    for i in range(s):
        for j in range(s):
            H[i][j] = Fraction(g.matrix[i][j])
    for i in range(t):
        H[s + i][s + i] = Fraction(1)
    B = glued.basis
    rows = mat_mul(mat_mul(B, transpose(H)), inverse(B))
    if any(Fraction(x).denominator != 1 for row in rows for x in row):
        raise NonIntegralError(f"{g.name} ⊕ Id is not integral on {glued.lattice.name}")
    matrix = transpose([[int(x) for x in row] for row in rows])
    logger.debug("Extended %s to %s", g.name, glued.lattice.name)
    return Isometry(glued.lattice, matrix, name or f"{g.name}⊕Id")
