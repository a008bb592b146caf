"""Integral lattices given by a Gram matrix, optionally embedded in an ambient lattice."""
import logging
import re
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from core.Errors import DegenerateLatticeError, DependentVectorsError, InputError
from linalg.Congruence import diagonalize, is_definite
from linalg.MatrixTools import determinant, gram_of, identity, inverse, mat_mul, rank, transpose, vec_mat
from linalg.NormalForms import hnf, hnf_rank, kernel_basis, solve_in_span, span_basis

logger = logging.getLogger(__name__)

_SCALED_NAME = re.compile(r"^(?P<base>.*?)\((?P<scale>-?\d+)\)$")


def scaled_name(name: str, k: int) -> str:
    """``E8`` scaled by -2 is ``E8(-2)``; ``E8(-1)`` scaled by 2 is ``E8(-2)``."""
    if "⊕" in name or "^" in name:
        return f"[{name}]({k})"
    match = _SCALED_NAME.match(name)
    if match and match.group("base"):
        base, old = match.group("base"), int(match.group("scale"))
    else:
        base, old = name, 1
    new = old * k
    return base if new == 1 else f"{base}({new})"


def _as_int_matrix(M, what="Gram matrix") -> Tuple[Tuple[int, ...], ...]:
    try:
        rows = []
        for row in M:
            new_row = []
            for x in row:
                if isinstance(x, Fraction):
                    if x.denominator != 1:
                        raise InputError(f"{what} has non-integral entry {x}")
                    x = x.numerator
                elif isinstance(x, float) or isinstance(x, bool):
                    raise InputError(f"{what} must hold integers, got {x!r}")
                new_row.append(int(x))
            rows.append(tuple(new_row))
    except (TypeError, ValueError) as e:
        raise InputError(f"{what} is not a matrix: {e}")
    return tuple(rows)


class Lattice:
    """
    A free Z-module with an integral symmetric bilinear form.

    ``coords`` (rows) express the basis in the basis of ``ambient``; when an
    ambient lattice is given the Gram matrix must equal ``C·G_ambient·Cᵀ``.
    Instances are immutable.
    """

    def __init__(self, gram, name: str = "L", ambient: Optional["Lattice"] = None, coords=None,
                 degenerate: bool = False):
        G = _as_int_matrix(gram)
        n = len(G)
        if any(len(row) != n for row in G):
            raise InputError(f"Gram matrix of {name} is not square")
        if any(G[i][j] != G[j][i] for i in range(n) for j in range(i)):
            raise InputError(f"Gram matrix of {name} is not symmetric")
        self._gram = G
        self.name = name
        self.ambient = ambient
        self.coords = _as_int_matrix(coords, "coordinate matrix") if coords is not None else None
        if (ambient is None) != (self.coords is None):
            raise InputError("ambient and coords must be given together")
        if ambient is not None:
            if len(self.coords) != n or any(len(row) != ambient.rank for row in self.coords):
                raise InputError(f"coordinates of {name} do not fit the ambient lattice {ambient.name}")
            if tuple(tuple(r) for r in gram_of(self.coords, ambient.gram)) != G:
                raise InputError(f"Gram matrix of {name} is inconsistent with its ambient coordinates")
        self._det = None
        self._signature = None
        if not degenerate and self.determinant == 0:
            raise DegenerateLatticeError(f"lattice {name} is degenerate (determinant 0)")
        self.degenerate = self.determinant == 0

    # -- basic invariants -------------------------------------------------

    @property
    def gram(self) -> List[List[int]]:
        return [list(row) for row in self._gram]

    @property
    def rank(self) -> int:
        return len(self._gram)

    @property
    def determinant(self) -> int:
        if self._det is None:
            self._det = determinant(self.gram) if self.rank else 1
        return self._det

    @property
    def signature(self) -> Tuple[int, int]:
        if self._signature is None:
            d, _ = diagonalize(self.gram)
            self._signature = (sum(1 for x in d if x > 0), sum(1 for x in d if x < 0))
        return self._signature

    @property
    def is_even(self) -> bool:
        return all(self._gram[i][i] % 2 == 0 for i in range(self.rank))

    @property
    def definiteness(self) -> int:
        return is_definite(self.gram)

    @property
    def is_negative_definite(self) -> bool:
        return self.rank > 0 and self.signature == (0, self.rank)

    @property
    def is_positive_definite(self) -> bool:
        return self.rank > 0 and self.signature == (self.rank, 0)

    def pairing(self, x: Sequence[int], y: Sequence[int]):
        G = self._gram
        return sum(x[i] * sum(G[i][j] * y[j] for j in range(self.rank) if y[j]) for i in range(self.rank) if x[i])

    def norm(self, x: Sequence[int]):
        return self.pairing(x, x)

    def dual_gram(self) -> List[List[Fraction]]:
        return inverse(self.gram)

    # -- constructions ----------------------------------------------------

    def rescale(self, k: int, name: Optional[str] = None) -> "Lattice":
        if k == 0:
            raise InputError("cannot rescale by 0")
        return Lattice([[k * x for x in row] for row in self._gram], name or scaled_name(self.name, k))

    def direct_sum(self, other: "Lattice", name: Optional[str] = None) -> "Lattice":
        n, m = self.rank, other.rank
        G = [list(row) + [0] * m for row in self._gram] + [[0] * n + list(row) for row in other._gram]
        return Lattice(G, name or f"{self.name}⊕{other.name}", degenerate=self.degenerate or other.degenerate)

    def power(self, m: int, name: Optional[str] = None) -> "Lattice":
        n = self.rank
        G = [[0] * (n * m) for _ in range(n * m)]
        for b in range(m):
            for i in range(n):
                for j in range(n):
                    G[b * n + i][b * n + j] = self._gram[i][j]
        return Lattice(G, name or (self.name if m == 1 else f"{self.name}^{m}"), degenerate=self.degenerate)

    def sublattice(self, vectors: Sequence[Sequence[int]], name: Optional[str] = None,
                   degenerate: bool = True) -> "Lattice":
        """Sublattice with the given (independent) vectors as basis."""
        vectors = [list(v) for v in _as_int_matrix(vectors, "vector list")]
        if any(len(v) != self.rank for v in vectors):
            raise InputError(f"vectors must have length {self.rank}")
        if vectors and rank(vectors) < len(vectors):
            dependency = kernel_basis(vectors)[0]
            raise DependentVectorsError(
                f"vectors are linearly dependent: {dependency} is a relation", dependency=dependency)
        return Lattice(gram_of(vectors, self.gram) if vectors else [], name or f"sub({self.name})",
                       ambient=self, coords=vectors, degenerate=degenerate)

    def span(self, vectors: Sequence[Sequence[int]], name: Optional[str] = None) -> "Lattice":
        """Sublattice generated by a possibly dependent set, in HNF basis."""
        rows = [list(v) for v in _as_int_matrix(vectors, "vector list")]
        basis = span_basis(rows, self.rank)
        return self.sublattice(basis, name or f"span({self.name})")

    def _require_ambient(self):
        if self.ambient is None:
            raise InputError(f"{self.name} has no ambient lattice")

    def saturation(self, name: Optional[str] = None) -> "Lattice":
        """``(S ⊗ Q) ∩ L`` for the ambient lattice ``L``."""
        self._require_ambient()
        L = self.ambient
        if self.rank == 0:
            return L.sublattice([], name or f"sat({self.name})")
        N = kernel_basis(transpose(self.coords))
        if not N:
            basis = identity(L.rank)
        else:
            basis = kernel_basis(transpose(N))
        return L.sublattice(basis, name or f"sat({self.name})")

    def is_primitive(self) -> bool:
        self._require_ambient()
        return abs(self.index_in(self.saturation())) == 1

    def index_in(self, other: "Lattice") -> int:
        """Index ``[other : self]`` for two sublattices of the same rank in one ambient."""
        coords = [other.coordinates_of(row) for row in self.coords]
        if any(c is None for c in coords):
            raise InputError(f"{self.name} is not contained in {other.name}")
        return abs(determinant(coords)) if coords else 1

    def orthogonal_complement(self, name: Optional[str] = None) -> "Lattice":
        """``S^⊥`` inside the ambient lattice; degenerate when ``S`` is."""
        self._require_ambient()
        L = self.ambient
        if self.rank == 0:
            return L.sublattice(identity(L.rank), name or f"({self.name})^⊥")
        basis = kernel_basis(mat_mul(L.gram, transpose(self.coords)))
        return L.sublattice(basis, name or f"({self.name})^⊥")

    def complement_of(self, vectors: Sequence[Sequence[int]], name: Optional[str] = None) -> "Lattice":
        """Orthogonal complement in ``self`` of the given vectors."""
        if not vectors:
            return self.sublattice(identity(self.rank), name or self.name)
        basis = kernel_basis(mat_mul(self.gram, transpose([list(v) for v in vectors])))
        return self.sublattice(basis, name or f"({self.name})^⊥")

    def divisibility(self, v: Sequence[int]) -> int:
        """``div(v)``: the positive generator of ``(v, L)``."""
        if not any(v):
            raise InputError("divisibility of the zero vector is undefined")
        return reduce(gcd, (abs(x) for x in vec_mat(v, self.gram)), 0)

    def divisibility_in_ambient(self, v: Sequence[int]) -> int:
        self._require_ambient()
        return self.ambient.divisibility(self.to_ambient(v))

    @staticmethod
    def is_primitive_vector(v: Sequence[int]) -> bool:
        return reduce(gcd, (abs(x) for x in v), 0) == 1

    # -- coordinates ------------------------------------------------------

    def to_ambient(self, v: Sequence) -> list:
        self._require_ambient()
        return vec_mat(list(v), [list(r) for r in self.coords])

    def coordinates_of(self, x: Sequence) -> Optional[List[int]]:
        """Coordinates in this basis of an ambient vector, or ``None`` if outside."""
        self._require_ambient()
        H, U = self._echelon()
        z = solve_in_span(H, x)
        if z is None:
            return None
        return vec_mat(z, U)

    def contains(self, x: Sequence) -> bool:
        return self.coordinates_of(x) is not None

    def _echelon(self):
        if not hasattr(self, "_echelon_cache"):
            H, U = hnf([list(r) for r in self.coords])
            r = hnf_rank(H)
            self._echelon_cache = (H[:r], U[:r])
        return self._echelon_cache

    def root_coords(self, v: Sequence) -> list:
        """Coordinates of ``v`` in the outermost ambient lattice."""
        lattice, vec = self, list(v)
        while lattice.ambient is not None:
            vec = lattice.to_ambient(vec)
            lattice = lattice.ambient
        return vec

    def dual(self) -> Tuple[List[List[Fraction]], List[List[Fraction]]]:
        """Basis of ``L^∨`` (rows, rational, in ``L`` coordinates) and its Gram matrix."""
        Ginv = self.dual_gram()
        return Ginv, Ginv

    def vector(self, coords: Sequence[int]) -> "LatticeVector":
        return LatticeVector(self, coords)

    # -- records ----------------------------------------------------------

    def to_record(self) -> Dict:
        record = {"name": self.name, "gram": self.gram}
        if self.ambient is not None:
            record["ambient"] = self.ambient.to_record()
            record["coords"] = [list(r) for r in self.coords]
        return record

    @staticmethod
    def from_record(record: Dict) -> "Lattice":
        if not isinstance(record, dict) or "gram" not in record:
            raise InputError("lattice record needs a 'gram' field")
        ambient = Lattice.from_record(record["ambient"]) if "ambient" in record else None
        coords = record.get("coords")
        return Lattice(record["gram"], record.get("name", "L"), ambient=ambient, coords=coords,
                       degenerate=bool(record.get("degenerate", False)))

    def __eq__(self, other):
        return isinstance(other, Lattice) and self._gram == other._gram and self.coords == other.coords

    def __hash__(self):
        return hash((self._gram, self.coords))

    def __repr__(self):
        return f"Lattice({self.name}, rank={self.rank}, det={self.determinant}, sig={self.signature})"


class LatticeVector:
    """A coordinate row vector of a lattice."""

    __slots__ = ["lattice", "coords"]

    def __init__(self, lattice: Lattice, coords: Sequence[int]):
        if len(coords) != lattice.rank:
            raise InputError(f"vector of length {len(coords)} in a lattice of rank {lattice.rank}")
        self.lattice = lattice
        self.coords = tuple(int(c) for c in coords)

    @property
    def norm(self) -> int:
        return self.lattice.norm(self.coords)

    def pairing(self, other) -> int:
        other = other.coords if isinstance(other, LatticeVector) else other
        return self.lattice.pairing(self.coords, other)

    @property
    def divisibility(self) -> int:
        return self.lattice.divisibility(self.coords)

    @property
    def is_primitive(self) -> bool:
        return Lattice.is_primitive_vector(self.coords)

    def in_ambient(self) -> list:
        return self.lattice.to_ambient(self.coords)

    def __neg__(self):
        return LatticeVector(self.lattice, [-c for c in self.coords])

    def __eq__(self, other):
        return isinstance(other, LatticeVector) and self.coords == other.coords and self.lattice == other.lattice

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"LatticeVector({list(self.coords)}, norm={self.norm})"


def sublattice(L: Lattice, vectors, name=None) -> Lattice:
    return L.sublattice(vectors, name)


def saturation(S: Lattice) -> Lattice:
    return S.saturation()


def orthogonal_complement(S: Lattice) -> Lattice:
    return S.orthogonal_complement()


def divisibility(v: Sequence[int], L: Lattice) -> int:
    return L.divisibility(v)


def direct_sum(*lattices: Lattice) -> Lattice:
    return reduce(lambda a, b: a.direct_sum(b), lattices)
