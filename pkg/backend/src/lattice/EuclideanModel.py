import logging
from typing import List, Optional, Sequence

import numpy as np

from core.Errors import InputError, NonIntegralError
from lattice.Lattice import Lattice
from linalg.NormalForms import solve_in_span, span_basis

logger = logging.getLogger(__name__)


class EuclideanModel:
    """
    A lattice spanned by integer rows in ``Z^d`` with form ``sign·(x·y)/scale``.

    The Leech lattice (scale 8, sign -1), the Niemeier and holy models and the
    Barnes–Wall and D12⁺ models are all instances. The basis is the canonical
    HNF of the generators, so coordinates of a vector are unique.
    """

    def __init__(self, basis: Sequence[Sequence[int]], scale: int = 1, sign: int = 1, name: str = "L"):
        self.basis = [list(map(int, row)) for row in basis]
        if not self.basis:
            raise InputError("a coordinate model needs at least one basis vector")
        self.dimension = len(self.basis[0])
        self.scale = scale
        self.sign = sign
        self.name = name
        self._lattice = None

    @classmethod
    def from_generators(cls, generators: Sequence[Sequence[int]], scale: int = 1, sign: int = 1,
                        name: str = "L") -> "EuclideanModel":
        generators = list(generators)
        if not generators:
            raise InputError("empty generator list")
        basis = span_basis(generators, len(generators[0]))
        logger.info("%s: spanned %d generators to rank %d", name, len(generators), len(basis))
        return cls(basis, scale, sign, name)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def form(self, x: Sequence[int], y: Sequence[int]):
        value = self.sign * sum(a * b for a, b in zip(x, y))
        if value % self.scale:
            raise NonIntegralError(f"pairing {value}/{self.scale} of {self.name} is not integral")
        return value // self.scale

    def gram(self) -> List[List[int]]:
        B = np.array(self.basis, dtype=object)
        raw = B.dot(B.T) * self.sign
        if any(x % self.scale for x in raw.flat):
            raise NonIntegralError(f"{self.name} is not integral for scale {self.scale}")
        return [[int(x) // self.scale for x in row] for row in raw]

    def to_lattice(self, name: Optional[str] = None) -> Lattice:
        if self._lattice is None or (name and name != self._lattice.name):
            self._lattice = Lattice(self.gram(), name or self.name)
        return self._lattice

    def coordinates(self, x: Sequence[int]) -> List[int]:
        coords = solve_in_span(self.basis, list(x))
        if coords is None:
            raise InputError(f"vector is not in the lattice {self.name}")
        return coords

    def contains(self, x: Sequence[int]) -> bool:
        return solve_in_span(self.basis, list(x)) is not None

    def vector(self, coords: Sequence[int]) -> List[int]:
        out = [0] * self.dimension
        for c, row in zip(coords, self.basis):
            if c:
                for k in range(self.dimension):
                    out[k] += c * row[k]
        return out

    def permutation_matrix(self, perm: Sequence[int]) -> List[List[int]]:
        """
        Matrix (column convention) of the coordinate permutation
        ``x ↦ x'`` with ``x'[perm[k]] = x[k]``.

        Raises ``InputError`` when the permutation does not preserve the lattice.
        """
        if sorted(perm) != list(range(self.dimension)):
            raise InputError("not a permutation of the coordinates")
        columns = []
        for row in self.basis:
            image = [0] * self.dimension
            for k, v in enumerate(row):
                image[perm[k]] = v
            coords = solve_in_span(self.basis, image)
            if coords is None:
                raise InputError(f"coordinate permutation does not preserve {self.name}")
            columns.append(coords)
        return [[columns[j][i] for j in range(self.rank)] for i in range(self.rank)]

    def __repr__(self):
        return f"EuclideanModel({self.name}, rank={self.rank}, dim={self.dimension}, form={self.sign}x·y/{self.scale})"
