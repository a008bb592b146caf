import logging
from typing import Dict, List, Optional, Sequence

from construction.Catalog import l_m
from core.Errors import InputError
from discform.GlueMap import Overlattice
from lattice.Lattice import Lattice
from linalg.MatrixTools import identity

logger = logging.getLogger(__name__)


class WallContext:
    """
    ``L_n = v^⊥`` inside a Mukai-type lattice ``L_M`` with ``q(v) = 2n-2``.

    For ``n = 1`` there is no ``v``: ``L_1`` is the K3 lattice and walls are
    the vectors of square ``-2``.
    """

    def __init__(self, n: int, lattice: Lattice, v: Optional[Sequence[int]], complement: Lattice):
        if n < 1:
            raise InputError(f"n must be at least 1, got {n}")
        self.n = n
        self.lattice = lattice
        self.v = list(v) if v is not None else None
        self.complement = complement
        if self.v is not None:
            if lattice.norm(self.v) != 2 * n - 2:
                raise InputError(f"v has square {lattice.norm(self.v)}, expected {2 * n - 2}")
            if not Lattice.is_primitive_vector(self.v):
                raise InputError("v is not primitive")

    @property
    def v_square(self) -> int:
        return 2 * self.n - 2

    @classmethod
    def standard(cls, n: int) -> "WallContext":
        """``L_M = U^4 ⊕ E8(-1)^2`` with ``v = e_4 + (n-1) f_4``."""
        L = l_m()
        if n == 1:
            rows = [row for i, row in enumerate(identity(L.rank)) if i not in (6, 7)]
            return cls(1, L, None, L.sublattice(rows, "K3"))
        v = [0] * L.rank
        v[6], v[7] = 1, n - 1
        return cls(n, L, v, L.complement_of([v], f"L_{n}"))

    @classmethod
    def from_overlattice(cls, glued: Overlattice, v_right: Sequence[int], n: Optional[int] = None) -> "WallContext":
        """``v`` given in the coordinates of the right summand of ``glued``."""
        L = glued.lattice
        v = glued.right.to_ambient(v_right)
        square = L.norm(v)
        if n is None:
            if square % 2 or square < 0:
                raise InputError(f"v has square {square}, not of the form 2n-2")
            n = square // 2 + 1
        if n == 1:
            raise InputError("the n = 1 context has no v; use WallContext.standard(1)")
        return cls(n, L, v, L.complement_of([v], f"L_{n}"))

    def in_lattice(self, S: Lattice) -> List[List[int]]:
        """Basis rows of ``S`` in ``L_M`` coordinates; ``S`` lives in ``L_n`` or ``L_M``."""
        if S.ambient is not None and S.ambient.gram == self.complement.gram:
            return [self.complement.to_ambient(row) for row in S.coords]
        if S.ambient is not None and S.ambient.gram == self.lattice.gram:
            rows = [list(r) for r in S.coords]
            if self.v is not None and any(self.lattice.pairing(r, self.v) for r in rows):
                raise InputError(f"{S.name} is not orthogonal to v")
            return rows
        raise InputError(f"{S.name} is not a sublattice of {self.complement.name} or {self.lattice.name}")

    def to_record(self) -> Dict:
        return {"n": self.n, "lattice": self.lattice.name, "v": self.v, "complement_rank": self.complement.rank}
