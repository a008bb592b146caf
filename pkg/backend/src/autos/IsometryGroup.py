import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from autos.Isometry import Isometry, discriminant_action
from core.Errors import GroupCapError, InputError
from enumeration.NormCensus import has_roots
from lattice.Lattice import Lattice
from linalg.MatrixTools import determinant, identity, transpose
from linalg.NormalForms import kernel_basis, solve_in_span, span_basis
from utils.GlobalVarGetter import GlobalVarGetter

logger = logging.getLogger(__name__)


class IsometryGroup:
    """A finite group of isometries of one lattice, closed by breadth-first products."""

    def __init__(self, lattice: Lattice, generators: Sequence[Isometry], elements: Optional[List[Isometry]] = None):
        self.lattice = lattice
        self.generators = list(generators)
        for g in self.generators:
            if g.lattice.gram != lattice.gram:
                raise InputError(f"{g.name} acts on {g.lattice.name}, not on {lattice.name}")
        self._elements = elements
        self._invariant = None

    @property
    def elements(self) -> List[Isometry]:
        if self._elements is None:
            self._elements = group_closure(self.lattice, self.generators).elements
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def invariant_lattice(self) -> Lattice:
        """``T_G``: the saturated common kernel of ``g - I`` over the generators."""
        if self._invariant is None:
            L = self.lattice
            n = L.rank
            if not self.generators:
                self._invariant = L.sublattice(identity(n), f"T({L.name})")
            else:
                blocks = [[[g.matrix[j][i] - int(i == j) for j in range(n)] for i in range(n)] for g in self.generators]
                stacked = [sum((block[i] for block in blocks), []) for i in range(n)]
                self._invariant = L.sublattice(kernel_basis(stacked), f"T({L.name})")
        return self._invariant

    def coinvariant_lattice(self) -> Lattice:
        """``S_G = T_G^⊥``."""
        return self.invariant_lattice().orthogonal_complement(f"S({self.lattice.name})")

    def is_stable(self, sub: Lattice) -> bool:
        """Whether every generator maps the sublattice ``sub`` into itself."""
        return all(sub.contains(g.apply(row)) for g in self.generators for row in sub.coords)

    def torsion_index(self) -> int:
        """``[L : T_G ⊕ S_G]``."""
        T, S = self.invariant_lattice(), self.coinvariant_lattice()
        rows = [list(r) for r in T.coords] + [list(r) for r in S.coords]
        return abs(determinant(rows)) if rows else 1

    def torsion_check(self) -> bool:
        """``|G|·b ∈ T_G ⊕ S_G`` for every basis vector ``b``."""
        T, S = self.invariant_lattice(), self.coinvariant_lattice()
        n = self.lattice.rank
        basis = span_basis([list(r) for r in T.coords] + [list(r) for r in S.coords], n)
        m = self.order
        return all(solve_in_span(basis, [m * int(i == j) for j in range(n)]) is not None for i in range(n))

    def discriminant_trivial(self) -> bool:
        return all(discriminant_action(g).is_trivial for g in self.generators)

    def restrict(self, sub: Lattice) -> "IsometryGroup":
        """The generators restricted to a stable sublattice, in its own basis."""
        gens = []
        for g in self.generators:
            images = [sub.coordinates_of(g.apply(row)) for row in sub.coords]
            if any(c is None for c in images):
                raise InputError(f"{sub.name} is not stable under {g.name}")
            gens.append(Isometry(sub, transpose(images), g.name, check=False))
        return IsometryGroup(sub, gens)

    def to_record(self) -> Dict:
        return {"lattice": self.lattice.name, "generators": [g.to_record() for g in self.generators],
                "order": self.order}


def group_closure(L: Lattice, generators: Sequence[Isometry], cap: Optional[int] = None) -> IsometryGroup:
    if cap is None:
        cap = GlobalVarGetter.option("group_cap")
    identity_element = Isometry.identity(L)
    seen = {identity_element.key: identity_element}
    frontier = [identity_element]
    while frontier:
        new_frontier = []
        for x in frontier:
            for g in generators:
                y = g * x
                if y.key not in seen:
                    seen[y.key] = y
                    new_frontier.append(y)
                    if len(seen) > cap:
                        raise GroupCapError(f"group not verified finite within cap {cap}")
        frontier = new_frontier
        logger.debug("Group closure on %s: %d elements", L.name, len(seen))
    elements = [seen[k] for k in sorted(seen)]
    logger.info("Closed %d generators on %s to a group of order %d", len(generators), L.name, len(elements))
    return IsometryGroup(L, generators, elements)


@dataclass
class LeechPairReport:
    negative_definite: bool
    root_free: bool
    trivial_discriminant_action: bool
    coinvariant_is_whole: bool

    @property
    def holds(self) -> bool:
        return self.negative_definite and self.root_free and self.trivial_discriminant_action \
            and self.coinvariant_is_whole

    def to_record(self) -> Dict:
        return {"negative_definite": self.negative_definite, "root_free": self.root_free,
                "trivial_discriminant_action": self.trivial_discriminant_action,
                "coinvariant_is_whole": self.coinvariant_is_whole, "leech_pair": self.holds}


def leech_pair_check(M: Lattice, G: IsometryGroup) -> LeechPairReport:
    negative = M.is_negative_definite
    return LeechPairReport(
        negative_definite=negative,
        root_free=negative and not has_roots(M),
        trivial_discriminant_action=G.discriminant_trivial() if M.is_even else False,
        coinvariant_is_whole=G.invariant_lattice().rank == 0,
    )
