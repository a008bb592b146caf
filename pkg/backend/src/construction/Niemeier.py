import logging
from functools import lru_cache
from typing import List

from construction.GlueCode import DIAGRAMS, NIEMEIER_TABLE, glue_code, glue_vector
from construction.RootLattices import root_lattice
from core.Errors import InputError
from lattice.EuclideanModel import EuclideanModel
from lattice.Lattice import Lattice

logger = logging.getLogger(__name__)

COXETER_NUMBERS = dict({name: row[3] for name, row in NIEMEIER_TABLE.items()}, N3=30)


def simple_roots(n: int, copies: int) -> List[List[int]]:
    """Simple roots ``e_{a+1} - e_a`` of every copy of ``A_n``, scaled by ``n+1``."""
    h = n + 1
    roots = []
    for j in range(copies):
        for a in range(n):
            v = [0] * (h * copies)
            v[j * h + a] = -h
            v[j * h + a + 1] = h
            roots.append(v)
    return roots


@lru_cache(maxsize=None)
def niemeier_model(name: str) -> EuclideanModel:
    """
    ``A_n(-1)^m`` plus the glue vectors of the generator words, in coordinates
    scaled by ``n+1`` with form ``-(x·y)/(n+1)²``.
    """
    name = DIAGRAMS.get(name, name)
    code = glue_code(name)
    n, m, h = code.n, code.copies, code.modulus
    gens = simple_roots(n, m)
    for word in code.generators:
        gens.append([x for letter in word for x in glue_vector(n, letter)])
    return EuclideanModel.from_generators(gens, scale=h * h, sign=-1, name=name)


@lru_cache(maxsize=None)
def niemeier(name: str) -> Lattice:
    """Supported rows: the pure ``A``-type diagrams and ``N3 = E8³``."""
    name = DIAGRAMS.get(name, name)
    if name in ("N3", "E8^3"):
        return root_lattice("E", 8).rescale(-1).power(3, "N3")
    if name not in NIEMEIER_TABLE:
        raise InputError(f"{name}: mixed-diagram glue not implemented; "
                         f"supported: N3, {', '.join(sorted(NIEMEIER_TABLE))}")
    return niemeier_model(name).to_lattice(name)
