"""Gram matrices of the root lattices, the hyperbolic plane and rank-one lattices."""
from functools import lru_cache
from typing import List

from core.Errors import InputError
from lattice.Lattice import Lattice


def _cartan(n: int, edges) -> List[List[int]]:
    G = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        G[i][j] = G[j][i] = -1
    return G


def cartan_a(n: int) -> List[List[int]]:
    if n < 1:
        raise InputError(f"A_{n} needs n ≥ 1")
    return _cartan(n, [(i, i + 1) for i in range(n - 1)])


def cartan_d(n: int) -> List[List[int]]:
    if n < 4:
        raise InputError(f"D_{n} needs n ≥ 4")
    return _cartan(n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)])


def cartan_e(n: int) -> List[List[int]]:
    """Bourbaki numbering: chain 1-3-4-5-6-7-8 with node 2 attached to node 4."""
    if n not in (6, 7, 8):
        raise InputError(f"E_{n} needs n in 6, 7, 8")
    edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
    return _cartan(n, [(i, j) for i, j in edges if i < n and j < n])


@lru_cache(maxsize=None)
def root_lattice(kind: str, n: int) -> Lattice:
    """Positive definite ``A_n``, ``D_n`` or ``E_n``."""
    builders = {"A": cartan_a, "D": cartan_d, "E": cartan_e}
    if kind not in builders:
        raise InputError(f"unknown root system {kind}")
    return Lattice(builders[kind](n), f"{kind}{n}")


def hyperbolic_plane(k: int = 1) -> Lattice:
    return Lattice([[0, k], [k, 0]], "U" if k == 1 else f"U({k})")


def rank_one(k: int) -> Lattice:
    if k == 0:
        raise InputError("(0) is degenerate")
    return Lattice([[k]], f"({k})")
