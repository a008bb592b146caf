"""
Catalog of named lattices.

Names combine with ``⊕`` and ``^m``; any base may carry a scale ``(k)``:
``U(2)^4⊕(-2)^4``, ``E8(-1)^2``, ``A2⊕A2(3)``. Bases are ``U``, ``An``,
``Dn``, ``E6``-``E8``, ``(k)``, ``L_n``, ``L_M``, ``K3``, ``Leech``, the
supported Niemeier names and every exceptional id.
"""
import logging
import re
from functools import lru_cache, reduce
from typing import Dict, List

from construction.Exceptional import EXCEPTIONAL, exceptional
from construction.Leech import leech
from construction.Niemeier import niemeier
from construction.RootLattices import hyperbolic_plane, rank_one, root_lattice
from core.Errors import InputError
from lattice.Lattice import Lattice

logger = logging.getLogger(__name__)

_TERM = re.compile(r"^(?P<body>.+?)(?:\^(?P<power>\d+))?$")
_BASE = re.compile(r"^(?P<base>[A-Za-zΛ][A-Za-z0-9_]*)?(?:\((?P<scale>-?\d+)\))?$")

MUKAI_COMPLEMENTS: Dict[str, List[str]] = {
    "S2.K3": ["U^4⊕E8(-2)"],
    "S5exo": ["[[4,1,1,-1],[1,4,-1,1],[1,-1,4,1],[-1,1,1,4]]"],
    "S11": ["[[4,2,1,0],[2,4,1,1],[1,1,4,2],[0,1,2,4]]",
            "[[2,1,1,0],[1,2,1,1],[1,1,8,4],[0,1,4,8]]",
            "[[2,0,1,0],[0,2,0,1],[1,0,6,0],[0,1,0,6]]"],
    # complement of the enlargement F ⊃ W(-1), the orthogonal of 2^9 3^6 in the Leech lattice
    "W(-1)": ["A2⊕A2(3)"],
    "BW16(-1)": ["U(2)^4"],
    "S3exo": ["U(3)^4"],
    "D12+(-2)": ["U(2)^4⊕(-2)^4"],
}

CATALOG_HELP = "U, An, Dn, E6, E7, E8, (k), L_n, L_M, K3, Leech, N3/N4/N10/N15/N17/N20/N21/N22/N23, " \
               + ", ".join(EXCEPTIONAL)


def l_n(n: int) -> Lattice:
    """``U^3 ⊕ E8(-1)^2 ⊕ (2-2n)``; ``L_1`` is the K3 lattice."""
    if n < 1:
        raise InputError(f"L_n needs n ≥ 1, got {n}")
    k3 = hyperbolic_plane().power(3).direct_sum(root_lattice("E", 8).rescale(-1).power(2), "K3")
    if n == 1:
        return k3
    return k3.direct_sum(rank_one(2 - 2 * n), f"L_{n}")


def l_m() -> Lattice:
    """The Mukai lattice ``U^4 ⊕ E8(-1)^2``."""
    return hyperbolic_plane().power(4).direct_sum(root_lattice("E", 8).rescale(-1).power(2), "L_M")


def _base(base: str) -> Lattice:
    if base == "U":
        return hyperbolic_plane()
    match = re.match(r"^([ADE])(\d+)$", base)
    if match:
        return root_lattice(match.group(1), int(match.group(2)))
    if base in ("L_M", "LM"):
        return l_m()
    match = re.match(r"^L_?(\d+)$", base)
    if match:
        return l_n(int(match.group(1)))
    if base == "K3":
        return l_n(1)
    if base in ("Leech", "leech", "Λ"):
        return leech()
    if re.match(r"^N\d+$", base):
        return niemeier(base)
    raise InputError(f"unknown lattice {base!r}; catalog: {CATALOG_HELP}")


def _term(text: str) -> Lattice:
    if text in EXCEPTIONAL:
        return exceptional(text)
    match = _TERM.match(text)
    body, power = match.group("body"), match.group("power")
    if body in EXCEPTIONAL:
        lattice = exceptional(body)
    elif body.startswith("[["):
        lattice = Lattice(_parse_gram(body), body)
    else:
        base = _BASE.match(body)
        if not base:
            raise InputError(f"cannot parse lattice name {text!r}")
        scale = int(base.group("scale")) if base.group("scale") else None
        if base.group("base") is None:
            if scale is None:
                raise InputError(f"cannot parse lattice name {text!r}")
            lattice = rank_one(scale)
        else:
            lattice = _base(base.group("base"))
            if scale is not None and scale != 1:
                lattice = lattice.rescale(scale)
    if power:
        lattice = lattice.power(int(power))
    return lattice


def _parse_gram(text: str) -> List[List[int]]:
    rows = re.findall(r"\[([-\d,\s]+)\]", text[1:-1])
    try:
        return [[int(x) for x in row.split(",")] for row in rows]
    except ValueError:
        raise InputError(f"cannot parse Gram matrix {text!r}")


@lru_cache(maxsize=None)
def named(name: str) -> Lattice:
    name = name.strip()
    if not name:
        raise InputError(f"empty lattice name; catalog: {CATALOG_HELP}")
    terms = [t.strip() for t in name.split("⊕")]
    lattice = reduce(lambda a, b: a.direct_sum(b), (_term(t) for t in terms))
    logger.debug("Built %s: rank %d, det %d", name, lattice.rank, lattice.determinant)
    return Lattice(lattice.gram, name)


def mukai_complements(name: str) -> List[Lattice]:
    """Positive-side complements in ``L_M`` used by the classification."""
    name = {"E8(-2)": "S2.K3"}.get(name, name)
    if name not in MUKAI_COMPLEMENTS:
        raise InputError(f"no Mukai complement recorded for {name}; known: {', '.join(MUKAI_COMPLEMENTS)}")
    return [named(text) for text in MUKAI_COMPLEMENTS[name]]
