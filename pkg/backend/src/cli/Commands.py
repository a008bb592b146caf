"""Subcommand handlers; each returns the JSON-able result and the exit code."""
import json
import logging
import os
from typing import Dict, List, Tuple

from autos.Isometry import Isometry
from autos.IsometryGroup import group_closure, leech_pair_check
from autos.Zoo import zoo, zoo_entry
from checker.CheckerCaller import CheckerCaller, suite_entries
from checker.LatticeCheckers import root_count
from construction.Catalog import mukai_complements, named
from construction.Exceptional import EXCEPTIONAL, exceptional
from core.Errors import InputError
from discform.FiniteQuadraticForm import discriminant_form
from discform.GaussSum import milgram_signature
from discform.Nikulin import two_modular_invariants
from enumeration.NormCensus import min_norm, norm_census
from lattice.Lattice import Lattice
from utils.Tools import getJson
from walls.Classification import classification_table, classify_prime, minimal_n
from walls.Realizability import conway_from_coinvariant, huybrechts_equivalents, realizability, \
    wall_in_s_obstruction
from walls.WallContext import WallContext
from walls.WallDivisor import is_wall_divisor

logger = logging.getLogger(__name__)

Result = Tuple[object, int]


def _read_json(path: str):
    if not os.path.exists(path):
        raise InputError(f"{path}: no such file")
    try:
        return getJson(path)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: line {e.lineno} column {e.colno}: {e.msg}")


def load_lattice(text: str) -> Lattice:
    """A lattice record file, or else a catalog name."""
    if text.endswith(".json") or os.path.exists(text):
        record = _read_json(text)
        # output of `construct`
        if isinstance(record, dict) and "gram" not in record and isinstance(record.get("lattice"), dict):
            record = record["lattice"]
        return Lattice.from_record(record)
    if text in EXCEPTIONAL:
        return exceptional(text)
    return named(text)


def parse_coords(text: str) -> List[int]:
    try:
        return [int(x) for x in text.replace("[", "").replace("]", "").split(",") if x.strip()]
    except ValueError:
        raise InputError(f"--divisor: cannot parse {text!r} as comma-separated integers")


def _is_definite(L: Lattice) -> bool:
    return L.is_positive_definite or L.is_negative_definite


def construct(args) -> Result:
    L = load_lattice(args.name)
    record = {"lattice": L.to_record()}
    if args.verify:
        record["det"] = L.determinant
        record["signature"] = list(L.signature)
        if _is_definite(L):
            record["min_norm"] = min_norm(L) if L.rank else None
            record["roots"] = root_count(L)
    return record, 0


def analyze(args) -> Result:
    if not args.input and not args.lattice:
        raise InputError("analyze needs --input FILE or --lattice NAME")
    L = load_lattice(args.input or args.lattice)
    record: Dict = {"name": L.name, "rank": L.rank}
    if args.signature:
        record["sig"] = list(L.signature)
    if args.det:
        record["det"] = L.determinant
    if args.even:
        record["even"] = L.is_even
    if args.disc or args.milgram:
        q = discriminant_form(L)
        if args.disc:
            record["disc"] = q.to_record()
            record["length"] = q.length
        if args.milgram:
            record["milgram"] = milgram_signature(q, decompose=True)
    if args.census is not None:
        record["census"] = norm_census(L, args.census, up_to_sign=args.up_to_sign).to_record()
    if args.min:
        record["min"] = min_norm(L)
    if args.roots:
        record["roots"] = root_count(L)
    if args.two_modular:
        record["two_modular"] = two_modular_invariants(L).to_record()
    return record, 0


def autos(args) -> Result:
    if args.autos_command == "zoo":
        if args.entry:
            return zoo_entry(args.entry).report(), 0
        return [{"name": e.name, "order": e.order, "description": e.description} for e in zoo()], 0
    L = load_lattice(args.lattice)
    data = _read_json(args.gens)
    records = data.get("generators", []) if isinstance(data, dict) else data
    if not isinstance(records, list):
        raise InputError(f"{args.gens}: expected a list of isometry records")
    generators = [Isometry.from_record(r if isinstance(r, dict) else {"matrix": r}, L) for r in records]
    G = group_closure(L, generators)
    T, S = G.invariant_lattice(), G.coinvariant_lattice()
    record = {"order": G.order, "invariant": T.to_record(), "coinvariant": S.to_record(),
              "invariant_rank": T.rank, "coinvariant_rank": S.rank, "torsion_index": G.torsion_index(),
              "torsion_check": G.torsion_check()}
    if S.rank and L.is_even and _is_definite(L):
        record["leech_pair"] = leech_pair_check(Lattice(S.gram, S.name), G.restrict(S)).to_record()
    return record, 0


def _wall_context(args) -> WallContext:
    if not args.lattice:
        return WallContext.standard(args.n)
    L = load_lattice(args.lattice)
    if args.v is None:
        raise InputError("--lattice needs --v COORDS for the vector of square 2n-2")
    v = parse_coords(args.v)
    return WallContext(args.n, L, v, L.complement_of([v], f"L_{args.n}"))


def walls(args) -> Result:
    if args.walls_command == "check":
        ctx = _wall_context(args)
        D = parse_coords(args.divisor)
        if args.ambient:
            coords = ctx.complement.coordinates_of(D)
            if coords is None:
                raise InputError(f"--divisor {D} is not orthogonal to v")
            D = coords
        if len(D) != ctx.complement.rank:
            raise InputError(f"--divisor has {len(D)} coordinates, L_{ctx.n} has rank {ctx.complement.rank}")
        return is_wall_divisor(ctx, D).to_record(), 0
    S = load_lattice(args.lattice)
    if args.walls_command == "realize":
        complements = [load_lattice(c) for c in args.complement] if args.complement else \
            mukai_complements(S.name)
        report = realizability(S, args.n, complements)
        return report.to_record(), 0
    if args.walls_command == "obstruction":
        report = wall_in_s_obstruction(S, args.n)
        return report.to_record(), 0
    report = {"huybrechts": huybrechts_equivalents(S).to_record(), "conway": conway_from_coinvariant(S).to_record()}
    return report, 0


def classify(args) -> Result:
    if args.classify_command == "table":
        table = classification_table()
        for row in table.rows:
            row.validate()
        return table.to_record(), 0
    if args.classify_command == "prime":
        return classify_prime(args.p), 0
    return minimal_n(args.lattice).to_record(), 0


def verify(args, config) -> Result:
    report = CheckerCaller(suite_entries(args.suite, config)).check(args.suite)
    return report.to_record(), 0 if report.passed else 1


COMMANDS = {"construct": construct, "analyze": analyze, "autos": autos, "walls": walls, "classify": classify}
