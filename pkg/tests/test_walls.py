import pytest

from autos.IsometryGroup import IsometryGroup
from construction.Catalog import mukai_complements, named
from construction.Exceptional import exceptional
from construction.Niemeier import niemeier
from core.Errors import IndefiniteFormError, InputError, PropertyViolation
from core.Verdict import Applicability, Realizability
from walls.Classification import ClassificationRow, classify_prime, minimal_n
from walls.Exclusions import bw16_exclusion, d12_exclusion, s3exo_exclusion
from walls.Realizability import conway_condition, conway_from_coinvariant, find_representing_vector, \
    huybrechts_equivalents, iter_representing_vectors, realizability, wall_in_s_obstruction
from walls.WallContext import WallContext
from walls.WallDivisor import NORM_CLAUSE, ROOT_CLAUSE, clause_of, is_wall_divisor, normalize_generator, \
    numerical_wall_in

# L_M = U^4 ⊕ E8(-1)^2: e_4, f_4 span the last U, then the two E8 blocks
E4, F4, FIRST_E8, SECOND_E8 = 6, 7, 8, 16


def divisor(ctx, entries):
    x = [0] * ctx.lattice.rank
    for i, c in entries.items():
        x[i] = c
    return ctx.complement.coordinates_of(x)


@pytest.fixture(scope="module")
def ctx2():
    return WallContext.standard(2)


def test_standard_context(ctx2):
    assert ctx2.v_square == 2
    assert ctx2.complement.rank == 23
    assert ctx2.complement.signature == (3, 20)
    assert WallContext.standard(1).complement.rank == 22
    with pytest.raises(InputError):
        WallContext(2, ctx2.lattice, [1] + [0] * 23, ctx2.complement)


def test_root_is_a_wall(ctx2):
    report = is_wall_divisor(ctx2, divisor(ctx2, {FIRST_E8: 1}))
    assert report.is_wall and report.clause == ROOT_CLAUSE
    assert report.pairing == 0 and report.r_square == -2


def test_divisibility_two_vector_is_a_wall(ctx2):
    D = divisor(ctx2, {E4: 1, F4: -1, FIRST_E8: 2})
    report = is_wall_divisor(ctx2, D)
    assert report.divisor_square == -10
    assert report.is_wall
    assert report.pairing == 1 and report.r_square == -2
    assert report.t_gram == [[2, 1], [1, -2]]


def test_norm_minus_four_is_not_a_wall(ctx2):
    D = divisor(ctx2, {FIRST_E8: 1, SECOND_E8: 1})
    report = is_wall_divisor(ctx2, D)
    assert not report.is_wall
    assert report.r_square == -4


def test_verdict_is_invariant_under_sign(ctx2):
    for entries in ({FIRST_E8: 1}, {E4: 1, F4: -1, FIRST_E8: 2}, {FIRST_E8: 1, SECOND_E8: 1}):
        D = divisor(ctx2, entries)
        assert is_wall_divisor(ctx2, D).clause == is_wall_divisor(ctx2, [-c for c in D]).clause


def test_zero_divisor_is_rejected(ctx2):
    with pytest.raises(InputError):
        is_wall_divisor(ctx2, [0] * 23)


def test_k3_context_walls_are_roots():
    ctx = WallContext.standard(1)
    D = [0] * 22
    D[6] = 1
    assert is_wall_divisor(ctx, D).clause == ROOT_CLAUSE


def test_clauses():
    assert clause_of(2, 0, -2) == ROOT_CLAUSE
    assert clause_of(8, 3, 0) == NORM_CLAUSE
    assert clause_of(8, 4, 0) is None
    assert clause_of(2, 0, -4) is None


def test_normalize_generator(ctx2):
    L, v = ctx2.lattice, ctx2.v
    r = [0] * 24
    r[E4], r[FIRST_E8] = 3, 1
    assert L.pairing(v, r) == 3
    normalized = normalize_generator(L, v, r)
    assert 0 <= L.pairing(v, normalized) <= 1
    negated = normalize_generator(L, v, [-x for x in r])
    assert L.pairing(v, negated) == L.pairing(v, normalized)


def _block(L, rows_offsets):
    rows = []
    for offset in rows_offsets:
        for i in range(8):
            x = [0] * L.rank
            for o in offset:
                x[o + i] = 1
            rows.append(x)
    return rows


def test_wall_search_finds_a_root(ctx2):
    S = ctx2.lattice.sublattice(_block(ctx2.lattice, [(FIRST_E8,)]), "E8(-1)")
    report = numerical_wall_in(S, ctx2)
    assert report is not None and report.clause == ROOT_CLAUSE
    assert report.divisor_square == -2


def test_wall_search_in_diagonal_e8(ctx2):
    S = ctx2.lattice.sublattice(_block(ctx2.lattice, [(FIRST_E8, SECOND_E8)]), "E8(-2)")
    assert S.gram == named("E8(-2)").gram
    assert numerical_wall_in(S, ctx2) is None


def test_wall_search_needs_definite_lattice(ctx2):
    rows = [[int(i == j) for j in range(24)] for i in (0, 1)]
    with pytest.raises(IndefiniteFormError):
        numerical_wall_in(ctx2.lattice.sublattice(rows, "U"), ctx2)


def test_find_representing_vector():
    T = named("U^4⊕E8(-2)")
    v = find_representing_vector(T, 2)
    assert v is not None and v.norm == 2 and v.is_primitive
    w = find_representing_vector(named("U(2)^4"), 4)
    assert w is not None and w.norm == 4


def test_representing_vectors_are_distinct_up_to_sign():
    roots = list(iter_representing_vectors(named("A2"), 2))
    assert len(roots) == 3
    assert all(r.norm == 2 and r.is_primitive for r in roots)
    assert not list(iter_representing_vectors(named("A2"), -2))
    assert [list(v.coords) for v in iter_representing_vectors(named("U"), 2)] == [[1, 1]]


def test_conway_condition():
    assert conway_from_coinvariant(named("E8(-2)")).holds
    report = conway_from_coinvariant(exceptional("BW16(-1)"))
    assert (report.invariant_rank, report.invariant_length) == (8, 8)
    assert not report.holds
    trivial = conway_condition(IsometryGroup(niemeier("N3"), []))
    assert trivial.coinvariant_rank == 0 and trivial.holds


def test_huybrechts_equivalents():
    e8 = huybrechts_equivalents(named("E8(-2)"))
    assert e8.leech_embedding and e8.mukai_embedding and e8.signature_1_20 and e8.rank_three_positive
    bw16 = huybrechts_equivalents(exceptional("BW16(-1)"))
    assert not (bw16.leech_embedding or bw16.mukai_embedding or bw16.signature_1_20 or bw16.rank_three_positive)
    with pytest.raises(InputError):
        huybrechts_equivalents(named("E8"))


def test_obstruction_is_inapplicable_for_e8():
    report = wall_in_s_obstruction(named("E8(-2)"), 2)
    assert report.applicability == Applicability.INAPPLICABLE


@pytest.mark.slow
def test_obstruction_applies_to_bw16():
    report = wall_in_s_obstruction(exceptional("BW16(-1)"), 3)
    assert report.applicability == Applicability.APPLIES
    assert all(abs(g.square) <= 12 for g in report.generators)


def test_indefinite_lattice_is_not_definite():
    report = realizability(named("U"), 2)
    assert report.verdict == Realizability.NOT_DEFINITE


def test_realizability_without_complements_is_inconclusive():
    report = realizability(named("E8(-2)"), 2)
    assert report.verdict == Realizability.INCONCLUSIVE
    assert report.embeddings_tried == 0


def test_k3_realizability():
    assert realizability(named("E8(-2)"), 1).verdict == Realizability.REALIZABLE
    assert realizability(named("E8(-1)"), 1).verdict == Realizability.OBSTRUCTED


@pytest.mark.slow
def test_e8_minus_two_realizable_on_l2():
    report = realizability(named("E8(-2)"), 2, mukai_complements("E8(-2)"))
    assert report.verdict == Realizability.REALIZABLE
    assert report.embedding.complement == "U^4⊕E8(-2)"


@pytest.mark.slow
def test_every_vector_is_tried_with_every_glue():
    report = realizability(exceptional("BW16(-1)"), 3, mukai_complements("BW16(-1)"), glue_choices=2)
    assert report.verdict == Realizability.OBSTRUCTED
    assert report.embeddings_tried >= 2
    assert report.witness.divisor_square < 0


@pytest.mark.slow
@pytest.mark.parametrize("n", [2, 3])
def test_d12_exclusion_witness(n):
    report = d12_exclusion(n)
    assert report.witness.divisor_square == -2 * n - 6
    assert report.printed_gram == [[2 - 2 * n, n - 1], [n - 1, -2]]
    assert report.revalidated.is_wall


@pytest.mark.slow
def test_bw16_and_s3exo_exclusions():
    assert bw16_exclusion(3).revalidated.is_wall
    assert s3exo_exclusion(4).revalidated.is_wall


def test_exclusion_input_ranges():
    with pytest.raises(InputError):
        d12_exclusion(1)
    with pytest.raises(InputError):
        bw16_exclusion(4)
    with pytest.raises(InputError):
        s3exo_exclusion(5)


def test_minimal_n_of_e8_minus_two():
    row = minimal_n("E8(-2)")
    assert (row.p, row.lattice, row.minimal_n) == (2, "E8(-2)", 1)
    assert row.leech_pair == {"negative_definite": True, "root_free": True}
    assert row.conway.holds
    assert row.deformation_classes == 1
    with pytest.raises(InputError):
        minimal_n("Leech")


def test_classification_row_records():
    row = ClassificationRow.from_record({"p": 2, "lattice": "E8(-2)", "minimal_n": 2,
                                         "witness": {"complement": "U^4⊕E8(-2)", "v": [1, 1] + [0] * 14}})
    assert row.to_record()["minimal_n"] == 2
    with pytest.raises(PropertyViolation):
        ClassificationRow.from_record({"p": 2, "lattice": "E8(-2)", "minimal_n": 2,
                                       "witness": {"complement": "U^4⊕E8(-2)", "v": [1, 0] + [0] * 14}})
    with pytest.raises(InputError):
        ClassificationRow.from_record({"p": 2})


def test_classify_prime_rejects_composites():
    with pytest.raises(InputError):
        classify_prime(4)
    assert classify_prime(2)["rows"][0]["minimal_n"] == 1


@pytest.mark.slow
def test_minimal_n_table():
    expected = {"S3.K3": 1, "W(-1)": 2, "S5.K3": 1, "S5exo": 3, "S7.K3": 1, "S11": 2}
    for name, n in expected.items():
        assert minimal_n(name).minimal_n == n
    assert minimal_n("S11").deformation_classes == 2
    assert [minimal_n(name).deformation_classes for name in ("S3.K3", "S5.K3", "S7.K3")] == [1, 1, None]
