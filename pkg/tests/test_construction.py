import pytest

from construction.Catalog import l_m, l_n, mukai_complements, named
from construction.Exceptional import exceptional, reed_muller_words, s_lattice
from construction.GlueCode import glue_code, glue_vector, parse_word
from construction.Holy import copy_permutation, holy_construction, holy_frame, rotate_tail
from construction.Niemeier import COXETER_NUMBERS, niemeier
from construction.RootLattices import root_lattice
from core.Errors import InputError
from discform.FiniteQuadraticForm import discriminant_form
from enumeration.NormCensus import has_roots, min_norm, norm_census


@pytest.mark.parametrize("kind,n,det", [("A", 1, 2), ("A", 4, 5), ("D", 4, 4), ("D", 7, 4),
                                        ("E", 6, 3), ("E", 7, 2), ("E", 8, 1)])
def test_root_lattice_determinants(kind, n, det):
    L = root_lattice(kind, n)
    assert L.rank == n and L.determinant == det
    assert L.is_even and L.is_positive_definite


def test_root_lattice_errors():
    with pytest.raises(InputError):
        root_lattice("D", 3)
    with pytest.raises(InputError):
        root_lattice("E", 9)
    with pytest.raises(InputError):
        root_lattice("B", 2)


def test_catalog_names():
    assert named("U⊕U").determinant == 1
    assert named("A2(-1)^12").determinant == 3 ** 12
    assert named("U(2)^4⊕(-2)^4").rank == 12
    assert named("[[2,1],[1,2]]").determinant == 3
    assert named("E8(-1)").signature == (0, 8)
    for bad in ("", "Q7", "A2(x)"):
        with pytest.raises(InputError):
            named(bad)


def test_mukai_type_lattices():
    L2 = l_n(2)
    assert L2.rank == 23 and L2.signature == (3, 20) and abs(L2.determinant) == 2
    assert l_n(1).name == "K3" and l_n(1).determinant == -1
    M = l_m()
    assert M.rank == 24 and M.signature == (4, 20) and M.determinant == 1
    with pytest.raises(InputError):
        l_n(0)


def test_mukai_complements():
    (T,) = mukai_complements("E8(-2)")
    assert T.name == "U^4⊕E8(-2)"
    assert all(C.determinant == 121 for C in mukai_complements("S11"))
    with pytest.raises(InputError):
        mukai_complements("Leech")


def test_glue_code_notation():
    assert parse_word("2130") == (2, 1, 3, 0)
    code = glue_code("N20")
    assert len(code.elements()) == 125
    assert (1, 0, 1, 4, 4, 1) in code
    assert glue_code("A4^6").elements() == code.elements()
    assert glue_vector(2, 1) == [1, 1, -2]
    with pytest.raises(InputError):
        glue_code("N1")


def test_niemeier_unimodular():
    for name in ("N23", "N3"):
        L = niemeier(name)
        assert L.rank == 24 and L.determinant == 1 and L.is_even and L.is_negative_definite
    with pytest.raises(InputError) as info:
        niemeier("N12")
    assert "mixed-diagram glue not implemented" in str(info.value)


@pytest.mark.slow
@pytest.mark.parametrize("name,roots", [("N23", 48), ("N22", 72), ("N20", 120), ("N17", 168), ("N10", 312),
                                        ("N3", 720)])
def test_niemeier_root_counts(name, roots):
    census = norm_census(niemeier(name), 2)
    assert census.count(-2) == 24 * COXETER_NUMBERS[name] == roots


def test_holy_permutations():
    assert copy_permutation(2, 3, [1, 2, 0]) == [2, 3, 4, 5, 0, 1]
    assert rotate_tail(4) == [0, 2, 3, 1]
    frame = holy_frame("A2^12")
    assert frame.name == "N22" and frame.h == 3 and frame.dimension == 36
    with pytest.raises(InputError):
        frame.translation_permutation((1,) * 11)
    with pytest.raises(InputError):
        copy_permutation(2, 3, [0, 0, 1])


def test_holy_leech_is_unimodular():
    leech_like, hole, _ = holy_construction("N20")
    assert leech_like.rank == 24 and leech_like.determinant == 1 and leech_like.is_even
    assert hole.determinant == 1


@pytest.mark.slow
@pytest.mark.parametrize("name", ["N23", "N20"])
def test_holy_leech_is_root_free(name):
    leech_like, hole, _ = holy_construction(name)
    assert not has_roots(leech_like)
    assert norm_census(hole, 2).count(-2) == 24 * COXETER_NUMBERS[name]


def test_leech_invariants():
    leech = named("Leech")
    assert leech.rank == 24 and leech.determinant == 1
    assert leech.is_even and leech.is_negative_definite


@pytest.mark.slow
def test_leech_is_root_free():
    leech = named("Leech")
    assert min_norm(leech) == -4
    assert not has_roots(leech)


@pytest.mark.slow
def test_leech_minimal_vectors():
    census = norm_census(named("Leech"), 4)
    assert census.count(-2) == 0
    assert census.count(-4) == 196560


def test_reed_muller_code():
    words = reed_muller_words()
    assert len(words) == 32
    assert sorted({sum(w) for w in words}) == [0, 8, 16]


def test_exceptional_two_elementary_lattices():
    bw16 = exceptional("BW16(-1)")
    assert bw16.rank == 16 and bw16.determinant == 2 ** 8 and bw16.is_even
    d12 = exceptional("D12+(-2)")
    assert d12.rank == 12 and d12.is_even
    assert discriminant_form(d12).factors == [2] * 12
    assert min_norm(d12) == -4


def test_s3exo_and_its_complement():
    S = exceptional("S3exo")
    assert S.rank == 16 and S.is_even and S.is_negative_definite
    T = exceptional("E8(-3)")
    assert T.rank == 8 and T.determinant == 3 ** 8
    assert discriminant_form(T).factors == [3] * 8


@pytest.mark.parametrize("name", ["2^5 3^10", "2^9 3^6"])
def test_s_lattice_census_matches_name(name):
    census = norm_census(s_lattice(name), 6, up_to_sign=True)
    assert census.s_name() == name


def test_unknown_exceptional_name():
    with pytest.raises(InputError):
        exceptional("S13")
    with pytest.raises(InputError):
        s_lattice("2^1 3^1")


@pytest.mark.slow
def test_w_minus_one():
    W = exceptional("W(-1)")
    assert W.rank == 18
    assert discriminant_form(W).factors == [3] * 5
    assert not has_roots(W)
    census = norm_census(exceptional("2^27 3^36"), 6, up_to_sign=True)
    assert census.s_name() == "2^27 3^36"
