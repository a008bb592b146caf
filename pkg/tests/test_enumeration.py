from fractions import Fraction

import pytest

from construction.Catalog import named
from core.Errors import EnumerationCapError, IndefiniteFormError, InputError
from core.Runtime import running_mode
from enumeration.NormCensus import has_roots, min_norm, norm_census, primitive_represents
from enumeration.ShortVectors import coset_vectors, short_vectors
from utils.GlobalVarGetter import GlobalVarGetter


def test_e8_roots():
    E8 = named("E8")
    roots = short_vectors(E8, 2)
    assert len(roots) == 240
    assert all(v.norm == 2 for v in roots)
    assert len(short_vectors(E8, 2, up_to_sign=True)) == 120


def test_e8_census():
    census = norm_census(named("E8"), 4)
    assert census.count(2) == 240
    assert census.count(4) == 2160
    assert census.count(3) == 0


def test_negative_definite_census():
    census = norm_census(named("E8(-2)"), 6, up_to_sign=True)
    assert census.count(-4) == 120
    assert census.s_name() == "2^120 3^0"
    assert census.to_record() == {"-4": 120}


def test_indefinite_lattice_is_rejected():
    with pytest.raises(IndefiniteFormError):
        short_vectors(named("U"), 2)


def test_cap_and_resume():
    E8 = named("E8")
    full = [v.coords for v in short_vectors(E8, 2)]
    with pytest.raises(EnumerationCapError) as info:
        short_vectors(E8, 2, cap=10)
    assert info.value.cap == 10
    assert len(info.value.partial) <= 10
    resumed = [v.coords for v in short_vectors(E8, 2, resume=info.value)]
    assert resumed == full


def test_coset_vectors_of_a2_dual():
    A2 = named("A2")
    shift = [Fraction(2, 3), Fraction(1, 3)]
    vectors = coset_vectors(A2, shift, Fraction(2, 3))
    assert len(vectors) == 3
    assert all(norm == Fraction(2, 3) for _, norm in vectors)
    assert coset_vectors(A2, [0, 0], 0) == [([0, 0], 0)]


def test_min_norm_and_roots():
    assert min_norm(named("A2")) == 2
    assert min_norm(named("E8(-2)")) == -4
    assert has_roots(named("E8(-1)"))
    assert not has_roots(named("E8(-2)"))


def test_primitive_represents():
    A2 = named("A2")
    v = primitive_represents(A2, 6)
    assert v is not None and v.norm == 6 and v.is_primitive
    assert primitive_represents(A2, 8) is None
    assert primitive_represents(A2, -2) is None
    w = primitive_represents(named("U"), 2)
    assert w is not None and w.norm == 2


def test_parallel_branches_match_sequential():
    E8 = named("E8")
    sequential = [v.coords for v in short_vectors(E8, 4, up_to_sign=True)]
    GlobalVarGetter.set({"global": {"mode": "thread", "threads": 2}})
    assert [v.coords for v in short_vectors(E8, 4, up_to_sign=True)] == sequential


def test_running_mode_configuration():
    assert running_mode({"global": {"threads": 3, "mode": "thread"}}) == ("thread", 3, {})
    with pytest.raises(InputError):
        running_mode({"global": {"threads": 0}})
    with pytest.raises(InputError):
        running_mode({"global": {"mode": "cluster"}})
