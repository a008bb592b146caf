from fractions import Fraction

import pytest

from construction.Catalog import named
from core.Errors import BoundExceededError, GlueError, InputError, OddLatticeError
from core.Verdict import Verdict
from discform.FiniteQuadraticForm import FiniteQuadraticForm, discriminant_form
from discform.GaussSum import lattice_signature_mod8, milgram_signature
from discform.GlueMap import GlueMap, find_anti_isometry, forms_isomorphic, glue_overlattice, iter_anti_isometries
from discform.Nikulin import nikulin_embedding_exists, nikulin_lattice_exists, nikulin_unique, \
    two_modular_invariants
from lattice.Lattice import Lattice


def test_discriminant_form_of_a2():
    q = discriminant_form(named("A2"))
    assert q.factors == [3]
    assert q.order == 3 and q.length == 1
    assert q.value((1,)) == Fraction(2, 3)
    assert q.class_of(q.lift((1,))) == (1,)


def test_unimodular_forms_are_trivial():
    assert discriminant_form(named("E8")).is_trivial()
    assert discriminant_form(named("U")).is_trivial()


def test_odd_lattice_has_no_discriminant_form():
    with pytest.raises(OddLatticeError):
        discriminant_form(Lattice([[1]]))


@pytest.mark.parametrize("name", ["A2", "A2(-1)", "D4", "E6", "E7", "E8(-2)", "U(2)", "(2)", "(-4)",
                                  "A2⊕A2(3)", "U(3)^4"])
def test_milgram_formula(name):
    L = named(name)
    assert milgram_signature(discriminant_form(L), decompose=True) == lattice_signature_mod8(L)


def test_milgram_bound():
    q = discriminant_form(named("D4⊕A2"))
    with pytest.raises(BoundExceededError) as info:
        milgram_signature(q, bound=4)
    assert "decompose" in str(info.value)
    assert milgram_signature(q, bound=4, decompose=True) == 6


def test_primary_parts():
    q = discriminant_form(named("D4⊕A2"))
    assert q.primary_part(2).order == 4
    assert q.primary_part(3).order == 3
    assert q.primes == [2, 3]


def test_invalid_forms():
    with pytest.raises(InputError):
        FiniteQuadraticForm([1], [[0]])
    with pytest.raises(InputError):
        FiniteQuadraticForm([2], [[Fraction(1, 3)]])


def test_forms_isomorphic():
    qA2 = discriminant_form(named("A2"))
    assert forms_isomorphic(qA2, discriminant_form(named("E6(-1)"))) == Verdict.YES
    assert forms_isomorphic(qA2, discriminant_form(named("E6"))) == Verdict.NO
    assert forms_isomorphic(qA2, discriminant_form(named("D4"))) == Verdict.NO


def test_gluing_a2_and_e6_gives_e8():
    A2, E6 = named("A2"), named("E6")
    glue = find_anti_isometry(discriminant_form(A2), discriminant_form(E6))
    assert glue is not None and glue.is_full()
    glued = glue_overlattice(A2, E6, glue)
    assert glued.index == 3
    assert glued.lattice.determinant == 1
    assert glued.lattice.is_even and glued.lattice.is_positive_definite
    assert glued.left.gram == A2.gram
    assert glued.right.gram == E6.gram
    assert len(iter_anti_isometries(discriminant_form(A2), discriminant_form(E6), limit=8)) == 2


def test_glue_map_validation():
    q = discriminant_form(named("A2"))
    with pytest.raises(GlueError) as info:
        GlueMap(q, q, [(1,)], [(1,)]).validate()
    assert info.value.element == (1,)


def test_nikulin_existence():
    qA2 = discriminant_form(named("A2"))
    assert nikulin_lattice_exists((2, 0), qA2).verdict == Verdict.YES
    assert nikulin_lattice_exists((0, 2), qA2).verdict == Verdict.NO
    q = discriminant_form(named("A2^4"))
    assert nikulin_lattice_exists((1, 1), q).verdict == Verdict.INCONCLUSIVE
    assert nikulin_lattice_exists((-1, 3), q).verdict == Verdict.NO


def test_nikulin_embedding():
    e8 = named("E8(-2)")
    verdict = nikulin_embedding_exists(e8, (3, 19))
    assert verdict.verdict == Verdict.YES
    assert verdict.complement_signature == (3, 11)
    assert nikulin_embedding_exists(named("A2"), (0, 8)).verdict == Verdict.NO
    assert nikulin_embedding_exists(named("A2"), (1, 2)).verdict == Verdict.NO
    assert nikulin_unique((3, 11), verdict.complement_form) == Verdict.UNIQUE
    assert nikulin_unique((0, 8), verdict.complement_form) == Verdict.INCONCLUSIVE


    # q(y/2) = -(y, y)/2 lies in Z for y in E8, hence delta = 0
    # q(y/2) = -(y, y)/2 is integral for y in E8, so every value of the form is 0 mod 1
    e8 = two_modular_invariants(named("E8(-2)"))
    assert (e8.rank, e8.length, e8.delta) == (8, 8, 0)
    assert two_modular_invariants(named("U(2)")).delta == 0
    assert two_modular_invariants(named("(2)")).delta == 1
    with pytest.raises(InputError):
        two_modular_invariants(named("A2"))
