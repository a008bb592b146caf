import pytest

from autos.Isometry import Isometry, discriminant_action, extend_by_identity, is_isometry, reflection
from autos.IsometryGroup import IsometryGroup, group_closure, leech_pair_check
from autos.Zoo import class_label, frame_shape, invariant_rank_census, translation_invariant_rank, zoo_entry
from construction.Catalog import named
from construction.Exceptional import first_word
from construction.Holy import holy_frame
from core.Errors import GroupCapError, InputError, NonIntegralError
from discform.FiniteQuadraticForm import discriminant_form
from discform.GlueMap import find_anti_isometry, glue_overlattice
from lattice.Lattice import Lattice

A2 = named("A2")
SWAP = [[0, 1], [1, 0]]


def test_isometry_basics():
    g = Isometry(A2, SWAP, "s")
    assert g.order() == 2
    assert (g * g).is_identity
    assert g.inverse() == g
    assert g([1, 0]) == [0, 1]
    assert is_isometry(A2, SWAP)
    assert not is_isometry(A2, [[1, 1], [0, 1]])
    with pytest.raises(InputError):
        Isometry(A2, [[1, 1], [0, 1]])


def test_reflections():
    r = reflection(A2, [1, 0])
    assert r.order() == 2
    assert r([1, 0]) == [-1, 0]
    with pytest.raises(InputError):
        reflection(named("U"), [1, 0])
    with pytest.raises(NonIntegralError):
        reflection(Lattice([[2, 1], [1, 4]]), [0, 1])


def test_group_closure_of_a2():
    G = group_closure(A2, [reflection(A2, [1, 0]), Isometry(A2, SWAP, "s")])
    assert G.order == 12
    assert G.invariant_lattice().rank == 0
    with pytest.raises(GroupCapError):
        group_closure(A2, G.generators, cap=5)


def test_invariant_and_coinvariant_lattices():
    G = IsometryGroup(A2, [Isometry(A2, SWAP, "s")])
    T, S = G.invariant_lattice(), G.coinvariant_lattice()
    assert T.rank == 1 and T.gram == [[2]]
    assert S.rank == 1 and S.gram == [[6]]
    assert G.torsion_index() == 2
    assert G.torsion_check()
    assert G.is_stable(T) and G.is_stable(S)
    restricted = G.restrict(S)
    assert restricted.generators[0].matrix == [[-1]]


def test_discriminant_action():
    assert discriminant_action(reflection(A2, [1, 0])).is_trivial
    assert not discriminant_action(Isometry(A2, SWAP, "s")).is_trivial


def test_extend_by_identity_to_e8():
    E6 = named("E6")
    glue = find_anti_isometry(discriminant_form(A2), discriminant_form(E6))
    glued = glue_overlattice(A2, E6, glue)
    g = extend_by_identity(reflection(A2, [1, 0]), glued)
    assert g.lattice.determinant == 1
    assert g.order() == 2
    assert IsometryGroup(g.lattice, [g]).invariant_lattice().rank == 7
    with pytest.raises(InputError):
        extend_by_identity(Isometry(A2, SWAP, "s"), glued)


def test_leech_pair_check_rejects_roots():
    E8 = named("E8(-1)")
    G = IsometryGroup(E8, [Isometry(E8, [[-int(i == j) for j in range(8)] for i in range(8)], "-1")])
    report = leech_pair_check(E8, G)
    assert report.negative_definite and not report.root_free
    assert not report.holds


def test_order_five_census():
    assert invariant_rank_census(holy_frame("N20")) == {0: 40, 4: 24, 8: 60}


def test_glue_translation_invariant_ranks():
    frame = holy_frame("N23")
    assert [translation_invariant_rank(frame, first_word("N23", w)) for w in (8, 12, 16, 24)] == [16, 12, 8, 0]
    frame = holy_frame("N22")
    assert [translation_invariant_rank(frame, first_word("N22", w)) for w in (6, 9, 12)] == [12, 6, 0]


def test_class_labels():
    assert class_label(5, 4) == "5C"
    assert class_label(3, 8) == "3D"
    assert class_label(2, 16) == "1^8 2^8"
    assert frame_shape(5, 4) == "1^-1 5^5"


def test_e8_cube_permutation():
    report = zoo_entry("E8^3/cycle").report()
    assert report["order"] == 3
    assert report["invariant_rank"] == 8 and report["coinvariant_rank"] == 16
    assert report["class"] == "3D"
    with pytest.raises(InputError):
        zoo_entry("E8^3/swap")


@pytest.mark.slow
def test_order_eleven_on_n22():
    report = zoo_entry("N22/rot11").report()
    assert report["coinvariant_rank"] == 20
    assert report["invariant_rank"] == 4
