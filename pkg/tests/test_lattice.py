import pytest

from core.Errors import DegenerateLatticeError, DependentVectorsError, InputError, NonIntegralError
from lattice.EuclideanModel import EuclideanModel
from lattice.Lattice import Lattice, LatticeVector, scaled_name
from linalg.MatrixTools import mat_mul, transpose

A2 = Lattice([[2, -1], [-1, 2]], "A2")
U = Lattice([[0, 1], [1, 0]], "U")
Z3 = Lattice([[1, 0, 0], [0, 1, 0], [0, 0, 1]], "Z3")


def test_basic_invariants():
    assert A2.determinant == 3
    assert A2.signature == (2, 0)
    assert A2.is_even and A2.is_positive_definite
    assert U.signature == (1, 1)
    assert not U.is_positive_definite and not U.is_negative_definite
    assert not Z3.is_even


@pytest.mark.parametrize("gram", [[[1, 2], [3, 1]], [[1, 0]], [[1.5]], "not a matrix"])
def test_malformed_gram_is_rejected(gram):
    with pytest.raises(InputError):
        Lattice(gram)


def test_degenerate_gram():
    with pytest.raises(DegenerateLatticeError):
        Lattice([[2, 2], [2, 2]])
    L = Lattice([[2, 2], [2, 2]], degenerate=True)
    assert L.degenerate


def test_names_of_constructions():
    assert A2.rescale(-1).name == "A2(-1)"
    assert A2.rescale(3).gram == [[6, -3], [-3, 6]]
    assert A2.direct_sum(U).name == "A2⊕U"
    assert A2.power(3).rank == 6 and A2.power(3).determinant == 27
    assert scaled_name("E8(-1)", 2) == "E8(-2)"
    assert scaled_name("E8", -2) == "E8(-2)"
    assert scaled_name("E8(-1)", -1) == "E8"
    with pytest.raises(InputError):
        A2.rescale(0)


def test_sublattice_requires_independent_vectors():
    with pytest.raises(DependentVectorsError) as info:
        Z3.sublattice([[1, 0, 0], [2, 0, 0]])
    assert info.value.dependency is not None
    S = Z3.span([[1, 0, 0], [2, 0, 0], [0, 2, 0]])
    assert S.rank == 2


def test_saturation_and_primitivity():
    S = Z3.sublattice([[2, 0, 0], [0, 1, 1]])
    assert not S.is_primitive()
    sat = S.saturation()
    assert sat.contains([1, 0, 0])
    assert sat.saturation().index_in(sat) == 1
    assert S.index_in(sat) == 2


def test_orthogonal_complement():
    S = Z3.sublattice([[1, 1, 0]])
    C = S.orthogonal_complement()
    assert C.rank == 2
    assert C.contains([1, -1, 0]) and C.contains([0, 0, 1])
    assert not C.contains([1, 0, 0])
    double = C.orthogonal_complement()
    assert double.contains([1, 1, 0]) and double.rank == 1


def test_divisibility():
    assert U.divisibility([1, 0]) == 1
    assert A2.rescale(2).divisibility([1, 0]) == 2
    assert U.divisibility([2, 4]) == 2
    with pytest.raises(InputError):
        U.divisibility([0, 0])


def test_coordinates_through_ambients():
    S = Z3.sublattice([[1, 1, 0], [0, 0, 2]], "S")
    assert S.to_ambient([1, 1]) == [1, 1, 2]
    assert S.coordinates_of([2, 2, 4]) == [2, 2]
    assert S.coordinates_of([1, 0, 0]) is None
    T = S.sublattice([[1, 0]], "T")
    assert T.root_coords([3]) == [3, 3, 0]


def test_records():
    S = Z3.sublattice([[1, 1, 0]], "S")
    record = S.to_record()
    assert record["coords"] == [[1, 1, 0]]
    assert record["ambient"]["gram"] == Z3.gram
    with pytest.raises(InputError):
        Lattice.from_record({"name": "broken"})
    with pytest.raises(InputError):
        Lattice.from_record({"gram": [[3]], "ambient": Z3.to_record(), "coords": [[1, 1, 0]]})


def test_lattice_vector():
    v = LatticeVector(U, [1, 1])
    assert v.norm == 2
    assert v.divisibility == 1 and v.is_primitive
    assert (-v).coords == (-1, -1)
    assert v.pairing([1, 0]) == 1
    with pytest.raises(InputError):
        LatticeVector(U, [1, 2, 3])


def d4_model():
    gens = []
    for i in range(4):
        for j in range(i + 1, 4):
            for s in (1, -1):
                v = [0] * 4
                v[i], v[j] = 1, s
                gens.append(v)
    return EuclideanModel.from_generators(gens, name="D4")


def test_euclidean_model():
    model = d4_model()
    L = model.to_lattice()
    assert model.rank == 4
    assert L.determinant == 4
    assert L.is_even
    assert model.contains([1, 1, 0, 0]) and not model.contains([1, 0, 0, 0])
    assert model.vector(model.coordinates([2, 0, 0, 0])) == [2, 0, 0, 0]
    with pytest.raises(InputError):
        model.coordinates([1, 0, 0, 0])


def test_permutation_matrix_is_an_isometry():
    model = d4_model()
    G = model.gram()
    P = model.permutation_matrix([1, 0, 2, 3])
    assert mat_mul(mat_mul(transpose(P), G), P) == G


def test_non_integral_scale():
    model = EuclideanModel([[1, 0], [0, 1]], scale=2)
    with pytest.raises(NonIntegralError):
        model.gram()
