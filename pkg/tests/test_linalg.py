import pytest

from inversive_geometry import linalg
from inversive_geometry.field_core import parse_field

Q = parse_field("Q")
F7 = parse_field("Fp:7")


def as_lists(vectors):
    return [[str(x) for x in v] for v in vectors]


def test_rank():
    assert linalg.rank(Q, [[1, 2], [2, 4]]) == 1
    assert linalg.rank(Q, [[1, 2], [2, 5]]) == 2
    assert linalg.rank(F7, [[1, 2], [3, 6]]) == 1
    assert linalg.rank(Q, [[0, 0, 0]]) == 0


def test_rref_pivots():
    reduced, pivots = linalg.rref(Q, [[0, 2, 4], [1, 1, 1]])
    assert pivots == [0, 1]
    assert as_lists(reduced) == [["1", "0", "-1"], ["0", "1", "2"]]


def test_nullspace_in_free_column_order():
    basis = linalg.nullspace(Q, [[1, 2, 3]])
    assert as_lists(basis) == [["-2", "1", "0"], ["-3", "0", "1"]]
    assert as_lists(linalg.nullspace(Q, [], n_cols=2)) == [["1", "0"], ["0", "1"]]
    assert linalg.nullspace(Q, [[1, 0], [0, 1]]) == []


def test_determinant():
    assert linalg.determinant(Q, [[2, 1], [1, 1]]) == 1
    assert linalg.determinant(Q, [[0, 1], [1, 0]]) == -1
    assert linalg.determinant(F7, [[3, 0], [0, 5]]) == 1
    assert linalg.determinant(Q, [[1, 2], [2, 4]]) == 0
    with pytest.raises(ValueError):
        linalg.determinant(Q, [[1, 2, 3]])


def test_solve():
    x = linalg.solve(Q, [[1, 1], [1, -1]], [3, 1])
    assert [str(v) for v in x] == ["2", "1"]
    assert linalg.solve(Q, [[1, 1], [1, 1]], [1, 2]) is None


def test_inverse():
    inverse = linalg.inverse(Q, [[2, 1], [1, 1]])
    assert linalg.matrices_equal(inverse, linalg.to_matrix(Q, [[1, -1], [-1, 2]]))
    with pytest.raises(ZeroDivisionError):
        linalg.inverse(Q, [[1, 2], [2, 4]])


def test_ragged_rows():
    with pytest.raises(ValueError):
        linalg.to_matrix(Q, [[1, 2], [3]])
