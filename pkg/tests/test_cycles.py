import pytest

from inversive_geometry.cycles import (
    Cycle,
    CycleKind,
    Finite,
    Infinity,
    ZeroSetStatus,
    all_cycles,
    all_vpoints,
    center_and_size,
    classify,
    evaluate,
    gram_matrix,
    on_zero_set,
    pairing,
    point_embed,
    point_extract,
    proj_equiv,
    zero_set,
    zero_set_nonempty,
)
from inversive_geometry.errors import NotACircle, NotIsotropic, SpaceMismatch, ZeroFunction
from inversive_geometry import linalg
from inversive_geometry.sampling import norm_form_space

from tests.utils import cycle, point, poly


@pytest.fixture
def line(space_fixture):
    return space_fixture(diag=(1,))


def test_pairing_examples(line):
    assert pairing(poly(line, 1, 0, 0), Cycle.constant(line)) == -2
    zero_circle = point_embed(line, point(line, 3))
    assert pairing(zero_circle, zero_circle) == 0
    assert pairing(poly(line, 1, 0, -1), poly(line, 1, 0, -1)) == 4


def test_gram_matrix_is_nondegenerate(space_fixture):
    space = space_fixture(diag=(1, 2))
    gram = gram_matrix(space)
    assert [[str(x) for x in row] for row in gram] == [
        ["0", "0", "0", "-2"],
        ["0", "1", "0", "0"],
        ["0", "0", "2", "0"],
        ["-2", "0", "0", "0"],
    ]
    assert linalg.determinant(space.field, gram) == -8


def test_classify(line):
    assert classify(Cycle.constant(line, 5)).kind is CycleKind.CONSTANT
    assert classify(poly(line, 0, 1, -1)).kind is CycleKind.LINE
    circle = classify(poly(line, 1, -2, 1))
    assert circle.kind is CycleKind.CIRCLE and circle.zero_size
    assert str(circle) == "Circle(zero_size=True)"


def test_zero_function_is_rejected(line):
    with pytest.raises(ZeroFunction):
        poly(line, 0, 0, 0)
    with pytest.raises(ZeroFunction):
        poly(line, 1, 2, 3) * 0


def test_center_and_size(line, space_fixture):
    result = center_and_size(poly(line, 1, -2, 0))
    assert str(result.center) == "1" and result.size == 1
    result = center_and_size(poly(line, 2, -4, 1))
    assert str(result.center) == "1" and str(result.size) == "1/2"
    plane = space_fixture()
    w = point(plane, 2, -1)
    result = center_and_size(point_embed(plane, w))
    assert Finite(result.center) == w and result.size == 0
    with pytest.raises(NotACircle):
        center_and_size(poly(line, 0, 1, 1))


def test_point_embed_and_extract(line):
    assert point_embed(line, Infinity()) == Cycle.constant(line)
    assert point_embed(line, point(line, 0)) == poly(line, 1, 0, 0)
    assert point_embed(line, point(line, 2)) == poly(line, 1, -4, 4)
    assert point_extract(poly(line, 3, -6, 3)) == point(line, 1)
    assert point_extract(Cycle.constant(line, -2)) == Infinity()
    with pytest.raises(NotIsotropic):
        point_extract(poly(line, 1, 0, 1))


def test_evaluate_and_zero_set_membership(line):
    p = poly(line, 1, 0, -1)
    assert evaluate(p, line.vector([2])) == 3
    result = center_and_size(p)
    assert evaluate(p, result.center) == -p.a * result.size
    assert on_zero_set(poly(line, 0, 1, -1), point(line, 1))
    assert on_zero_set(poly(line, 0, 1, -1), Infinity())
    assert not on_zero_set(p, Infinity())
    assert on_zero_set(p, point(line, -1))


def test_zero_set_nonempty_over_rationals(line, space_fixture):
    assert zero_set_nonempty(poly(line, 1, 0, 1)).status is ZeroSetStatus.NO
    verdict = zero_set_nonempty(poly(line, 1, 0, -4))
    assert verdict.status is ZeroSetStatus.YES and verdict.witness == point(line, 2)
    plane = space_fixture()
    assert zero_set_nonempty(cycle(plane, 1, (0, 0), 1)).status is ZeroSetStatus.NO
    verdict = zero_set_nonempty(cycle(plane, 1, (-2, 0), -4))
    assert verdict.status is ZeroSetStatus.YES
    assert on_zero_set(cycle(plane, 1, (-2, 0), -4), verdict.witness)


def test_zero_set_nonempty_over_f7(space_fixture):
    plane = space_fixture("Fp:7")
    for s in range(1, 7):
        p = cycle(plane, 1, (0, 0), -s)
        verdict = zero_set_nonempty(p)
        assert verdict.status is ZeroSetStatus.YES
        assert on_zero_set(p, verdict.witness)


def test_zero_set_counts_over_f7(field_fixture):
    field = field_fixture("Fp:7")
    space = norm_form_space(field)
    assert len(all_vpoints(space)) == 50
    assert len(zero_set(cycle(space, 0, (1, 2), 3))) == 8
    assert Infinity() in zero_set(cycle(space, 0, (1, 0), 0))
    unit = zero_set(cycle(space, 1, (0, 0), -1))
    assert len(unit) == 8 and Infinity() not in unit
    assert zero_set(point_embed(space, point(space, 1, 1))) == [point(space, 1, 1)]


def test_zero_set_needs_finite_field(line):
    with pytest.raises(ValueError):
        zero_set(poly(line, 1, 0, -1))


def test_all_cycles(space_fixture):
    plane = space_fixture("Fp:7", (1, 1))
    cycles = all_cycles(plane)
    assert len(cycles) == 400
    assert all(p.normalized() == p for p in cycles)
    kinds = [classify(p) for p in cycles]
    assert sum(k.kind is CycleKind.CONSTANT for k in kinds) == 1
    assert sum(k.kind is CycleKind.LINE for k in kinds) == 56
    assert sum(k.zero_size for k in kinds) == 49
    assert len(all_cycles(space_fixture("Fp:3", (1,)))) == 13
    with pytest.raises(ValueError):
        all_cycles(space_fixture())


def test_proj_equiv(line, space_fixture):
    assert proj_equiv(poly(line, 1, 0, -1), poly(line, 3, 0, -3))
    assert not proj_equiv(poly(line, 1, 0, -1), poly(line, 1, 0, 1))
    assert proj_equiv(Cycle.constant(line, 1), Cycle.constant(line, -5))
    with pytest.raises(SpaceMismatch):
        proj_equiv(poly(line, 1, 0, -1), cycle(space_fixture(), 1, (0, 0), -1))


def test_cycle_arithmetic_and_format(space_fixture):
    plane = space_fixture()
    p = cycle(plane, 1, (0, 0), -1)
    q = cycle(plane, 0, (1, 1), 2)
    assert str(p + q) == "a=1 b=1,1 c=1"
    assert str(-q) == "a=0 b=-1,-1 c=-2"
    assert (p * 2).normalized() == p
    assert Cycle.from_coords(plane, p.coords) == p
