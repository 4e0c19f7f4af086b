import pytest

from inversive_geometry.errors import DegenerateInput, DimensionMismatch, NoAnisotropicForm, SpaceMismatch
from inversive_geometry.quad_space import (
    AnisotropyStatus,
    bounded_elements,
    dot,
    norm_h,
    verify_anisotropic,
)


def test_dot_and_norm(space_fixture):
    space = space_fixture(diag=(1, 2))
    x, y = space.vector([1, 1]), space.vector([3, -1])
    assert dot(space, x, y) == 1
    assert norm_h(space, x) == 3
    assert space.h(y) == 11
    assert str(x + y) == "4,0"
    assert str((x - y) * 2) == "-4,4"


@pytest.mark.parametrize(
    "descriptor,diag", [("Q", (1, 1, 1)), ("Q", (2, -3)), ("Fp:7", (1, 4)), ("Qsqrt:2", (1, 3))]
)
def test_dot_is_symmetric_bilinear(sampler_fixture, descriptor, diag):
    s = sampler_fixture(descriptor, diag, seed=9)
    space = s.space
    for _ in range(30):
        x, y, z = s.vector(), s.vector(), s.vector()
        alpha = s.element()
        assert dot(space, x, y) == dot(space, y, x)
        assert dot(space, x * alpha + y, z) == alpha * dot(space, x, z) + dot(space, y, z)
        assert dot(space, z, x * alpha + y) == alpha * dot(space, z, x) + dot(space, z, y)
        # polarization
        assert 2 * dot(space, x, y) == norm_h(space, x + y) - norm_h(space, x) - norm_h(space, y)


def test_space_errors(space_fixture, field_fixture):
    with pytest.raises(DegenerateInput):
        space_fixture(diag=())
    with pytest.raises(DegenerateInput):
        space_fixture(diag=(1, 0))
    with pytest.raises(NoAnisotropicForm):
        space_fixture("Fp:7", diag=(1, 1, 1))
    plane = space_fixture()
    with pytest.raises(DimensionMismatch):
        plane.vector([1])
    with pytest.raises(SpaceMismatch):
        dot(plane, plane.vector([1, 0]), space_fixture(diag=(1, 2)).vector([1, 0]))


def test_finite_binary_refuted_with_first_witness(space_fixture):
    # -1 = 4 is a square mod 5: 1 + 2^2 = 0
    verdict = verify_anisotropic(space_fixture("Fp:5"))
    assert verdict.status is AnisotropyStatus.REFUTED
    assert str(verdict.witness) == "1,2"


def test_binary_criterion(space_fixture):
    assert verify_anisotropic(space_fixture("Fp:7")).status is AnisotropyStatus.PROVEN
    assert verify_anisotropic(space_fixture("Fp:5", diag=(1, 3))).status is AnisotropyStatus.PROVEN
    refuted = verify_anisotropic(space_fixture("Q", diag=(1, -4)))
    assert refuted.status is AnisotropyStatus.REFUTED
    space = refuted.witness.space
    assert norm_h(space, refuted.witness).is_zero and not refuted.witness.is_zero
    assert verify_anisotropic(space_fixture("Q", diag=(1, -2))).status is AnisotropyStatus.PROVEN
    assert verify_anisotropic(space_fixture("Qsqrt:2", diag=(1, -2))).status is AnisotropyStatus.REFUTED


def test_higher_dimension_over_rationals(space_fixture):
    assert verify_anisotropic(space_fixture(diag=(1, 1, 1))).status is AnisotropyStatus.PROVEN
    assert verify_anisotropic(space_fixture(diag=(-1, -2, -3))).status is AnisotropyStatus.PROVEN
    refuted = verify_anisotropic(space_fixture(diag=(1, 1, -2)))
    assert refuted.status is AnisotropyStatus.REFUTED
    assert norm_h(refuted.witness.space, refuted.witness).is_zero
    # x^2 + y^2 - 3 z^2 has no rational zero; it is only assumed anisotropic
    space = space_fixture(diag=(1, 1, -3))
    assert verify_anisotropic(space, budget=3).status is AnisotropyStatus.UNKNOWN
    assert space.status is AnisotropyStatus.ASSUMED_BY_USER


def test_dimension_one_is_always_proven(space_fixture):
    for descriptor in ("Q", "Fp:5", "Qsqrt:3"):
        assert verify_anisotropic(space_fixture(descriptor, diag=(-3,))).status is AnisotropyStatus.PROVEN


def test_bounded_elements(field_fixture):
    q = field_fixture("Q")
    assert [str(x) for x in bounded_elements(q, 2)] == ["0", "1", "-1", "2", "-2", "1/2", "-1/2"]
    assert len(bounded_elements(field_fixture("Fp:7"))) == 7


def test_vectors_are_lexicographic(space_fixture):
    vectors = list(space_fixture("Fp:3").vectors())
    assert len(vectors) == 9
    assert [str(v) for v in vectors[:4]] == ["0,0", "0,1", "0,2", "1,0"]
