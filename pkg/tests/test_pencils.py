import pytest

from inversive_geometry.cycles import Cycle, Infinity, on_zero_set, pairing, point_embed
from inversive_geometry.errors import DependentCycles, NoRationalMembers, SpaceMismatch
from inversive_geometry.pencils import (
    Pencil,
    PencilClass,
    classify_pencil,
    common_zeros,
    conjugate,
    gram2,
    isotropic_members,
    orthocomplement,
    radical,
)
from inversive_geometry.transforms import reflect_point

from tests.utils import cycle, point, poly


@pytest.fixture
def line(space_fixture):
    return space_fixture(diag=(1,))


def _gram(pencil):
    return [[str(x) for x in row] for row in gram2(pencil)]


def test_gram2(line):
    assert _gram(Pencil(Cycle.constant(line), poly(line, 1, 0, 0))) == [["0", "-2"], ["-2", "0"]]
    assert _gram(Pencil(poly(line, 1, 0, 0), poly(line, 0, 1, 0))) == [["0", "0"], ["0", "1"]]
    assert _gram(Pencil(poly(line, 1, 0, 1), poly(line, 1, 0, -1))) == [["-4", "0"], ["0", "4"]]


def test_pencil_construction(line, space_fixture):
    p = poly(line, 1, 0, -1)
    with pytest.raises(DependentCycles):
        Pencil(p, p * 3)
    with pytest.raises(SpaceMismatch):
        Pencil(p, cycle(space_fixture(), 1, (0, 0), -1))
    pencil = Pencil(p, poly(line, 0, 1, 0))
    assert pencil.member(2, -1) == poly(line, 2, -1, -2)


def test_classify_pencil(line):
    assert classify_pencil(Pencil(Cycle.constant(line), poly(line, 1, 0, 0))) is PencilClass.REGULAR_ARTINIAN
    assert classify_pencil(Pencil(poly(line, 1, 0, 0), poly(line, 0, 1, 0))) is PencilClass.SINGULAR
    anisotropic = Pencil(poly(line, 1, 0, 1), poly(line, "1/2", 1, "-1/2"))
    assert classify_pencil(anisotropic) is PencilClass.REGULAR_ANISOTROPIC
    assert PencilClass.REGULAR_ANISOTROPIC.value == "RegularAnisotropic"


def test_common_zeros_examples(line):
    assert common_zeros(Pencil(poly(line, 1, 0, 0), poly(line, 0, 1, 0))) == [point(line, 0)]
    assert common_zeros(Pencil(poly(line, 1, 0, 1), poly(line, 0, 1, 0))) == [point(line, 1), point(line, -1)]
    assert common_zeros(Pencil(Cycle.constant(line), poly(line, 1, 0, 0))) == [Infinity(), point(line, 0)]
    assert common_zeros(Pencil(poly(line, 1, 0, 1), poly(line, 1, 0, -1))) == [Infinity(), point(line, 0)]
    assert common_zeros(Pencil(poly(line, 1, 0, 1), poly(line, "1/2", 1, "-1/2"))) == []


def test_radical_and_isotropic_members(line):
    assert radical(Pencil(poly(line, 1, 0, 0), poly(line, 0, 1, 0))) == poly(line, 1, 0, 0)
    with pytest.raises(ValueError):
        radical(Pencil(poly(line, 1, 0, 1), poly(line, 0, 1, 0)))
    members = isotropic_members(Pencil(poly(line, 1, 0, 1), poly(line, 0, 1, 0)))
    assert members == [poly(line, 1, -2, 1), poly(line, 1, 2, 1)]
    assert all(pairing(m, m).is_zero for m in members)


def test_isotropic_members_need_an_artinian_pencil(line):
    pencil = Pencil(poly(line, 1, 0, -1), poly(line, 0, 1, 0))
    assert classify_pencil(pencil) is PencilClass.REGULAR_ANISOTROPIC
    assert common_zeros(pencil) == []
    with pytest.raises(NoRationalMembers):
        isotropic_members(pencil)
    pencil = Pencil(poly(line, 1, 0, -2), Cycle.constant(line))
    assert classify_pencil(pencil) is PencilClass.REGULAR_ARTINIAN
    assert common_zeros(pencil) == [point(line, 0), Infinity()]


def test_orthocomplement(line):
    complement = orthocomplement(line, [Cycle.constant(line)])
    assert len(complement) == 2
    assert all(r.a.is_zero for r in complement)
    assert len(orthocomplement(line, [])) == 3
    p = poly(line, 1, 0, -1)
    complement = orthocomplement(line, [p])
    assert all(pairing(r, p).is_zero for r in complement)
    assert all(r.normalized() != p.normalized() for r in complement)


@pytest.mark.parametrize("descriptor,diag", [("Q", (1,)), ("Q", (-2,)), ("Fp:7", (3,)), ("Fp:11", (1,))])
def test_complement_of_a_pencil_in_dimension_one(sampler_fixture, descriptor, diag):
    sampler = sampler_fixture(descriptor, diag)
    field = sampler.space.field
    checked = 0
    while checked < 20:
        p, q = sampler.cycle(), sampler.cycle()
        try:
            pencil = Pencil(p, q)
        except DependentCycles:
            continue
        (r,) = orthocomplement(sampler.space, [p, q])
        kind = classify_pencil(pencil)
        norm = pairing(r, r)
        assert norm.is_zero == (kind is PencilClass.SINGULAR)
        if not norm.is_zero:
            artinian = field.is_square(sampler.space.diag[0] * norm)
            assert artinian == (kind is PencilClass.REGULAR_ARTINIAN)
        checked += 1


def test_conjugate_examples(line):
    unit = poly(line, 1, 0, -1)
    result = conjugate(unit, point(line, 2))
    assert result.point == point(line, "1/2")
    assert [str(x) for x in result.certificate] == ["-1/3", "4/3"]
    result = conjugate(unit, point(line, 1))
    assert result.point == point(line, 1) and result.certificate is None
    result = conjugate(unit, Infinity())
    assert result.point == point(line, 0)
    assert [str(x) for x in result.certificate] == ["-1", "1"]


@pytest.mark.parametrize("descriptor,diag", [("Q", (1, 1)), ("Fp:7", (1, 4)), ("Qsqrt:3", (1,))])
def test_conjugate_certificates(sampler_fixture, descriptor, diag):
    sampler = sampler_fixture(descriptor, diag, seed=5)
    space = sampler.space
    for _ in range(20):
        p = sampler.non_isotropic()
        m = sampler.vpoint()
        result = conjugate(p, m)
        if result.certificate is None:
            assert on_zero_set(p, m)
            continue
        alpha, beta = result.certificate
        assert point_embed(space, m) * alpha + point_embed(space, result.point) * beta == p


def test_span_members_swap_the_pair(sampler_fixture):
    sampler = sampler_fixture(seed=7)
    space = sampler.space
    for _ in range(20):
        m, m2 = sampler.distinct_vpoints(2)
        q, q2 = point_embed(space, m), point_embed(space, m2)
        p = q * sampler.nonzero() + q2 * sampler.nonzero()
        assert reflect_point(p, m) == m2


def test_common_zeros_exhaustive_over_f7(sampler_fixture):
    sampler = sampler_fixture("Fp:7", (1, 4), seed=2)
    for _ in range(10):
        p, q = sampler.circle(), sampler.line()
        pencil = Pencil(p, q)
        zeros = common_zeros(pencil)
        kind = classify_pencil(pencil)
        if kind is PencilClass.REGULAR_ARTINIAN:
            assert len(zeros) == 2
        elif kind is PencilClass.SINGULAR:
            assert len(zeros) == 1
        else:
            assert all(on_zero_set(p, v) and on_zero_set(q, v) for v in zeros)


def test_artinian_iff_the_complement_has_square_norm(line):
    anisotropic = Pencil(poly(line, 1, 0, -1), poly(line, 0, 1, 0))
    (r,) = orthocomplement(line, [anisotropic.p, anisotropic.q])
    assert classify_pencil(anisotropic) is PencilClass.REGULAR_ANISOTROPIC
    assert str(pairing(r, r) / (r.a * r.a)) == "-4"

    artinian = Pencil(poly(line, 1, 0, -2), poly(line, 0, 0, 1))
    (r,) = orthocomplement(line, [artinian.p, artinian.q])
    assert classify_pencil(artinian) is PencilClass.REGULAR_ARTINIAN
    assert line.field.is_square(pairing(r, r))
