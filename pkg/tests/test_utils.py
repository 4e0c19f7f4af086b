from inversive_geometry.cycles import classify, CycleKind, pairing
from inversive_geometry.sampling import norm_form_space, proven_spaces, standard_space

from tests.utils import cycle, point, poly, write_scene


def test_helpers(space_fixture, tmp_path):
    plane = space_fixture()
    assert str(cycle(plane, 1, (0, 0), -1)) == "a=1 b=0,0 c=-1"
    assert str(point(plane, 2, 3)) == "2,3"
    line = space_fixture(diag=(1,))
    assert str(poly(line, 1, 0, -1)) == "a=1 b=0 c=-1"
    path = write_scene(tmp_path, "field Q\n")
    assert path.read_text() == "field Q\n"


def test_norm_form_space(field_fixture):
    f7 = field_fixture("Fp:7")
    assert norm_form_space(f7).diag == (f7(1), f7(4))
    assert norm_form_space(field_fixture("Q")) == standard_space(field_fixture("Q"), 2)


def test_proven_spaces(field_fixture):
    q = field_fixture("Q")
    assert [s.dim for s in proven_spaces(q)] == [1, 2, 3]
    f7 = field_fixture("Fp:7")
    assert [s.diag for s in proven_spaces(f7)] == [(f7(1),), (f7(1), f7(1)), (f7(1), f7(4))]
    # -1 is a square mod 5, so x^2 + y^2 is isotropic there
    f5 = field_fixture("Fp:5")
    assert [s.diag for s in proven_spaces(f5)] == [(f5(1),), (f5(1), f5(3))]


def test_sampler_is_reproducible(sampler_fixture):
    first = sampler_fixture(seed=3)
    again = sampler_fixture(seed=3)
    other = sampler_fixture(seed=4)
    cycles = [first.cycle() for _ in range(10)]
    assert cycles == [again.cycle() for _ in range(10)]
    assert cycles != [other.cycle() for _ in range(10)]


def test_sampler_kinds(sampler_fixture):
    s = sampler_fixture("Fp:7")
    for _ in range(20):
        assert not classify(s.circle(nonzero_size=True)).zero_size
        assert classify(s.line()).kind is CycleKind.LINE
        p = s.non_isotropic()
        assert not pairing(p, p).is_zero
        assert s.quadric(proper=True).is_proper
        assert not s.lorentz_vector().is_zero
    u, v, w = s.distinct_vpoints(3)
    assert len({u, v, w}) == 3
