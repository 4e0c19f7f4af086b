import pytest

from inversive_geometry.cycles import format_cycle
from inversive_geometry.errors import ParseError
from inversive_geometry.scene import (
    Scene,
    format_point,
    load_scene,
    parse_cycle,
    parse_point,
    parse_space,
    run_scene,
)

from tests.utils import cycle, point, write_scene

INVERSION = """\
# inversion in the unit circle of the line
field Q
space diag 1
cycle c1 = poly 1 0 -1
op invert c1 point 2
"""

PLANE = """\
space diag 1 1
cycle unit = a=1 b=0,0 c=-1
cycle axis = 0 | 0 1 | 0
point p = 3,4
op reflect unit p as image
op reflect unit image
op reflect axis unit
op classify unit
op center unit
op pairing unit axis
op zeros unit
op embed inf
op evaluate unit p
op conjugate unit p
op stereo unit
triangle t = 0,0 4,0 1,3
op ninepoint t
"""


def test_parse_space(field_fixture):
    space = parse_space("diag 1 1")
    assert str(space) == "Q diag 1 1"
    assert parse_space("Fp:7 diag 1 -3").field == field_fixture("Fp:7")
    assert parse_space("diag 2", field_fixture("Qsqrt:5")).field == field_fixture("Qsqrt:5")
    for text in ("", "diag", "Q 1 1", "Fp:9 diag 1"):
        with pytest.raises(ValueError):
            parse_space(text)


def test_parse_cycle_forms(space_fixture):
    plane = space_fixture()
    expected = cycle(plane, 1, (0, "1/2"), -1)
    assert parse_cycle(plane, "a=1 b=0,1/2 c=-1") == expected
    assert parse_cycle(plane, "1 | 0 1/2 | -1") == expected
    assert parse_cycle(plane, format_cycle(expected)) == expected
    line = space_fixture(diag=(1,))
    assert parse_cycle(line, "poly 1 0 -1") == cycle(line, 1, (0,), -1)
    for text in ("poly 1 0 -1", "a=1 b=0,0", "1 | 0 | 0 | 1", "a=1 b=0,0 c=1 d=2"):
        with pytest.raises(ValueError):
            parse_cycle(plane, text)


def test_parse_point(space_fixture):
    plane = space_fixture()
    assert parse_point(plane, "inf").is_infinity
    assert parse_point(plane, " 2,-1/3 ") == point(plane, 2, "-1/3")
    with pytest.raises(ValueError):
        parse_point(plane, "1,2,3")


def test_inversion_scene(tmp_path):
    scene = load_scene(write_scene(tmp_path, INVERSION))
    assert scene.outputs == ["invert c1 point 2 = 1/2"]
    assert scene.report.passed
    assert len(scene.report) == 1


def test_plane_scene(tmp_path):
    scene = load_scene(write_scene(tmp_path, PLANE))
    outputs = dict(line.split(" = ", 1) for line in scene.outputs)
    assert outputs["reflect unit p"] == "3/25,4/25"
    assert outputs["reflect unit image"] == "3,4"
    assert outputs["reflect axis unit"] == "a=1 b=0,0 c=-1"
    assert outputs["classify unit"] == "Circle(zero_size=False)"
    assert outputs["center unit"] == "center=0,0 size=1"
    assert outputs["pairing unit axis"] == "0"
    assert outputs["zeros unit"].startswith("Yes witness=")
    assert outputs["embed inf"] == "a=0 b=0,0 c=1"
    assert outputs["evaluate unit p"] == "24"
    assert outputs["conjugate unit p"] == "3/25,4/25 alpha=-1/24 beta=25/24"
    assert outputs["stereo unit"] == "(-2; 0,0; 0)"
    assert "center=3/2,1 size=5/4" in outputs["ninepoint t"]
    assert "image" in scene.points
    assert scene.report.exit_code() == 0


def test_domain_errors_fail_the_check(tmp_path):
    text = "space diag 1\ncycle z = poly 1 0 0\nop invert z point 1\ncycle c = poly 1 0 -1\nop invert c point 2\n"
    scene = load_scene(write_scene(tmp_path, text))
    assert scene.outputs[0].startswith("invert z point 1 failed: ZeroSizeCircle")
    assert scene.outputs[1] == "invert c point 2 = 1/2"
    (failure,) = scene.report.failures
    assert failure.name == "0003 invert z point 1"
    assert scene.report.exit_code() == 1


def test_finite_field_zero_sets(tmp_path):
    text = "space Fp:5 diag 1 3\ncycle l = a=0 b=1,0 c=0\nop zeros l\n"
    scene = load_scene(write_scene(tmp_path, text))
    assert scene.outputs == ["zeros l = inf 0,0 0,1 0,2 0,3 0,4"]


def test_pencil_op(tmp_path):
    text = "space diag 1\ncycle p = poly 1 0 1\ncycle q = poly 0 1 0\nop pencil p q\n"
    scene = load_scene(write_scene(tmp_path, text))
    assert scene.outputs == ["pencil p q = RegularArtinian zeros: 1 -1"]


@pytest.mark.parametrize(
    "text,line",
    [
        ("field Q\nbogus\n", 2),
        ("cycle c = poly 1 0 1\n", 1),
        ("space diag 1\nop invert missing point 2\n", 2),
        ("space diag 1\nop frobnicate\n", 2),
        ("space diag 1 1\npoint p = 1,x\n", 2),
        ("space diag 1 1\ncycle c\n", 2),
    ],
)
def test_parse_errors_carry_the_line(tmp_path, text, line):
    with pytest.raises(ParseError) as info:
        load_scene(write_scene(tmp_path, text))
    assert info.value.line == line
    assert str(info.value).startswith("line {}:".format(line))


def test_empty_scene(tmp_path):
    report = run_scene(write_scene(tmp_path, "# nothing here\n\n"))
    assert len(report) == 0
    assert report.exit_code() == 0
    assert report.to_jsonl() == ""


def test_run_line_directly():
    scene = Scene()
    scene.run_line("space diag 1", 1)
    scene.run_line("cycle c = poly 1 0 -1  # the unit circle", 2)
    scene.run_line("op reflect c inf", 3)
    assert scene.outputs == ["reflect c inf = 0"]


def test_compose_op():
    scene = Scene()
    for number, line in enumerate(
        ["space diag 1 1", "cycle axis = a=0 b=1,0 c=0", "cycle unit = a=1 b=0,0 c=-1", "op compose axis unit"], 1
    ):
        scene.run_line(line, number)
    assert scene.outputs == ["compose axis unit = 0 0 0 1; 0 -1 0 0; 0 0 1 0; 1 0 0 0"]
    with pytest.raises(ParseError):
        scene.run_line("op compose", 5)


@pytest.mark.parametrize("descriptor,diag", [("Q", (1, 1)), ("Fp:7", (1, 3)), ("Qsqrt:2", (1, 1))])
def test_sampled_objects_survive_formatting(sampler_fixture, descriptor, diag):
    s = sampler_fixture(descriptor, diag, seed=3)
    space = s.space
    for _ in range(50):
        p = s.cycle()
        assert parse_cycle(space, format_cycle(p)) == p
        v = s.vpoint()
        assert parse_point(space, format_point(v)) == v
