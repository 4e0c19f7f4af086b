import json
import logging

from click.testing import CliRunner
import pytest

from inversive_geometry.cli import main

from tests.utils import write_scene

UNIT_PLANE = """\
space diag 1 1
cycle unit = a=1 b=0,0 c=-1
cycle axis = a=0 b=0,1 c=0
point p = 3,4
op reflect unit p as image
triangle t = 0,0 4,0 1,3
op ninepoint t
"""


@pytest.fixture
def invoke():
    runner = CliRunner()

    def factory(*args):
        return runner.invoke(main, [str(a) for a in args])

    return factory


def test_help(invoke):
    result = invoke("--help")
    assert result.exit_code == 0
    for verb in ("scene", "verify", "reflect", "invert", "compose", "pencil", "conjugate", "stereo", "projline", "ninepoint", "render"):
        assert verb in result.output


def test_scene(invoke, tmp_path):
    path = write_scene(tmp_path, "space diag 1\ncycle c1 = poly 1 0 -1\nop invert c1 point 2\n")
    result = invoke("scene", path)
    assert result.exit_code == 0
    assert result.output == "invert c1 point 2 = 1/2\n"


def test_scene_exit_codes(invoke, tmp_path):
    failing = write_scene(tmp_path, "space diag 1\ncycle z = poly 1 0 0\nop invert z point 1\n", "failing.txt")
    assert invoke("scene", failing).exit_code == 1
    broken = write_scene(tmp_path, "space diag 1\nop invert\n", "broken.txt")
    result = invoke("scene", broken)
    assert result.exit_code == 2
    assert "parse error: line 2" in result.output


def test_verify(invoke, tmp_path):
    out = tmp_path / "report.jsonl"
    result = invoke("verify", "stereo", "--field", "Fp:5", "--count", "3", "-o", out)
    assert result.exit_code == 0
    assert result.output.splitlines()[-1].endswith("0 failed")
    records = [json.loads(line) for line in out.read_text().splitlines()]
    assert records and all(r["passed"] for r in records)


def test_verify_logs_the_output_file(invoke, tmp_path, caplog):
    out = tmp_path / "report.jsonl"
    with caplog.at_level(logging.INFO, logger="inversive_geometry"):
        assert invoke("verify", "field", "--count", "2", "-o", out).exit_code == 0
    assert "saving to {}".format(out) in caplog.messages


def test_verify_plot(invoke, tmp_path):
    plot = tmp_path / "report.png"
    result = invoke("verify", "field", "--count", "3", "--plot", plot)
    assert result.exit_code == 0
    assert plot.exists()


def test_verify_usage_errors(invoke):
    assert invoke("verify", "nonsense").exit_code == 2
    assert invoke("verify", "field", "--field", "Fp:9").exit_code == 2


def test_reflect(invoke):
    assert invoke("reflect", "--mirror", "a=1 b=0,0 c=-1", "--point", "3,4").output == "3/25,4/25\n"
    result = invoke("reflect", "--mirror", "a=0 b=0,1 c=0", "--cycle", "a=1 b=0,-2 c=0")
    assert result.output == "a=1 b=0,2 c=0\n"
    assert invoke("reflect", "--mirror", "a=1 b=0,0 c=-1").exit_code == 2
    assert invoke("reflect", "--mirror", "a=1 b=0,0 c=0", "--point", "1,1").exit_code == 1
    assert invoke("reflect", "--mirror", "a=1 b=0 c=-1", "--point", "1,1").exit_code == 2


def test_invert(invoke):
    result = invoke("invert", "--space", "diag 1", "--mirror", "poly 1 0 -1", "--point", "2")
    assert result.output == "1/2\n"
    result = invoke("invert", "--field", "Fp:7", "--mirror", "a=1 b=0,0 c=-1", "--point", "2,0")
    assert result.output == "4,0\n"
    result = invoke("invert", "--space", "diag 1", "--mirror", "poly 1 0 0", "--point", "2")
    assert result.exit_code == 1
    assert "ZeroSizeCircle" in result.output


def test_compose(invoke):
    assert invoke("compose", "a=0 b=1,0 c=0").output == "1 0 0 0\n0 -1 0 0\n0 0 1 0\n0 0 0 1\n"
    result = invoke("compose", "a=0 b=1,0 c=0", "a=1 b=0,0 c=-1")
    assert result.exit_code == 0
    assert result.output == "0 0 0 1\n0 -1 0 0\n0 0 1 0\n1 0 0 0\n"
    result = invoke("compose", "a=1 b=0,0 c=0")
    assert result.exit_code == 1
    assert "compose failed" in result.output
    assert invoke("compose").exit_code == 2


def test_pencil(invoke):
    result = invoke("pencil", "classify", "--space", "diag 1", "poly 1 0 1", "poly 0 1 0")
    assert result.output == "RegularArtinian\n"
    result = invoke("pencil", "zeros", "--space", "diag 1", "poly 1 0 1", "poly 0 1 0")
    assert result.output == "1\n-1\n"
    assert invoke("pencil", "zeros", "--space", "diag 1", "poly 1 0 1", "poly 2 0 2").exit_code == 1


def test_conjugate(invoke):
    result = invoke("conjugate", "--space", "diag 1", "--mirror", "poly 1 0 -1", "--point", "2")
    assert result.output == "1/2\nalpha=-1/3 beta=4/3\n"
    result = invoke("conjugate", "--space", "diag 1", "--mirror", "poly 1 0 -1", "--point", "1")
    assert result.output == "1\n"


def test_stereo(invoke):
    assert invoke("stereo", "to-cycle", "1", "0", "0", "1").output == "a=0 b=0,0 c=1\n"
    assert invoke("stereo", "to-cycle", "--", "0", "-2", "2").output == "a=1 b=2 c=1\n"
    assert invoke("stereo", "to-cycle", "1", "1").exit_code == 2
    assert invoke("stereo", "from-cycle", "a=1 b=0,0 c=0").output == "(-1; 0,0; 1)\n"
    result = invoke("stereo", "to-cycle", "--space", "diag 1 2", "--", "-2", "4", "0", "0")
    assert result.output == "a=1 b=-4,0 c=-1\n"
    assert invoke("stereo", "to-cycle", "--space", "diag 1 2", "1", "0", "1").exit_code == 2


def test_projline(invoke):
    assert invoke("projline", "involution", "--quadric", "1", "0", "-1").output == "[[0, 1], [1, 0]]\n"
    assert invoke("projline", "involution", "--quadric", "1", "-2", "1").exit_code == 1
    result = invoke("projline", "desargues", "--q0", "1", "0", "-1", "--q1", "0", "1", "0")
    assert result.output == "[[0, 1], [-1, 0]]\n"
    result = invoke("projline", "desargues", "--q0", "1", "-2", "1", "--q1", "1", "0", "-1")
    assert result.exit_code == 1
    assert "SingularPencil" in result.output


def test_ninepoint(invoke, tmp_path):
    svg = tmp_path / "ninepoint.svg"
    result = invoke("ninepoint", "--M", "0,0", "--N", "4,0", "--P", "1,3", "--svg", svg)
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "T = (1, 1)"
    assert lines[1] == "circle: a=1 b=-3,-2 c=2"
    assert "  (2/5, 6/5)" in lines
    assert lines[-1] == "PASS nine points on the circle"
    assert svg.read_text().lstrip().startswith("<?xml")
    assert invoke("ninepoint", "--M", "0,0", "--N", "1,1", "--P", "2,2").exit_code == 1
    assert invoke("ninepoint", "--M", "inf", "--N", "1,1", "--P", "2,0").exit_code == 2


def test_render(invoke, tmp_path):
    path = write_scene(tmp_path, UNIT_PLANE)
    out = tmp_path / "scene.svg"
    result = invoke("render", path, out)
    assert result.exit_code == 0
    assert "<svg" in out.read_text()
    finite = write_scene(tmp_path, "space Fp:7 diag 1 1\ncycle c = a=1 b=0,0 c=-1\n", "finite.txt")
    result = invoke("render", finite, tmp_path / "finite.svg")
    assert result.exit_code == 1
    assert "UnrenderableField" in result.output
