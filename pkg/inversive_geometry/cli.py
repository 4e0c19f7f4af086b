"""The ``inversive`` command.

Exit codes: 0 when everything passes, 1 on a failed check or a domain error,
2 on unparsable input.
"""
from contextlib import contextmanager
import logging
import sys

import click

from inversive_geometry.cycles import format_cycle
from inversive_geometry.errors import InversiveGeometryError, ParseError
from inversive_geometry.field_core import parse_field
from inversive_geometry.lorentz import LorentzVec, stereo_from_cycle, stereo_to_cycle
from inversive_geometry.ninepoint import (
    OrthoConfig,
    PlanePoint,
    nine_point_circle,
    nine_points,
    plane_space,
)
from inversive_geometry.pencils import Pencil, classify_pencil, common_zeros, conjugate as conjugate_point
from inversive_geometry.projline import BinaryQuadric, desargues_involution, polar_involution
from inversive_geometry.quad_space import DEFAULT_BUDGET
from inversive_geometry.render import render_svg
from inversive_geometry.sampling import DEFAULT_SEED, standard_space
from inversive_geometry.scene import Scene, format_point, load_scene, parse_cycle, parse_point, parse_space
from inversive_geometry.transforms import InversiveWord, as_matrix, invert_point, reflect, reflect_point
from inversive_geometry.verify import DEFAULT_COUNT, SUITES, verify as run_verify

logger = logging.getLogger(__name__)


def _parse(what: str, parser, *args):
    try:
        return parser(*args)
    except (ValueError, ZeroDivisionError) as exc:
        raise click.BadParameter("{}: {}".format(what, exc))


@contextmanager
def _domain_errors(op: str):
    try:
        yield
    except (InversiveGeometryError, ZeroDivisionError) as exc:
        click.echo("{} failed: {}: {}".format(op, type(exc).__name__, exc), err=True)
        sys.exit(1)


def _space(field: str, space: str):
    return _parse("space", parse_space, space, _parse("field", parse_field, field))


field_option = click.option("--field", default="Q", show_default=True, help="Q, Fp:p or Qsqrt:d")
space_option = click.option("--space", default="diag 1 1", show_default=True, help="diagonal of the quadratic form")
budget_option = click.option(
    "--budget", default=DEFAULT_BUDGET, show_default=True, help="search height over infinite fields"
)


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="log progress and skipped samples")
def main(verbose):
    """Exact inversive geometry over anisotropic quadratic spaces."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING)


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@budget_option
@click.option("--svg", "svg_path", type=click.Path(dir_okay=False), help="also draw the scene")
def scene(path, budget, svg_path):
    """Run a scene file and print the result of every op."""
    try:
        loaded = load_scene(path, budget)
    except ParseError as exc:
        click.echo("parse error: {}".format(exc), err=True)
        sys.exit(2)
    for line in loaded.outputs:
        click.echo(line)
    if svg_path:
        with _domain_errors("render"):
            render_svg(loaded, svg_path)
    sys.exit(loaded.report.exit_code())


@main.command()
@click.argument("suite", type=click.Choice(["all"] + list(SUITES)))
@field_option
@click.option("--seed", default=DEFAULT_SEED, show_default=True)
@click.option("--count", default=DEFAULT_COUNT, show_default=True, help="samples per check")
@budget_option
@click.option("-o", "--output", type=click.File("w"), help="write one JSON object per check")
@click.option("--plot", "plot_path", type=click.Path(dir_okay=False), help="save a bar chart of the run")
def verify(suite, field, seed, count, budget, output, plot_path):
    """Run a property suite."""
    field = _parse("field", parse_field, field)
    report = run_verify(suite, field, seed=seed, count=count, budget=budget)
    click.echo(report.summary())
    if output is not None:
        logger.info("saving to %s", output.name)
        output.write(report.to_jsonl())
    if plot_path:
        ax = report.plot()
        ax.figure.savefig(plot_path)
    sys.exit(report.exit_code())


@main.command(name="reflect")
@field_option
@space_option
@click.option("--mirror", required=True, help="mirror cycle, e.g. 'a=1 b=0,0 c=-1'")
@click.option("--point", "point_text", help="point to reflect, e.g. '2,3' or 'inf'")
@click.option("--cycle", "cycle_text", help="cycle to reflect")
def reflect_command(field, space, mirror, point_text, cycle_text):
    """Reflect a point or a cycle in a mirror cycle."""
    space = _space(field, space)
    mirror = _parse("mirror", parse_cycle, space, mirror)
    if (point_text is None) == (cycle_text is None):
        raise click.UsageError("give exactly one of --point and --cycle")
    with _domain_errors("reflect"):
        if cycle_text is not None:
            click.echo(format_cycle(reflect(mirror, _parse("cycle", parse_cycle, space, cycle_text))))
        else:
            click.echo(format_point(reflect_point(mirror, _parse("point", parse_point, space, point_text))))


@main.command()
@field_option
@space_option
@click.option("--mirror", required=True, help="circle of nonzero size")
@click.option("--point", "point_text", required=True)
def invert(field, space, mirror, point_text):
    """Invert a point in a circle."""
    space = _space(field, space)
    mirror = _parse("mirror", parse_cycle, space, mirror)
    point = _parse("point", parse_point, space, point_text)
    with _domain_errors("invert"):
        click.echo(format_point(invert_point(mirror, point)))


@main.command()
@field_option
@space_option
@click.argument("mirrors", nargs=-1, required=True)
def compose(field, space, mirrors):
    """Matrix of the reflections in MIRRORS, applied left to right.

    Rows act on cycle coordinates (a, b_1, ..., b_n, c) and are printed one per line.
    """
    space = _space(field, space)
    cycles = [_parse("mirror", parse_cycle, space, text) for text in mirrors]
    with _domain_errors("compose"):
        click.echo(str(as_matrix(InversiveWord(space, tuple(cycles)))))


@main.group()
def pencil():
    """Pencils spanned by two cycles."""


@pencil.command(name="classify")
@field_option
@space_option
@click.argument("first")
@click.argument("second")
def pencil_classify(field, space, first, second):
    space = _space(field, space)
    cycles = [_parse("cycle", parse_cycle, space, text) for text in (first, second)]
    with _domain_errors("pencil classify"):
        click.echo(classify_pencil(Pencil(*cycles)).value)


@pencil.command(name="zeros")
@field_option
@space_option
@budget_option
@click.argument("first")
@click.argument("second")
def pencil_zeros(field, space, budget, first, second):
    space = _space(field, space)
    cycles = [_parse("cycle", parse_cycle, space, text) for text in (first, second)]
    with _domain_errors("pencil zeros"):
        for v in common_zeros(Pencil(*cycles), budget):
            click.echo(format_point(v))


@main.command()
@field_option
@space_option
@click.option("--mirror", required=True)
@click.option("--point", "point_text", required=True)
def conjugate(field, space, mirror, point_text):
    """The conjugate of a point with respect to a cycle."""
    space = _space(field, space)
    mirror = _parse("mirror", parse_cycle, space, mirror)
    point = _parse("point", parse_point, space, point_text)
    with _domain_errors("conjugate"):
        result = conjugate_point(mirror, point)
    click.echo(format_point(result.point))
    if result.certificate is not None:
        click.echo("alpha={} beta={}".format(*result.certificate))


@main.group()
def stereo():
    """The isometry between the Lorentz space and the cycles."""


@stereo.command(name="to-cycle")
@field_option
@click.option("--space", help="diagonal of the quadratic form; the standard one by default")
@click.argument("coords", nargs=-1, required=True)
def stereo_to(field, space, coords):
    """COORDS is x y1 ... yn z over a space of dimension n."""
    if len(coords) < 3:
        raise click.BadParameter("need x, at least one y and z")
    if space is None:
        space = standard_space(_parse("field", parse_field, field), len(coords) - 2)
    else:
        space = _space(field, space)
        if space.dim != len(coords) - 2:
            raise click.BadParameter("{} coordinates for a space of dimension {}".format(len(coords), space.dim))
    field = space.field
    values = [_parse("coordinate", field, x) for x in coords]
    with _domain_errors("stereo to-cycle"):
        click.echo(format_cycle(stereo_to_cycle(LorentzVec(space, values[0], values[1:-1], values[-1]))))


@stereo.command(name="from-cycle")
@field_option
@space_option
@click.argument("cycle")
def stereo_from(field, space, cycle):
    space = _space(field, space)
    click.echo(str(stereo_from_cycle(_parse("cycle", parse_cycle, space, cycle))))


@main.group()
def projline():
    """Involutions of the projective line."""


def _quadric(field, coefficients, what):
    return _parse(what, lambda: BinaryQuadric(field, *(field(x) for x in coefficients)))


@projline.command()
@field_option
@click.option("--quadric", nargs=3, required=True, help="A B C of A u^2 + B uv + C v^2")
def involution(field, quadric):
    """The polar involution of a proper quadric."""
    field = _parse("field", parse_field, field)
    q = _quadric(field, quadric, "quadric")
    with _domain_errors("projline involution"):
        click.echo(str(polar_involution(q)))


@projline.command()
@field_option
@click.option("--q0", nargs=3, required=True)
@click.option("--q1", nargs=3, required=True)
def desargues(field, q0, q1):
    """The involution swapping the points of every quadric of a pencil."""
    field = _parse("field", parse_field, field)
    q0, q1 = _quadric(field, q0, "q0"), _quadric(field, q1, "q1")
    with _domain_errors("projline desargues"):
        click.echo(str(desargues_involution(q0, q1)))


@main.command()
@field_option
@click.option("--M", "m_text", required=True, help="vertex, e.g. 0,0")
@click.option("--N", "n_text", required=True)
@click.option("--P", "p_text", required=True)
@click.option("--svg", "svg_path", type=click.Path(dir_okay=False))
def ninepoint(field, m_text, n_text, p_text, svg_path):
    """Orthocenter, nine-point circle and nine points of a triangle."""
    field = _parse("field", parse_field, field)
    space = plane_space(field)
    vertices = []
    for text in (m_text, n_text, p_text):
        v = _parse("vertex", parse_point, space, text)
        if v.is_infinity:
            raise click.BadParameter("vertices are finite points")
        vertices.append(PlanePoint(field, *v.vector.coords))
    with _domain_errors("ninepoint"):
        cfg = OrthoConfig.from_triangle(*vertices)
        circle = nine_point_circle(cfg)
        points = nine_points(cfg)
    click.echo("T = {}".format(cfg.T))
    click.echo("circle: {}".format(format_cycle(circle)))
    for point in points:
        click.echo("  {}".format("inf" if point is None else point))
    click.echo("PASS nine points on the circle")
    if svg_path:
        drawing = Scene()
        drawing.field, drawing.space = field, space
        drawing.triangles["triangle"] = cfg
        drawing.results.append(("nine-point circle", circle))
        with _domain_errors("render"):
            render_svg(drawing, svg_path)


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.argument("out", type=click.Path(dir_okay=False))
@budget_option
def render(path, out, budget):
    """Draw a scene file as SVG."""
    try:
        loaded = load_scene(path, budget)
    except ParseError as exc:
        click.echo("parse error: {}".format(exc), err=True)
        sys.exit(2)
    with _domain_errors("render"):
        render_svg(loaded, out)
    sys.exit(loaded.report.exit_code())
