"""SVG figures of rational scenes in a positive definite plane.

Coordinates are converted to floats for drawing only; every object is labelled
with its exact value.
"""
from typing import List, Tuple
import logging
import math
import warnings

import matplotlib.patches as patches
import matplotlib.pyplot as plt

from inversive_geometry.cycles import Cycle, CycleKind, VPoint, center_and_size, classify, format_cycle
from inversive_geometry.errors import ParallelDiagonalPairWarning, UnrenderableField
from inversive_geometry.field_core import FieldKind
from inversive_geometry.ninepoint import OrthoConfig, nine_points

plt.style.use("fivethirtyeight")

logger = logging.getLogger(__name__)

CIRCLE_STYLE = dict(fill=False, linewidth=1.5, color="tab:blue")
IMAGINARY_STYLE = dict(fill=False, linewidth=1, linestyle="--", color="gray")
LINE_STYLE = dict(linewidth=1.5, color="tab:green")
TRIANGLE_STYLE = dict(linewidth=1, color="black")
POINT_FMT = "o"
LABEL_SIZE = 7
MARGIN = 1.0


def _xy(v: VPoint) -> Tuple[float, float]:
    u, w = v.vector.coords
    return float(u), float(w)


def _check_renderable(scene):
    space = scene.space
    if space is None:
        raise UnrenderableField("the scene declares no space")
    if space.field.kind is not FieldKind.RATIONALS:
        raise UnrenderableField("only scenes over Q can be drawn, got {}".format(space.field))
    if space.dim != 2 or any(space.field.sign(d) <= 0 for d in space.diag):
        raise UnrenderableField("only positive definite planes can be drawn, got {}".format(space))


def _cycle_extent(p: Cycle) -> List[Tuple[float, float]]:
    kind = classify(p).kind
    if kind is not CycleKind.CIRCLE:
        return []
    center, size = center_and_size(p)
    cx, cy = (float(x) for x in center.coords)
    d1, d2 = (float(d) for d in p.space.diag)
    r = math.sqrt(abs(float(size)))
    return [(cx - r / math.sqrt(d1), cy - r / math.sqrt(d2)), (cx + r / math.sqrt(d1), cy + r / math.sqrt(d2))]


def _view_box(points: List[Tuple[float, float]]) -> Tuple[float, float, float, float]:
    if not points:
        return (-5.0, 5.0, -5.0, 5.0)
    xs, ys = [x for x, _ in points], [y for _, y in points]
    return (min(xs) - MARGIN, max(xs) + MARGIN, min(ys) - MARGIN, max(ys) + MARGIN)


def _draw_cycle(ax, p: Cycle, label: str, box):
    kind = classify(p)
    text = "{}: {}".format(label, format_cycle(p))
    if kind.kind is CycleKind.CONSTANT:
        logger.debug("%s is the point at infinity, not drawn", label)
        return
    if kind.kind is CycleKind.LINE:
        (b1, b2), c = (float(x) for x in p.b.coords), float(p.c)
        x0, x1, y0, y1 = box
        if abs(b2) > abs(b1):
            xs = [x0, x1]
            ys = [-(c + b1 * x) / b2 for x in xs]
        else:
            ys = [y0, y1]
            xs = [-(c + b2 * y) / b1 for y in ys]
        ax.plot(xs, ys, **LINE_STYLE)
        ax.annotate(text, ((xs[0] + xs[1]) / 2, (ys[0] + ys[1]) / 2), fontsize=LABEL_SIZE)
        return
    center, size = center_and_size(p)
    cx, cy = (float(x) for x in center.coords)
    d1, d2 = (float(d) for d in p.space.diag)
    if kind.zero_size:
        ax.plot([cx], [cy], POINT_FMT, color="tab:blue")
        ax.annotate(text, (cx, cy), fontsize=LABEL_SIZE)
        return
    r = math.sqrt(abs(float(size)))
    style = CIRCLE_STYLE if p.space.field.sign(size) > 0 else IMAGINARY_STYLE
    ax.add_patch(patches.Ellipse((cx, cy), 2 * r / math.sqrt(d1), 2 * r / math.sqrt(d2), **style))
    if style is IMAGINARY_STYLE:
        text = "{} (imaginary circle)".format(text)
    ax.annotate(text, (cx, cy), fontsize=LABEL_SIZE)


def _draw_point(ax, v: VPoint, label: str):
    if v.is_infinity:
        return
    x, y = _xy(v)
    ax.plot([x], [y], POINT_FMT, color="tab:red")
    ax.annotate("{}: {}".format(label, v), (x, y), fontsize=LABEL_SIZE)


def _draw_triangle(ax, name: str, cfg: OrthoConfig):
    vertices = [cfg.M, cfg.N, cfg.P, cfg.M]
    ax.plot([float(p.u) for p in vertices], [float(p.v) for p in vertices], **TRIANGLE_STYLE)
    ax.plot([float(cfg.T.u)], [float(cfg.T.v)], POINT_FMT, color="black")
    ax.annotate("{} T={}".format(name, cfg.T), (float(cfg.T.u), float(cfg.T.v)), fontsize=LABEL_SIZE)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ParallelDiagonalPairWarning)
        points = [x for x in nine_points(cfg) if x is not None]
    ax.plot([float(x.u) for x in points], [float(x.v) for x in points], POINT_FMT, color="tab:orange", markersize=4)


def render_svg(scene, out_path):
    """Draw the declared cycles, points, triangles and op results of a scene."""
    _check_renderable(scene)
    cycles = list(scene.cycles.items()) + [(label, x) for label, x in scene.results if isinstance(x, Cycle)]
    points = list(scene.points.items()) + [(label, x) for label, x in scene.results if isinstance(x, VPoint)]

    extent = [_xy(v) for _, v in points if not v.is_infinity]
    for _, p in cycles:
        extent += _cycle_extent(p)
    for cfg in scene.triangles.values():
        extent += [(float(x.u), float(x.v)) for x in (cfg.M, cfg.N, cfg.P, cfg.T)]
    box = _view_box(extent)

    fig, ax = plt.subplots(figsize=(8, 8))
    for name, cfg in scene.triangles.items():
        _draw_triangle(ax, name, cfg)
    for label, p in cycles:
        _draw_cycle(ax, p, label, box)
    for label, v in points:
        _draw_point(ax, v, label)
    ax.set_xlim(box[0], box[1])
    ax.set_ylim(box[2], box[3])
    ax.set_aspect("equal")
    ax.grid(color="gray", linestyle=":", linewidth=1)
    ax.set_frame_on(False)
    logger.info("saving to %s", out_path)
    fig.savefig(out_path, format="svg")
    plt.close(fig)
    return out_path
