from typing import Sequence

from inversive_geometry.cycles import Cycle, Finite, VPoint
from inversive_geometry.quad_space import QuadSpace


def cycle(space: QuadSpace, a, b: Sequence, c) -> Cycle:
    return Cycle(space, a, tuple(b), c)


def point(space: QuadSpace, *coords) -> VPoint:
    return Finite.of(space, list(coords))


def poly(space: QuadSpace, A, B, C) -> Cycle:
    """A x^2 + B x + C on a line."""
    return Cycle(space, A, (B,), C)


def write_scene(directory, text: str, name: str = "scene.txt"):
    path = directory / name
    path.write_text(text)
    return path
