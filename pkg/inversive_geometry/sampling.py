"""Reproducible random objects for property checks, and the spaces we check over."""
from typing import List, Optional
import logging

import numpy as np

from inversive_geometry.cycles import (
    Cycle,
    Finite,
    Infinity,
    VPoint,
    classify,
    pairing,
    point_embed,
)
from inversive_geometry.errors import NotEnoughSamples
from inversive_geometry.field_core import (
    DEFAULT_HEIGHT,
    Field,
    FieldElement,
    least_non_square,
)
from inversive_geometry.lorentz import LorentzVec
from inversive_geometry.projline import BinaryQuadric
from inversive_geometry.quad_space import (
    AnisotropyStatus,
    EVector,
    QuadSpace,
    verify_anisotropic,
)

logger = logging.getLogger(__name__)

DEFAULT_SEED = 1
MAX_ATTEMPTS = 10000


def standard_space(field: Field, n: int) -> QuadSpace:
    return QuadSpace(field, (1,) * n)


def norm_form_space(field: Field) -> QuadSpace:
    """diag(1, -nu) with nu the least non-square: the anisotropic plane over F_p."""
    if not field.is_finite:
        return standard_space(field, 2)
    return QuadSpace(field, (1, -least_non_square(field)))


def proven_spaces(field: Field, max_dim: int = 3) -> List[QuadSpace]:
    """Standard spaces of dimension 1..max_dim and the norm form, when provably anisotropic."""
    candidates = [standard_space(field, n) for n in range(1, max_dim + 1) if not field.is_finite or n <= 2]
    if field.is_finite:
        candidates.append(norm_form_space(field))
    spaces = []
    for space in candidates:
        if space not in spaces and verify_anisotropic(space).status is AnisotropyStatus.PROVEN:
            spaces.append(space)
    return spaces


class Sampler:
    """Random elements, vectors, points and cycles of one space, from one seed."""

    def __init__(self, space: QuadSpace, seed: int = DEFAULT_SEED, height: int = DEFAULT_HEIGHT):
        self.space = space
        self.field = space.field
        self.seed = seed
        self.height = height
        self.rng = np.random.default_rng(seed)

    def _until(self, draw, accept, what: str):
        for _ in range(MAX_ATTEMPTS):
            candidate = draw()
            if accept(candidate):
                return candidate
        raise NotEnoughSamples("no {} found in {} attempts".format(what, MAX_ATTEMPTS))

    def element(self) -> FieldElement:
        return self.field.random_element(self.rng, self.height)

    def nonzero(self) -> FieldElement:
        return self._until(self.element, lambda e: not e.is_zero, "nonzero element")

    def vector(self) -> EVector:
        return self.space.vector([self.element() for _ in range(self.space.dim)])

    def nonzero_vector(self) -> EVector:
        return self._until(self.vector, lambda x: not x.is_zero, "nonzero vector")

    def vpoint(self) -> VPoint:
        if self.rng.random() < 0.125:
            return Infinity()
        return Finite(self.vector())

    def distinct_vpoints(self, k: int) -> List[VPoint]:
        points: List[VPoint] = []
        while len(points) < k:
            v = self._until(self.vpoint, lambda v: v not in points, "distinct point")
            points.append(v)
        return points

    def cycle(self) -> Cycle:
        """Any nonzero cycle, mixing constants, lines, zero circles and circles."""
        kind = int(self.rng.integers(0, 6))
        if kind == 0:
            return Cycle.constant(self.space, self.nonzero())
        if kind == 1:
            return self.line()
        if kind == 2:
            return point_embed(self.space, Finite(self.vector())) * self.nonzero()
        return self.circle()

    def circle(self, nonzero_size: bool = False) -> Cycle:
        def draw():
            return Cycle(self.space, self.nonzero(), self.vector(), self.element())

        if not nonzero_size:
            return draw()
        return self._until(draw, lambda p: not classify(p).zero_size, "circle of nonzero size")

    def line(self) -> Cycle:
        return Cycle(self.space, 0, self.nonzero_vector(), self.element())

    def non_isotropic(self) -> Cycle:
        return self._until(self.cycle, lambda p: not pairing(p, p).is_zero, "non-isotropic cycle")

    def lorentz_vector(self) -> LorentzVec:
        def draw():
            return LorentzVec(self.space, self.element(), self.vector(), self.element())

        return self._until(draw, lambda t: not t.is_zero, "nonzero Lorentz vector")

    def quadric(self, proper: bool = False) -> BinaryQuadric:
        def draw():
            coords = [self.element() for _ in range(3)]
            if all(c.is_zero for c in coords):
                return None
            return BinaryQuadric(self.field, *coords)

        def accept(q: Optional[BinaryQuadric]):
            return q is not None and (q.is_proper or not proper)

        return self._until(draw, accept, "binary quadric")
