"""Pencils of cycles, orthogonal complements and conjugate points."""
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple
import itertools
import logging

import numpy as np

from inversive_geometry import linalg
from inversive_geometry.cycles import (
    Cycle,
    VPoint,
    all_vpoints,
    gram_matrix,
    on_zero_set,
    pairing,
    point_embed,
    point_extract,
)
from inversive_geometry.errors import (
    DependentCycles,
    IncidenceFailure,
    NoRationalMembers,
    SpaceMismatch,
)
from inversive_geometry.field_core import FieldElement
from inversive_geometry.quad_space import DEFAULT_BUDGET, QuadSpace, bounded_elements
from inversive_geometry.transforms import reflect_point

logger = logging.getLogger(__name__)


class PencilClass(Enum):
    SINGULAR = "Singular"
    REGULAR_ANISOTROPIC = "RegularAnisotropic"
    REGULAR_ARTINIAN = "RegularArtinian"


@dataclass(frozen=True)
class Pencil:
    """The span of two independent cycles."""

    p: Cycle
    q: Cycle

    def __post_init__(self):
        if self.p.space != self.q.space:
            raise SpaceMismatch("pencil members over {} and {}".format(self.p.space, self.q.space))
        if linalg.rank(self.space.field, [self.p.coords, self.q.coords]) < 2:
            raise DependentCycles("{} and {} span a single cycle".format(self.p, self.q))

    @property
    def space(self) -> QuadSpace:
        return self.p.space

    def member(self, alpha, beta) -> Cycle:
        """alpha p + beta q."""
        field = self.space.field
        alpha, beta = field(alpha), field(beta)
        return Cycle.from_coords(
            self.space, [alpha * x + beta * y for x, y in zip(self.p.coords, self.q.coords)]
        )


def gram2(pencil: Pencil) -> np.ndarray:
    p, q = pencil.p, pencil.q
    pq = pairing(p, q)
    return linalg.to_matrix(pencil.space.field, [[pairing(p, p), pq], [pq, pairing(q, q)]])


def _discriminant(pencil: Pencil) -> FieldElement:
    return linalg.determinant(pencil.space.field, gram2(pencil))


def classify_pencil(pencil: Pencil) -> PencilClass:
    """Singular iff det = 0; Artinian iff -det is a square."""
    field = pencil.space.field
    det = _discriminant(pencil)
    if det.is_zero:
        return PencilClass.SINGULAR
    if field.is_square(-det):
        return PencilClass.REGULAR_ARTINIAN
    return PencilClass.REGULAR_ANISOTROPIC


def radical(pencil: Pencil) -> Cycle:
    """The member orthogonal to the whole pencil; singular pencils only."""
    field = pencil.space.field
    kernel = linalg.nullspace(field, gram2(pencil))
    if len(kernel) != 1:
        raise ValueError("the pencil is not singular")
    alpha, beta = kernel[0]
    return pencil.member(alpha, beta)


def isotropic_members(pencil: Pencil) -> List[Cycle]:
    """The two isotropic members of an Artinian pencil.

    <p + l q, p + l q> = A + 2 B l + C l^2; C = 0 means q itself is isotropic.
    """
    field = pencil.space.field
    (A, B), (_, C) = gram2(pencil)
    det = A * C - B * B
    if det.is_zero:
        raise ValueError("a singular pencil has a single isotropic direction")
    if C.is_zero:
        return [pencil.member(1, -A / (2 * B)), pencil.q]
    root = field.sqrt_exact(-det)
    if root is None:
        raise NoRationalMembers("the isotropic members of the pencil lie outside {}".format(field))
    return [pencil.member(1, (-B - root) / C), pencil.member(1, (-B + root) / C)]


def orthocomplement(space: QuadSpace, cycles: Sequence[Cycle]) -> List[Cycle]:
    """Basis of the cycles orthogonal to every given cycle."""
    gram = gram_matrix(space)
    rows = [gram @ c.as_vector() for c in cycles]
    kernel = linalg.nullspace(space.field, rows, n_cols=space.dim + 2)
    return [Cycle.from_coords(space, x) for x in kernel]


def common_zeros(pencil: Pencil, budget: int = DEFAULT_BUDGET) -> List[VPoint]:
    """Points of V on every member of the pencil.

    Regular anisotropic pencils over Q of dimension n >= 2 are searched in the
    orthogonal complement up to ``budget`` only.
    """
    kind = classify_pencil(pencil)
    if kind is PencilClass.SINGULAR:
        return [point_extract(radical(pencil))]
    if kind is PencilClass.REGULAR_ARTINIAN:
        return [point_extract(member) for member in isotropic_members(pencil)]
    space = pencil.space
    if space.field.is_finite:
        return [
            v for v in all_vpoints(space)
            if on_zero_set(pencil.p, v) and on_zero_set(pencil.q, v)
        ]
    complement = orthocomplement(space, [pencil.p, pencil.q])
    if len(complement) == 1:
        r = complement[0]
        return [point_extract(r)] if pairing(r, r).is_zero else []
    field = space.field
    points = []
    values = bounded_elements(field, budget)
    # projective coefficient vectors (0, ..., 0, 1, tail)
    for lead in range(len(complement)):
        for tail in itertools.product(values, repeat=len(complement) - lead - 1):
            coefficients = (field.zero,) * lead + (field.one,) + tail
            coords = [field.zero] * (space.dim + 2)
            for coefficient, r in zip(coefficients, complement):
                coords = [x + coefficient * y for x, y in zip(coords, r.coords)]
            member = Cycle.from_coords(space, coords)
            if pairing(member, member).is_zero:
                point = point_extract(member)
                if point not in points:
                    points.append(point)
    logger.debug("bounded search found %d common zeros of %s", len(points), pencil)
    return points


@dataclass(frozen=True)
class Conjugate:
    """The conjugate m' of a point and, when m' != m, p = alpha q_m + beta q_m'."""

    point: VPoint
    certificate: Optional[Tuple[FieldElement, FieldElement]] = None


def conjugate(p: Cycle, m: VPoint) -> Conjugate:
    space = p.space
    m2 = reflect_point(p, m)
    if m2 == m:
        return Conjugate(m2)
    q, q2 = point_embed(space, m), point_embed(space, m2)
    columns = linalg.to_matrix(space.field, list(zip(q.coords, q2.coords)))
    solution = linalg.solve(space.field, columns, p.coords)
    if solution is None:
        raise IncidenceFailure("{} is not in the span of the zero circles of {} and {}".format(p, m, m2))
    alpha, beta = solution
    return Conjugate(m2, (alpha, beta))
