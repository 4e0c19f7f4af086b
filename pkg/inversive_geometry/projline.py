"""Dimension one: the projective line k u {inf}.

Cycles of the standard line E = (k, x^2) are the binary quadrics
A u^2 + B uv + C v^2 (the cycle A x^2 + B x + C), the cycle pairing becomes

    <f, g> = B b - 2 A c - 2 C a

and inversive maps are the fractional linear maps x -> (ax + b) / (cx + d).
Every involution of the line is a hyperplane reflection.
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple
import logging

import numpy as np

from inversive_geometry import linalg
from inversive_geometry.cycles import (
    Cycle,
    CycleKind,
    Finite,
    Infinity,
    VPoint,
    center_and_size,
    classify,
)
from inversive_geometry.errors import (
    DegenerateInput,
    DegenerateMoebius,
    DegenerateQuadric,
    DimensionMismatch,
    SingularPencil,
    SpaceMismatch,
    ZeroFunction,
)
from inversive_geometry.field_core import Field, FieldElement
from inversive_geometry.quad_space import QuadSpace
from inversive_geometry.transforms import InversiveWord, reflect_point

logger = logging.getLogger(__name__)

# Gram matrix of the pairing on (A, B, C)
_LINE_GRAM = [[0, 0, -2], [0, 1, 0], [-2, 0, 0]]


def line_space(field: Field) -> QuadSpace:
    """The standard line (k, x^2)."""
    return QuadSpace(field, (1,))


def _check_line(space: QuadSpace):
    if space.dim != 1:
        raise DimensionMismatch("the projective line needs dimension 1, got {}".format(space.dim))
    if space != line_space(space.field):
        raise SpaceMismatch("the projective line needs the form x^2, got {}".format(space))


@dataclass(frozen=True)
class BinaryQuadric:
    """A u^2 + B uv + C v^2."""

    field: Field
    A: FieldElement
    B: FieldElement
    C: FieldElement

    def __post_init__(self):
        for name in ("A", "B", "C"):
            object.__setattr__(self, name, self.field(getattr(self, name)))
        if self.A.is_zero and self.B.is_zero and self.C.is_zero:
            raise ZeroFunction("the zero quadric")

    @property
    def coords(self) -> Tuple[FieldElement, FieldElement, FieldElement]:
        return (self.A, self.B, self.C)

    @property
    def discriminant(self) -> FieldElement:
        """B^2 - 4AC, which is also the cycle norm <q, q>."""
        return self.B * self.B - 4 * self.A * self.C

    @property
    def is_proper(self) -> bool:
        return not self.discriminant.is_zero

    def matrix(self) -> np.ndarray:
        half = self.B / 2
        return linalg.to_matrix(self.field, [[self.A, half], [half, self.C]])

    def evaluate(self, u, v) -> FieldElement:
        return self.A * u * u + self.B * u * v + self.C * v * v

    def __add__(self, other: "BinaryQuadric") -> "BinaryQuadric":
        return BinaryQuadric(self.field, self.A + other.A, self.B + other.B, self.C + other.C)

    def __mul__(self, scalar) -> "BinaryQuadric":
        scalar = self.field(scalar)
        return BinaryQuadric(self.field, scalar * self.A, scalar * self.B, scalar * self.C)

    __rmul__ = __mul__

    def roots(self) -> List[VPoint]:
        """The points (u : v) of the line where the quadric vanishes, when rational."""
        space = line_space(self.field)
        points = []
        if self.A.is_zero:
            points.append(Infinity())
            if not self.B.is_zero:
                points.append(Finite.of(space, -self.C / self.B))
            return points
        root = self.field.sqrt_exact(self.discriminant)
        if root is None:
            return points
        for sign in (-1, 1):
            point = Finite.of(space, (-self.B + sign * root) / (2 * self.A))
            if point not in points:
                points.append(point)
        return points

    def __str__(self):
        return "{} u^2 + {} uv + {} v^2".format(self.A, self.B, self.C)


def quadric_from_cycle(p: Cycle) -> BinaryQuadric:
    _check_line(p.space)
    return BinaryQuadric(p.space.field, p.a, p.b.coords[0], p.c)


def cycle_from_quadric(q: BinaryQuadric) -> Cycle:
    return Cycle(line_space(q.field), q.A, (q.B,), q.C)


def to_polar_convention(q: BinaryQuadric) -> Tuple[FieldElement, FieldElement, FieldElement]:
    """(A, B', C) with A u^2 + 2B' uv + C v^2 = q."""
    return (q.A, q.B / 2, q.C)


def from_polar_convention(field: Field, A, B_half, C) -> BinaryQuadric:
    return BinaryQuadric(field, A, 2 * field(B_half), C)


def line_pairing(f: BinaryQuadric, g: BinaryQuadric) -> FieldElement:
    return f.B * g.B - 2 * f.A * g.C - 2 * f.C * g.A


@dataclass(frozen=True, eq=False)
class Moebius:
    """x -> (ax + b) / (cx + d); equality is up to a common nonzero factor."""

    field: Field
    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, self.field(getattr(self, name)))
        if self.determinant.is_zero:
            raise DegenerateMoebius("ad - bc = 0")

    @classmethod
    def from_matrix(cls, field: Field, matrix) -> "Moebius":
        (a, b), (c, d) = matrix
        return cls(field, a, b, c, d)

    @classmethod
    def identity(cls, field: Field) -> "Moebius":
        return cls(field, 1, 0, 0, 1)

    @property
    def entries(self) -> Tuple[FieldElement, ...]:
        return (self.a, self.b, self.c, self.d)

    @property
    def determinant(self) -> FieldElement:
        return self.a * self.d - self.b * self.c

    def matrix(self) -> np.ndarray:
        return linalg.to_matrix(self.field, [[self.a, self.b], [self.c, self.d]])

    def normalized(self) -> Tuple[FieldElement, ...]:
        lead = next(x for x in self.entries if not x.is_zero)
        return tuple(x / lead for x in self.entries)

    def __eq__(self, other):
        if not isinstance(other, Moebius):
            return NotImplemented
        if other.field != self.field:
            return False
        mine, theirs = self.entries, other.entries
        return all(
            mine[i] * theirs[j] == mine[j] * theirs[i]
            for i in range(4)
            for j in range(i + 1, 4)
        )

    def __hash__(self):
        return hash((self.field, self.normalized()))

    def apply(self, v: VPoint) -> VPoint:
        space = line_space(self.field)
        if v.is_infinity:
            if self.c.is_zero:
                return Infinity()
            return Finite.of(space, self.a / self.c)
        x = v.vector.coords[0]
        den = self.c * x + self.d
        if den.is_zero:
            return Infinity()
        return Finite.of(space, (self.a * x + self.b) / den)

    def compose(self, other: "Moebius") -> "Moebius":
        """self after other."""
        return Moebius.from_matrix(self.field, self.matrix() @ other.matrix())

    def inverse(self) -> "Moebius":
        return Moebius(self.field, self.d, -self.b, -self.c, self.a)

    def fixed_points(self) -> Optional[List[VPoint]]:
        """Rational fixed points; None for the identity, which fixes everything."""
        space = line_space(self.field)
        a, b, c, d = self.entries
        if c.is_zero:
            if a == d:
                return None if b.is_zero else [Infinity()]
            return [Finite.of(space, b / (d - a)), Infinity()]
        # c x^2 + (d - a) x - b = 0
        disc = (d - a) * (d - a) + 4 * b * c
        root = self.field.sqrt_exact(disc)
        if root is None:
            return []
        points = []
        for sign in (-1, 1):
            point = Finite.of(space, (a - d + sign * root) / (2 * c))
            if point not in points:
                points.append(point)
        return points

    def __str__(self):
        return "[[{}, {}], [{}, {}]]".format(*self.entries)


def moebius_apply(m: Moebius, v: VPoint) -> VPoint:
    return m.apply(v)


def moebius_from_three_points(field: Field, z0: VPoint, z1: VPoint, zinf: VPoint) -> Moebius:
    """The map sending 0, 1, inf to z0, z1, zinf."""
    if len({z0, z1, zinf}) < 3:
        raise DegenerateInput("three distinct image points are needed")

    def coord(v):
        return v.vector.coords[0]

    # the map sending z0, z1, zinf to 0, 1, inf, inverted
    if zinf.is_infinity:
        x0, x1 = coord(z0), coord(z1)
        to_standard = Moebius(field, 1, -x0, 0, x1 - x0)
    elif z0.is_infinity:
        x1, xi = coord(z1), coord(zinf)
        to_standard = Moebius(field, 0, x1 - xi, 1, -xi)
    elif z1.is_infinity:
        x0, xi = coord(z0), coord(zinf)
        to_standard = Moebius(field, 1, -x0, 1, -xi)
    else:
        x0, x1, xi = coord(z0), coord(z1), coord(zinf)
        to_standard = Moebius(field, x1 - xi, -x0 * (x1 - xi), x1 - x0, -xi * (x1 - x0))
    return to_standard.inverse()


def _mirror_moebius(p: Cycle) -> Moebius:
    field = p.space.field
    kind = classify(p).kind
    if kind is CycleKind.LINE:
        B, C = p.b.coords[0], p.c
        return Moebius(field, -1, -2 * C / B, 0, 1)
    if kind is CycleKind.CIRCLE:
        center, size = center_and_size(p)
        m = center.coords[0]
        return Moebius(field, m, size - m * m, 1, -m)
    raise DegenerateMoebius("{} is not a mirror".format(p))


def word_to_moebius(word: InversiveWord) -> Moebius:
    """Lines B x + C act as x -> -x - 2C/B, circles as x -> m + s/(x - m)."""
    _check_line(word.space)
    result = Moebius.identity(word.space.field)
    for r in word.reflections:
        result = _mirror_moebius(r.mirror).compose(result)
    return result


def involution_of_mirror(p: Cycle) -> Moebius:
    """The reflection in p read off from its action on 0, 1 and inf."""
    _check_line(p.space)
    space = p.space
    images = [
        reflect_point(p, v) for v in (Finite.of(space, 0), Finite.of(space, 1), Infinity())
    ]
    return moebius_from_three_points(space.field, *images)


def polar_involution(q: BinaryQuadric) -> Moebius:
    """(u : v) -> (u* : v*) with b((u, v), (u*, v*)) = 0 for the proper quadric q."""
    if not q.is_proper:
        raise DegenerateQuadric("{} is degenerate".format(q))
    A, B_half, C = to_polar_convention(q)
    return Moebius(q.field, -B_half, -C, A, B_half)


def _line_gram(q0: BinaryQuadric, q1: BinaryQuadric) -> np.ndarray:
    cross = line_pairing(q0, q1)
    return linalg.to_matrix(q0.field, [[line_pairing(q0, q0), cross], [cross, line_pairing(q1, q1)]])


def desargues_condition(q0: BinaryQuadric, q1: BinaryQuadric) -> bool:
    """Whether the pencil spanned by q0, q1 is regular under the line pairing."""
    return not linalg.determinant(q0.field, _line_gram(q0, q1)).is_zero


def desargues_mirror(q0: BinaryQuadric, q1: BinaryQuadric) -> BinaryQuadric:
    """The quadric orthogonal to the regular pencil spanned by q0, q1."""
    if not desargues_condition(q0, q1):
        raise SingularPencil("the pencil spanned by {} and {} is singular".format(q0, q1))
    field = q0.field
    gram = linalg.to_matrix(field, _LINE_GRAM)
    rows = [gram @ linalg.to_vector(field, q.coords) for q in (q0, q1)]
    (kernel,) = linalg.nullspace(field, rows)
    return BinaryQuadric(field, *kernel)


def desargues_involution(q0: BinaryQuadric, q1: BinaryQuadric) -> Moebius:
    """The involution swapping the two points of every member of the pencil."""
    return involution_of_mirror(cycle_from_quadric(desargues_mirror(q0, q1)))
