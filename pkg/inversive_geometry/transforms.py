"""Reflections of the cycle space and the inversive maps they induce on V.

A non-isotropic cycle p defines the hyperplane reflection

    R(x) = x - 2 <x, p> / <p, p> p

of F. On V it acts as the affine reflection in p when p is a line and as the
inversion in p when p is a circle of nonzero size.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence, Tuple
import itertools
import logging

import numpy as np

from inversive_geometry import linalg
from inversive_geometry.cycles import (
    CycleKind,
    Cycle,
    Finite,
    Infinity,
    VPoint,
    center_and_size,
    classify,
    evaluate,
    gram_matrix,
    pairing,
    point_embed,
    point_extract,
)
from inversive_geometry.errors import (
    DegenerateInput,
    IsotropicMirror,
    IsotropicVectorEncountered,
    NotACircle,
    NotALine,
    SpaceMismatch,
    ZeroSizeCircle,
)
from inversive_geometry.quad_space import EVector, QuadSpace, dot, norm_h

logger = logging.getLogger(__name__)


def _mirror_norm(p: Cycle):
    norm = pairing(p, p)
    if norm.is_zero:
        raise IsotropicMirror("{} is isotropic and defines no reflection".format(p))
    return norm


def reflect(p: Cycle, x: Cycle) -> Cycle:
    k = 2 * pairing(x, p) / _mirror_norm(p)
    return Cycle.from_coords(p.space, [xi - k * pi for xi, pi in zip(x.coords, p.coords)])


def reflect_point(p: Cycle, v: VPoint) -> VPoint:
    return point_extract(reflect(p, point_embed(p.space, v)))


def affine_reflect(line: Cycle, v: VPoint) -> VPoint:
    """x -> x - 2 b L(x) / b.b for the line L(X) = b.X + c; inf is fixed."""
    if classify(line).kind is not CycleKind.LINE:
        raise NotALine("{} is not a line".format(line))
    if v.is_infinity:
        return v
    space = line.space
    b = line.b
    bb = dot(space, b, b)
    if bb.is_zero:
        raise IsotropicVectorEncountered("isotropic normal {} in {}".format(b, space))
    x = v.vector
    return Finite(x - b * (2 * evaluate(line, x) / bb))


def invert_point(p: Cycle, v: VPoint) -> VPoint:
    """Inversion in the circle of center m and size s: (x - m).(x' - m) = s."""
    if p.a.is_zero:
        raise NotACircle("{} is not a circle".format(p))
    center, size = center_and_size(p)
    if size.is_zero:
        raise ZeroSizeCircle("{} has size zero".format(p))
    if v.is_infinity:
        return Finite(center)
    offset = v.vector - center
    if offset.is_zero:
        return Infinity()
    h = norm_h(p.space, offset)
    if h.is_zero:
        raise IsotropicVectorEncountered("isotropic vector {} in {}".format(offset, p.space))
    return Finite(center + offset * (size / h))


@dataclass(frozen=True)
class Reflection:
    mirror: Cycle

    def __post_init__(self):
        _mirror_norm(self.mirror)

    @property
    def space(self) -> QuadSpace:
        return self.mirror.space

    def matrix(self) -> "CycleMatrix":
        """I - (2 / <p,p>) p (G p)^T in cycle coordinates."""
        space = self.space
        field = space.field
        p = self.mirror.as_vector()
        gp = gram_matrix(space) @ p
        scale = 2 / pairing(self.mirror, self.mirror)
        n = len(p)
        rows = [
            [(1 if i == j else 0) - scale * p[i] * gp[j] for j in range(n)] for i in range(n)
        ]
        return CycleMatrix(space, linalg.to_matrix(field, rows))

    def __str__(self):
        return "R[{}]".format(self.mirror)


@dataclass(frozen=True)
class InversiveWord:
    """Reflections applied left to right; the empty word is the identity."""

    space: QuadSpace
    reflections: Tuple[Reflection, ...] = ()

    def __post_init__(self):
        reflections = tuple(
            r if isinstance(r, Reflection) else Reflection(r) for r in self.reflections
        )
        if any(r.space != self.space for r in reflections):
            raise SpaceMismatch("every mirror must live in {}".format(self.space))
        object.__setattr__(self, "reflections", reflections)

    def __len__(self):
        return len(self.reflections)

    def __add__(self, other: "InversiveWord") -> "InversiveWord":
        return InversiveWord(self.space, self.reflections + other.reflections)

    def inverse(self) -> "InversiveWord":
        return InversiveWord(self.space, tuple(reversed(self.reflections)))

    def apply(self, x: Cycle) -> Cycle:
        for r in self.reflections:
            x = reflect(r.mirror, x)
        return x

    def apply_point(self, v: VPoint) -> VPoint:
        for r in self.reflections:
            v = reflect_point(r.mirror, v)
        return v


class CycleMatrix:
    """An (n+2)x(n+2) matrix acting on cycle coordinates (a, b_1..b_n, c)."""

    def __init__(self, space: QuadSpace, matrix: np.ndarray):
        size = space.dim + 2
        if matrix.shape != (size, size):
            raise ValueError("expected a {0}x{0} matrix".format(size))
        self.space = space
        self.matrix = linalg.to_matrix(space.field, matrix)

    @classmethod
    def identity(cls, space: QuadSpace) -> "CycleMatrix":
        return cls(space, linalg.identity(space.field, space.dim + 2))

    def __matmul__(self, other: "CycleMatrix") -> "CycleMatrix":
        if other.space != self.space:
            raise SpaceMismatch("matrices over {} and {}".format(self.space, other.space))
        return CycleMatrix(self.space, self.matrix @ other.matrix)

    def __mul__(self, scalar) -> "CycleMatrix":
        return CycleMatrix(self.space, self.matrix * self.space.field(scalar))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CycleMatrix):
            return NotImplemented
        return self.space == other.space and linalg.matrices_equal(self.matrix, other.matrix)

    __hash__ = None

    @cached_property
    def orthogonal(self) -> bool:
        return preserves_pairing(self)

    def apply(self, p: Cycle) -> Cycle:
        return Cycle.from_coords(self.space, self.matrix @ p.as_vector())

    def apply_point(self, v: VPoint) -> VPoint:
        return point_extract(self.apply(point_embed(self.space, v)))

    def fixes_point(self, v: VPoint) -> bool:
        return self.apply_point(v) == v

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self.matrix)


def as_matrix(word: InversiveWord) -> CycleMatrix:
    """M_k ... M_1 for the word [r_1, ..., r_k]."""
    result = CycleMatrix.identity(word.space)
    for r in word.reflections:
        result = r.matrix() @ result
    return result


def preserves_pairing(m: CycleMatrix) -> bool:
    """M^T G M == G on the canonical basis."""
    gram = gram_matrix(m.space)
    return linalg.matrices_equal(m.matrix.T @ gram @ m.matrix, gram)


def swap_mirror(space: QuadSpace, m: VPoint, m2: VPoint, fix: Optional[VPoint] = None) -> Cycle:
    """A mirror in span{q_m, q_m2} whose reflection swaps m and m2.

    With ``fix`` the mirror also passes through that third point.
    """
    if m == m2:
        raise DegenerateInput("cannot swap a point with itself")
    q, q2 = point_embed(space, m), point_embed(space, m2)
    if fix is None:
        return q - q2
    qf = point_embed(space, fix)
    return q * pairing(q2, qf) - q2 * pairing(q, qf)


def translation_word(space: QuadSpace, t: EVector) -> InversiveWord:
    """Two parallel line reflections, t.X then t.X - h(t)/2, translating by t."""
    if t.is_zero:
        return InversiveWord(space)
    first = Cycle(space, 0, t, 0)
    second = Cycle(space, 0, t, -norm_h(space, t) / 2)
    return InversiveWord(space, (Reflection(first), Reflection(second)))


def _normalizing_word(space: QuadSpace, u: VPoint, w: VPoint) -> InversiveWord:
    """At most two reflections sending w to inf and then u to 0."""
    origin = Finite(space.zero_vector)
    reflections = []
    if not w.is_infinity:
        # (X - w).(X - w) - 1 has center w and size 1
        mirror = point_embed(space, w) - Cycle.constant(space)
        reflections.append(Reflection(mirror))
        u = reflect_point(mirror, u)
    if u != origin:
        # perpendicular bisector of u and 0, a line since both embeddings have a = 1
        reflections.append(Reflection(swap_mirror(space, u, origin)))
    return InversiveWord(space, tuple(reflections))


def map_pair_to_pair(
    space: QuadSpace, u: VPoint, w: VPoint, u2: VPoint, w2: VPoint
) -> InversiveWord:
    """A word of at most 4 reflections sending u to u2 and w to w2."""
    if u == w or u2 == w2:
        raise DegenerateInput("the points of each pair must be distinct")
    word = _normalizing_word(space, u, w) + _normalizing_word(space, u2, w2).inverse()
    logger.debug("pair (%s, %s) -> (%s, %s) by %d reflections", u, w, u2, w2, len(word))
    return word


def isotropic_frame(space: QuadSpace) -> List[VPoint]:
    """0, u_1, ..., u_n, inf and z = 2u_1 + u_2 + ... + u_n."""
    basis = [space.basis_vector(i) for i in range(space.dim)]
    z = basis[0] * 2
    for u in basis[1:]:
        z = z + u
    return [Finite(space.zero_vector)] + [Finite(u) for u in basis] + [Infinity(), Finite(z)]


def is_projective_frame(cycles: Sequence[Cycle]) -> bool:
    """Whether every dim F of the given cycles are linearly independent."""
    space = cycles[0].space
    size = space.dim + 2
    if len(cycles) < size:
        return False
    for subset in itertools.combinations(cycles, size):
        if linalg.determinant(space.field, [c.coords for c in subset]).is_zero:
            return False
    return True
