"""The cycle space F over a quadratic space E.

A cycle is the function p(X) = a X.X + b.X + c on E. Cycles carry the pairing

    <p, q> = b.b* - 2 a c* - 2 a* c

whose isotropic lines are the constants (the point at infinity) and the zero
circles a (X - w).(X - w) (the point w). Together these form V = E u {inf}.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, NamedTuple, Optional, Tuple
import itertools
import logging

import numpy as np

from inversive_geometry import linalg
from inversive_geometry.errors import (
    IsotropicVectorEncountered,
    NotACircle,
    NotIsotropic,
    SpaceMismatch,
    ZeroFunction,
)
from inversive_geometry.field_core import FieldElement
from inversive_geometry.quad_space import (
    DEFAULT_BUDGET,
    EVector,
    QuadSpace,
    bounded_elements,
    dot,
    norm_h,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cycle:
    """p(X) = a X.X + b.X + c over ``space``; the zero function is rejected."""

    space: QuadSpace
    a: FieldElement
    b: EVector
    c: FieldElement

    def __post_init__(self):
        field = self.space.field
        object.__setattr__(self, "a", field(self.a))
        object.__setattr__(self, "c", field(self.c))
        if not isinstance(self.b, EVector):
            object.__setattr__(self, "b", self.space.vector(self.b))
        elif self.b.space != self.space:
            raise SpaceMismatch("linear part lives in {}, cycle in {}".format(self.b.space, self.space))
        if self.a.is_zero and self.b.is_zero and self.c.is_zero:
            raise ZeroFunction("the zero function is not a cycle")

    @classmethod
    def from_coords(cls, space: QuadSpace, coords: Iterable) -> "Cycle":
        coords = list(coords)
        return cls(space, coords[0], space.vector(coords[1:-1]), coords[-1])

    @classmethod
    def constant(cls, space: QuadSpace, c=1) -> "Cycle":
        return cls(space, 0, space.zero_vector, c)

    @property
    def coords(self) -> Tuple[FieldElement, ...]:
        """Coordinates (a, b_1, ..., b_n, c)."""
        return (self.a,) + self.b.coords + (self.c,)

    def as_vector(self) -> np.ndarray:
        return linalg.to_vector(self.space.field, self.coords)

    def _combine(self, other: "Cycle", sign: int) -> "Cycle":
        if not isinstance(other, Cycle):
            return NotImplemented
        if other.space != self.space:
            raise SpaceMismatch("cannot combine cycles over {} and {}".format(self.space, other.space))
        return Cycle.from_coords(
            self.space, [x + sign * y for x, y in zip(self.coords, other.coords)]
        )

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return Cycle.from_coords(self.space, [-x for x in self.coords])

    def __mul__(self, scalar):
        if isinstance(scalar, Cycle):
            return NotImplemented
        scalar = self.space.field(scalar)
        return Cycle.from_coords(self.space, [scalar * x for x in self.coords])

    __rmul__ = __mul__

    def normalized(self) -> "Cycle":
        """The multiple whose first nonzero coordinate is 1."""
        lead = next(x for x in self.coords if not x.is_zero)
        return self * lead.inverse()

    def __str__(self):
        return format_cycle(self)


def format_cycle(p: Cycle) -> str:
    return "a={} b={} c={}".format(p.a, p.b, p.c)


class CycleKind(Enum):
    CONSTANT = "Constant"
    LINE = "Line"
    CIRCLE = "Circle"


@dataclass(frozen=True)
class CycleClass:
    kind: CycleKind
    zero_size: bool = False

    def __str__(self):
        if self.kind is CycleKind.CIRCLE:
            return "Circle(zero_size={})".format(self.zero_size)
        return self.kind.value


class CenterSize(NamedTuple):
    center: EVector
    size: FieldElement


class VPoint:
    """A point of V = E u {inf}: either Infinity() or Finite(vector)."""

    is_infinity = False


@dataclass(frozen=True)
class Infinity(VPoint):
    is_infinity = True

    def __str__(self):
        return "inf"


@dataclass(frozen=True)
class Finite(VPoint):
    vector: EVector

    @classmethod
    def of(cls, space: QuadSpace, coords) -> "Finite":
        if not isinstance(coords, (list, tuple)):
            coords = [coords]
        return cls(space.vector(coords))

    def __str__(self):
        return str(self.vector)


def _check_same_space(p: Cycle, q: Cycle):
    if p.space != q.space:
        raise SpaceMismatch("cycles over {} and {}".format(p.space, q.space))


def pairing(p: Cycle, q: Cycle) -> FieldElement:
    _check_same_space(p, q)
    return dot(p.space, p.b, q.b) - 2 * p.a * q.c - 2 * q.a * p.c


def gram_matrix(space: QuadSpace) -> np.ndarray:
    """Gram matrix of the pairing in the coordinates (a, b_1..b_n, c)."""
    n = space.dim
    rows = [[0] * (n + 2) for _ in range(n + 2)]
    rows[0][n + 1] = rows[n + 1][0] = -2
    for i, d in enumerate(space.diag):
        rows[i + 1][i + 1] = d
    return linalg.to_matrix(space.field, rows)


def classify(p: Cycle) -> CycleClass:
    if not p.a.is_zero:
        return CycleClass(CycleKind.CIRCLE, zero_size=pairing(p, p).is_zero)
    if not p.b.is_zero:
        return CycleClass(CycleKind.LINE)
    if not p.c.is_zero:
        return CycleClass(CycleKind.CONSTANT)
    raise ZeroFunction("the zero function has no class")


def center_and_size(p: Cycle) -> CenterSize:
    """Center -b/2a and size <p,p>/4a^2, so p = a (X - m).(X - m) - a s."""
    if p.a.is_zero:
        raise NotACircle("{} is not a circle".format(p))
    center = p.b * (-1 / (2 * p.a))
    size = pairing(p, p) / (4 * p.a * p.a)
    return CenterSize(center, size)


def point_embed(space: QuadSpace, v: VPoint) -> Cycle:
    """The isotropic cycle of a point: 1 for inf, (X - w).(X - w) for w."""
    if v.is_infinity:
        return Cycle.constant(space)
    w = v.vector
    if w.space != space:
        raise SpaceMismatch("point of {} embedded in {}".format(w.space, space))
    return Cycle(space, 1, w * -2, norm_h(space, w))


def point_extract(p: Cycle) -> VPoint:
    if not pairing(p, p).is_zero:
        raise NotIsotropic("{} is not isotropic".format(p))
    if p.a.is_zero:
        if not p.b.is_zero:
            # a line of norm b.b = 0
            raise IsotropicVectorEncountered("isotropic vector {} in {}".format(p.b, p.space))
        return Infinity()
    return Finite(p.b * (-1 / (2 * p.a)))


def evaluate(p: Cycle, x: EVector) -> FieldElement:
    space = p.space
    return p.a * norm_h(space, x) + dot(space, p.b, x) + p.c


def on_zero_set(p: Cycle, v: VPoint) -> bool:
    """Whether v is a zero of p; inf is a zero of every line and constant."""
    if v.is_infinity:
        return p.a.is_zero
    return evaluate(p, v.vector).is_zero


class ZeroSetStatus(Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class ZeroSetVerdict:
    status: ZeroSetStatus
    witness: Optional[VPoint] = None


def zero_set_nonempty(p: Cycle, budget: int = DEFAULT_BUDGET) -> ZeroSetVerdict:
    """Whether the circle p has a zero, i.e. whether h represents its size s.

    Finite fields and dimension 1 are decided exactly; over Q a definite form
    of the wrong sign gives No; otherwise a witness is searched up to ``budget``.
    """
    space = p.space
    field = space.field
    center, size = center_and_size(p)

    def found(offset: EVector) -> ZeroSetVerdict:
        return ZeroSetVerdict(ZeroSetStatus.YES, Finite(center + offset))

    if size.is_zero:
        return found(space.zero_vector)
    if field.is_finite:
        for x in space.vectors():
            if norm_h(space, x) == size:
                return found(x)
        return ZeroSetVerdict(ZeroSetStatus.NO)
    if space.dim == 1:
        root = field.sqrt_exact(size / space.diag[0])
        if root is None:
            return ZeroSetVerdict(ZeroSetStatus.NO)
        return found(space.vector([root]))
    if field.is_ordered:
        signs = {field.sign(d) for d in space.diag}
        if len(signs) == 1 and field.sign(size) != signs.pop():
            return ZeroSetVerdict(ZeroSetStatus.NO)
    values = bounded_elements(field, budget)
    for head in itertools.product(values, repeat=space.dim - 1):
        partial = field.zero
        for d, x in zip(space.diag, head):
            partial = partial + d * x * x
        last = field.sqrt_exact((size - partial) / space.diag[-1])
        if last is not None:
            return found(space.vector(list(head) + [last]))
    logger.debug("no zero of %s found up to height %d", p, budget)
    return ZeroSetVerdict(ZeroSetStatus.UNKNOWN)


def proj_equiv(p: Cycle, q: Cycle) -> bool:
    _check_same_space(p, q)
    return p.normalized() == q.normalized()


def all_vpoints(space: QuadSpace) -> List[VPoint]:
    """Every point of V over a finite field, inf first."""
    return [Infinity()] + [Finite(x) for x in space.vectors()]


def all_cycles(space: QuadSpace) -> List[Cycle]:
    """One normalized representative of every cycle over a finite field."""
    field = space.field
    if not field.is_finite:
        raise ValueError("cycles are enumerated over finite fields only")
    cycles = []
    for coords in itertools.product(list(field.elements()), repeat=space.dim + 2):
        lead = next((x for x in coords if not x.is_zero), None)
        if lead is not None and lead == field.one:
            cycles.append(Cycle.from_coords(space, coords))
    return cycles


def zero_set(p: Cycle) -> List[VPoint]:
    """The zeros of p in V, by exhaustion; finite fields only."""
    if not p.space.field.is_finite:
        raise ValueError("zero sets are enumerated over finite fields only")
    return [v for v in all_vpoints(p.space) if on_zero_set(p, v)]
