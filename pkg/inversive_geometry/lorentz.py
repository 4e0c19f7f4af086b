"""The Lorentz space L = k + E + k and its isometry S onto the cycle space.

    <t, t*> = y.y* + x x* - z z*
    S(x, y, z) = ((z - x) / 2) X.X - y.X + (z + x) / 2

S carries the isotropic cone of L onto the isotropic cycles, which is the
generalized stereographic projection from (1, 0, 1) to inf.
"""
from dataclasses import dataclass
import logging

from inversive_geometry.cycles import Cycle, Finite, Infinity, VPoint
from inversive_geometry.errors import NotIsotropic, SpaceMismatch, ZeroVector
from inversive_geometry.field_core import FieldElement
from inversive_geometry.quad_space import EVector, QuadSpace, dot

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LorentzVec:
    space: QuadSpace
    x: FieldElement
    y: EVector
    z: FieldElement

    def __post_init__(self):
        field = self.space.field
        object.__setattr__(self, "x", field(self.x))
        object.__setattr__(self, "z", field(self.z))
        if not isinstance(self.y, EVector):
            object.__setattr__(self, "y", self.space.vector(self.y))
        elif self.y.space != self.space:
            raise SpaceMismatch("{} is not a vector of {}".format(self.y, self.space))

    @property
    def is_zero(self) -> bool:
        return self.x.is_zero and self.y.is_zero and self.z.is_zero

    def __add__(self, other: "LorentzVec") -> "LorentzVec":
        return LorentzVec(self.space, self.x + other.x, self.y + other.y, self.z + other.z)

    def __mul__(self, scalar) -> "LorentzVec":
        scalar = self.space.field(scalar)
        return LorentzVec(self.space, scalar * self.x, self.y * scalar, scalar * self.z)

    __rmul__ = __mul__

    def __str__(self):
        return "({}; {}; {})".format(self.x, self.y, self.z)


def lorentz_product(t: LorentzVec, s: LorentzVec) -> FieldElement:
    if t.space != s.space:
        raise SpaceMismatch("Lorentz vectors over {} and {}".format(t.space, s.space))
    return dot(t.space, t.y, s.y) + t.x * s.x - t.z * s.z


def stereo_to_cycle(t: LorentzVec) -> Cycle:
    if t.is_zero:
        raise ZeroVector("S is applied to nonzero vectors only")
    return Cycle(t.space, (t.z - t.x) / 2, -t.y, (t.z + t.x) / 2)


def stereo_from_cycle(p: Cycle) -> LorentzVec:
    """Inverse of S: x = c - a, y = -b, z = a + c."""
    return LorentzVec(p.space, p.c - p.a, -p.b, p.a + p.c)


def u_to_v(t: LorentzVec) -> VPoint:
    """The point of V of an isotropic vector: inf for (1, 0, 1), y/(z - x) otherwise."""
    if t.is_zero:
        raise ZeroVector("the zero vector has no point")
    if not lorentz_product(t, t).is_zero:
        raise NotIsotropic("{} is not isotropic".format(t))
    if t.x == t.z:
        return Infinity()
    return Finite(t.y * (1 / (t.z - t.x)))
