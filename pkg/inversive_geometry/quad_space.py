"""Diagonal quadratic spaces E = (k^n, h) and their anisotropy."""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Iterable, List, Optional, Tuple
import itertools
import logging

from inversive_geometry.errors import (
    DegenerateInput,
    DimensionMismatch,
    NoAnisotropicForm,
    SpaceMismatch,
)
from inversive_geometry.field_core import Field, FieldElement

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 8


class AnisotropyStatus(Enum):
    PROVEN = "Proven"
    REFUTED = "Refuted"
    UNKNOWN = "Unknown"
    ASSUMED_BY_USER = "AssumedByUser"


@dataclass(frozen=True)
class AnisotropyVerdict:
    status: AnisotropyStatus
    witness: Optional["EVector"] = None


@dataclass(frozen=True)
class QuadSpace:
    """k^n with the form h(x) = d_1 x_1^2 + ... + d_n x_n^2.

    Over a finite field only n <= 2 is accepted: no anisotropic form exists in
    higher dimension.
    """

    field: Field
    diag: Tuple[FieldElement, ...]

    def __post_init__(self):
        diag = tuple(self.field(d) for d in self.diag)
        object.__setattr__(self, "diag", diag)
        if not diag:
            raise DegenerateInput("a quadratic space needs dimension >= 1")
        if any(d.is_zero for d in diag):
            raise DegenerateInput("diagonal coefficients must be nonzero")
        if self.field.is_finite and len(diag) > 2:
            raise NoAnisotropicForm(
                "{} has no anisotropic form of dimension {}".format(self.field, len(diag))
            )

    def __str__(self):
        return "{} diag {}".format(self.field, " ".join(str(d) for d in self.diag))

    @property
    def dim(self) -> int:
        return len(self.diag)

    @cached_property
    def status(self) -> AnisotropyStatus:
        """Proven or Refuted when decidable, AssumedByUser otherwise."""
        status = verify_anisotropic(self).status
        if status is AnisotropyStatus.UNKNOWN:
            return AnisotropyStatus.ASSUMED_BY_USER
        return status

    def vector(self, coords: Iterable) -> "EVector":
        return EVector(self, tuple(coords))

    @cached_property
    def zero_vector(self) -> "EVector":
        return self.vector([0] * self.dim)

    def basis_vector(self, i: int) -> "EVector":
        return self.vector([1 if j == i else 0 for j in range(self.dim)])

    def vectors(self) -> Iterable["EVector"]:
        """Every vector of a finite space, lexicographically."""
        for coords in itertools.product(list(self.field.elements()), repeat=self.dim):
            yield EVector(self, coords)

    def dot(self, x: "EVector", y: "EVector") -> FieldElement:
        return dot(self, x, y)

    def h(self, x: "EVector") -> FieldElement:
        return norm_h(self, x)


@dataclass(frozen=True)
class EVector:
    space: QuadSpace
    coords: Tuple[FieldElement, ...]

    def __post_init__(self):
        coords = tuple(self.space.field(c) for c in self.coords)
        if len(coords) != self.space.dim:
            raise DimensionMismatch(
                "{} coordinates for a space of dimension {}".format(len(coords), self.space.dim)
            )
        object.__setattr__(self, "coords", coords)

    def _same_space(self, other: "EVector"):
        if not isinstance(other, EVector):
            return NotImplemented
        _check_vector(self.space, other)
        return other

    def __add__(self, other):
        other = self._same_space(other)
        if other is NotImplemented:
            return other
        return EVector(self.space, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        other = self._same_space(other)
        if other is NotImplemented:
            return other
        return EVector(self.space, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return EVector(self.space, tuple(-x for x in self.coords))

    def __mul__(self, scalar):
        if isinstance(scalar, EVector):
            return NotImplemented
        scalar = self.space.field(scalar)
        return EVector(self.space, tuple(scalar * x for x in self.coords))

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return all(x.is_zero for x in self.coords)

    def __str__(self):
        return ",".join(str(x) for x in self.coords)


def _check_vector(space: QuadSpace, x: EVector):
    if len(x.coords) != space.dim:
        raise DimensionMismatch("vector of dimension {} in a space of dimension {}".format(
            len(x.coords), space.dim))
    if x.space != space:
        raise SpaceMismatch("vector of {} used in {}".format(x.space, space))


def dot(space: QuadSpace, x: EVector, y: EVector) -> FieldElement:
    _check_vector(space, x)
    _check_vector(space, y)
    total = space.field.zero
    for d, xi, yi in zip(space.diag, x.coords, y.coords):
        total = total + d * xi * yi
    return total


def norm_h(space: QuadSpace, x: EVector) -> FieldElement:
    return dot(space, x, x)


def bounded_elements(field: Field, budget: int = DEFAULT_BUDGET) -> List[FieldElement]:
    """Search values: all of a finite field, else rationals of height <= budget.

    Rationals come in order of increasing height: 0, 1, -1, 2, -2, 1/2, -1/2, ...
    """
    if field.is_finite:
        return list(field.elements())
    values = [Fraction(0)]
    seen = {Fraction(0)}
    for height in range(1, budget + 1):
        for den in range(1, height + 1):
            for num in range(0, height + 1):
                if max(num, den) != height:
                    continue
                for value in (Fraction(num, den), Fraction(-num, den)):
                    if value not in seen:
                        seen.add(value)
                        values.append(value)
    return [field(v) for v in values]


def _integers_by_size(budget: int):
    yield 0
    for k in range(1, budget + 1):
        yield k
        yield -k


def verify_anisotropic(space: QuadSpace, budget: int = DEFAULT_BUDGET) -> AnisotropyVerdict:
    """Decide anisotropy of h where we can, else search a witness up to ``budget``.

    Dimension 1 is always anisotropic, a binary form is anisotropic iff -d_1 d_2
    is not a square, and a definite form over Q is anisotropic. Over finite fields
    a refuting witness is the lexicographically first isotropic vector.
    """
    field, diag = space.field, space.diag
    if space.dim == 1:
        return AnisotropyVerdict(AnisotropyStatus.PROVEN)
    if space.dim == 2:
        discriminant = -diag[0] * diag[1]
        root = field.sqrt_exact(discriminant)
        if root is None:
            return AnisotropyVerdict(AnisotropyStatus.PROVEN)
        if field.is_finite:
            for x in space.vectors():
                if not x.is_zero and norm_h(space, x).is_zero:
                    return AnisotropyVerdict(AnisotropyStatus.REFUTED, x)
        # d_1 root^2 + d_2 d_1^2 = d_1 (-d_1 d_2) + d_2 d_1^2 = 0
        return AnisotropyVerdict(AnisotropyStatus.REFUTED, space.vector([root, diag[0]]))
    if field.is_ordered:
        signs = {field.sign(d) for d in diag}
        if len(signs) == 1:
            return AnisotropyVerdict(AnisotropyStatus.PROVEN)
    # first n - 1 coordinates bounded integers, the last one solved exactly
    for head in itertools.product(list(_integers_by_size(budget)), repeat=space.dim - 1):
        partial = field.zero
        for d, x in zip(diag, head):
            partial = partial + d * x * x
        last = field.sqrt_exact(-partial / diag[-1])
        if last is None:
            continue
        witness = space.vector(list(head) + [last])
        if not witness.is_zero:
            return AnisotropyVerdict(AnisotropyStatus.REFUTED, witness)
    logger.debug("no isotropic vector of %s up to height %d", space, budget)
    return AnisotropyVerdict(AnisotropyStatus.UNKNOWN)
