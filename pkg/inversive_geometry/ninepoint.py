"""Orthocentric configurations and the nine-point circle over any field.

Points of the affine plane are (u, v), homogeneously (u, v, 1); lines are
coefficient triples (l1, l2, l3) of l1 u + l2 v + l3 w. The altitudes use the
standard product (u, v).(u', v') = uu' + vv'.

Given a triangle M, N, P with orthocenter T, the two line pairs MT.NP and
NT.MP span the pencil of conics through M, N, P, T. The poles of a line D with
respect to its members lie on a conic; for D the line at infinity the poles are
the centers, and the conic is the nine-point circle.
"""
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple
import itertools
import logging
import warnings

import numpy as np

from inversive_geometry import linalg
from inversive_geometry.cycles import Cycle, evaluate
from inversive_geometry.errors import (
    Collinear,
    DegenerateAltitudes,
    DegenerateConfiguration,
    DegenerateConic,
    IncidenceFailure,
    InversiveGeometryError,
    NotEnoughSamples,
    ParallelDiagonalPairWarning,
    SingularRestriction,
    ZeroFunction,
)
from inversive_geometry.field_core import DEFAULT_HEIGHT, Field, FieldElement
from inversive_geometry.projline import (
    BinaryQuadric,
    Moebius,
    desargues_condition,
    desargues_involution,
    polar_involution,
)
from inversive_geometry.quad_space import QuadSpace

logger = logging.getLogger(__name__)

DEFAULT_PARAMETER_BUDGET = 64


@dataclass(frozen=True)
class PlanePoint:
    field: Field
    u: FieldElement
    v: FieldElement

    def __post_init__(self):
        object.__setattr__(self, "u", self.field(self.u))
        object.__setattr__(self, "v", self.field(self.v))

    @property
    def homogeneous(self) -> Tuple[FieldElement, FieldElement, FieldElement]:
        return (self.u, self.v, self.field.one)

    def midpoint(self, other: "PlanePoint") -> "PlanePoint":
        """Barycentric (1/2) self + (1/2) other."""
        return PlanePoint(self.field, (self.u + other.u) / 2, (self.v + other.v) / 2)

    def __sub__(self, other: "PlanePoint") -> Tuple[FieldElement, FieldElement]:
        return (self.u - other.u, self.v - other.v)

    def __str__(self):
        return "({}, {})".format(self.u, self.v)


def _cross(x: Sequence, y: Sequence) -> Tuple:
    return (
        x[1] * y[2] - x[2] * y[1],
        x[2] * y[0] - x[0] * y[2],
        x[0] * y[1] - x[1] * y[0],
    )


def _dehomogenize(field: Field, point: Sequence) -> Optional[PlanePoint]:
    if point[2].is_zero:
        return None
    return PlanePoint(field, point[0] / point[2], point[1] / point[2])


@dataclass(frozen=True)
class Line:
    """l1 u + l2 v + l3 w = 0."""

    field: Field
    coefficients: Tuple[FieldElement, FieldElement, FieldElement]

    def __post_init__(self):
        coefficients = tuple(self.field(x) for x in self.coefficients)
        if all(x.is_zero for x in coefficients):
            raise DegenerateConfiguration("a line needs a nonzero coefficient")
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def through(cls, p: PlanePoint, q: PlanePoint) -> "Line":
        if p == q:
            raise DegenerateConfiguration("a line needs two distinct points")
        return cls(p.field, _cross(p.homogeneous, q.homogeneous))

    @classmethod
    def at_infinity(cls, field: Field) -> "Line":
        return cls(field, (0, 0, 1))

    def contains(self, p: PlanePoint) -> bool:
        return sum((l * x for l, x in zip(self.coefficients, p.homogeneous)), self.field.zero).is_zero

    def meet(self, other: "Line") -> Optional[PlanePoint]:
        """The common affine point, or None when the lines are parallel."""
        return _dehomogenize(self.field, _cross(self.coefficients, other.coefficients))

    def __str__(self):
        l1, l2, l3 = self.coefficients
        return "{} u + {} v + {} = 0".format(l1, l2, l3)


@dataclass(frozen=True)
class Conic:
    """A u^2 + B uv + C v^2 + D uw + E vw + F w^2."""

    field: Field
    coefficients: Tuple[FieldElement, ...]

    def __post_init__(self):
        coefficients = tuple(self.field(x) for x in self.coefficients)
        if len(coefficients) != 6:
            raise ValueError("a conic has 6 coefficients")
        if all(x.is_zero for x in coefficients):
            raise DegenerateConic("the zero conic")
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def from_line_pair(cls, l: Line, m: Line) -> "Conic":
        l1, l2, l3 = l.coefficients
        m1, m2, m3 = m.coefficients
        return cls(
            l.field,
            (
                l1 * m1,
                l1 * m2 + l2 * m1,
                l2 * m2,
                l1 * m3 + l3 * m1,
                l2 * m3 + l3 * m2,
                l3 * m3,
            ),
        )

    def matrix(self) -> np.ndarray:
        A, B, C, D, E, F = self.coefficients
        return linalg.to_matrix(
            self.field, [[A, B / 2, D / 2], [B / 2, C, E / 2], [D / 2, E / 2, F]]
        )

    def evaluate_homogeneous(self, point: Sequence) -> FieldElement:
        u, v, w = point
        A, B, C, D, E, F = self.coefficients
        return A * u * u + B * u * v + C * v * v + D * u * w + E * v * w + F * w * w

    def contains(self, p: PlanePoint) -> bool:
        return self.evaluate_homogeneous(p.homogeneous).is_zero

    @property
    def is_degenerate(self) -> bool:
        return linalg.determinant(self.field, self.matrix()).is_zero

    def combine(self, other: "Conic", alpha, beta) -> "Conic":
        alpha, beta = self.field(alpha), self.field(beta)
        return Conic(
            self.field,
            tuple(alpha * x + beta * y for x, y in zip(self.coefficients, other.coefficients)),
        )

    def normalized(self) -> "Conic":
        lead = next(x for x in self.coefficients if not x.is_zero)
        return Conic(self.field, tuple(x / lead for x in self.coefficients))

    def __str__(self):
        return "{} u^2 + {} uv + {} v^2 + {} u + {} v + {}".format(*self.coefficients)


def orthocenter(M: PlanePoint, N: PlanePoint, P: PlanePoint) -> PlanePoint:
    """Common point of the three altitudes."""
    field = M.field
    if linalg.determinant(field, [M.homogeneous, N.homogeneous, P.homogeneous]).is_zero:
        raise Collinear("{}, {}, {} are collinear".format(M, N, P))

    def altitude(vertex: PlanePoint, a: PlanePoint, b: PlanePoint) -> Line:
        du, dv = b - a
        if (du * du + dv * dv).is_zero:
            raise DegenerateAltitudes("side {} {} has an isotropic direction".format(a, b))
        return Line(field, (du, dv, -(du * vertex.u + dv * vertex.v)))

    altitudes = [altitude(M, N, P), altitude(N, M, P), altitude(P, M, N)]
    T = altitudes[0].meet(altitudes[1])
    if T is None:
        raise DegenerateAltitudes("the altitudes are parallel")
    if not altitudes[2].contains(T):
        raise IncidenceFailure("the third altitude misses {}".format(T))
    return T


@dataclass(frozen=True)
class OrthoConfig:
    """A triangle M, N, P with its orthocenter T off every side line."""

    M: PlanePoint
    N: PlanePoint
    P: PlanePoint
    T: PlanePoint

    @classmethod
    def from_triangle(cls, M: PlanePoint, N: PlanePoint, P: PlanePoint) -> "OrthoConfig":
        T = orthocenter(M, N, P)
        for a, b in ((M, N), (N, P), (M, P)):
            if Line.through(a, b).contains(T):
                raise DegenerateConfiguration("the orthocenter {} lies on side {} {}".format(T, a, b))
        return cls(M, N, P, T)

    @property
    def field(self) -> Field:
        return self.M.field


def orthic_pencil(cfg: OrthoConfig) -> Tuple[Conic, Conic]:
    """The line pairs MT.NP and NT.MP, spanning the conics through M, N, P, T."""
    M, N, P, T = cfg.M, cfg.N, cfg.P, cfg.T
    return (
        Conic.from_line_pair(Line.through(M, T), Line.through(N, P)),
        Conic.from_line_pair(Line.through(N, T), Line.through(M, P)),
    )


def _normalize_point(point: Sequence) -> Tuple[FieldElement, ...]:
    lead = next(x for x in reversed(point) if not x.is_zero)
    return tuple(x / lead for x in point)


def pole_of_line(conic: Conic, line: Line) -> Tuple[FieldElement, ...]:
    """C^-1 D, scaled so that its last nonzero coordinate is 1."""
    try:
        inverse = linalg.inverse(conic.field, conic.matrix())
    except ZeroDivisionError:
        raise DegenerateConic("{} is degenerate".format(conic))
    pole = inverse @ linalg.to_vector(conic.field, line.coefficients)
    return _normalize_point(pole)


def polar_of_point(conic: Conic, point: Sequence) -> Line:
    return Line(conic.field, tuple(conic.matrix() @ linalg.to_vector(conic.field, point)))


def restrict_to_line(conic: Conic, line: Line) -> BinaryQuadric:
    """The binary quadric of the conic on the line, parametrized by its nullspace basis.

    For the line at infinity w = 0 this is A u^2 + B uv + C v^2.
    """
    r0, r1 = linalg.nullspace(line.field, [line.coefficients])
    m = conic.matrix()
    A = r0 @ m @ r0
    C = r1 @ m @ r1
    B = 2 * (r0 @ m @ r1)
    return BinaryQuadric(conic.field, A, B, C)


def _pencil_parameters(field: Field) -> Iterator[Optional[FieldElement]]:
    """None stands for the member q1; then 0, 1, -1, 2, -2, ... or all of a finite field."""
    yield None
    if field.is_finite:
        yield from field.elements()
        return
    yield field.zero
    for k in itertools.count(1):
        yield field(k)
        yield field(-k)


def _conic_row(point: Sequence) -> List[FieldElement]:
    u, v, w = point
    return [u * u, u * v, v * v, u * w, v * w, w * w]


def eleven_point_conic(
    q0: Conic, q1: Conic, line: Line, parameter_budget: int = DEFAULT_PARAMETER_BUDGET
) -> Conic:
    """The conic through the poles of ``line`` with respect to the members of a pencil.

    Five poles of nondegenerate members determine it; any further poles found
    within the budget must lie on it. Over a small finite field the pencil may have
    only five nondegenerate members with distinct poles (F_7 typically does), so no
    spare pole is left and the conic goes unchecked here; nine_point_circle then
    relies on the incidence of the nine points alone.
    """
    field = q0.field
    try:
        regular = desargues_condition(restrict_to_line(q0, line), restrict_to_line(q1, line))
    except ZeroFunction:
        regular = False
    if not regular:
        raise SingularRestriction("the pencil restricted to {} is singular".format(line))
    poles, rows, extra = [], [], []
    for parameter in itertools.islice(_pencil_parameters(field), parameter_budget):
        member = q1 if parameter is None else q0.combine(q1, 1, parameter)
        if member.is_degenerate:
            logger.debug("skipping degenerate member at parameter %s", parameter)
            continue
        pole = pole_of_line(member, line)
        if pole in poles:
            continue
        poles.append(pole)
        if len(rows) < 5 or linalg.rank(field, rows) < 5:
            rows.append(_conic_row(pole))
        else:
            extra.append(pole)
        if len(extra) >= 2:
            break
    if linalg.rank(field, rows) < 5:
        raise NotEnoughSamples(
            "only {} independent poles within {} parameters".format(linalg.rank(field, rows), parameter_budget)
        )
    (coefficients,) = linalg.nullspace(field, rows)
    conic = Conic(field, tuple(coefficients)).normalized()
    for pole in extra:
        if not conic.evaluate_homogeneous(pole).is_zero:
            raise IncidenceFailure("pole {} is off the interpolated conic".format(pole))
    if not extra:
        logger.info("no spare pole to check the conic over %s", field)
    return conic


def nine_points(cfg: OrthoConfig) -> List[Optional[PlanePoint]]:
    """Midpoints of MN, PT, MP, NT, MT, NP, then MN^PT, MP^NT, MT^NP.

    An intersection at infinity is returned as None with a warning.
    """
    M, N, P, T = cfg.M, cfg.N, cfg.P, cfg.T
    pairs = [(M, N), (P, T), (M, P), (N, T), (M, T), (N, P)]
    points: List[Optional[PlanePoint]] = [a.midpoint(b) for a, b in pairs]
    for first, second in zip(pairs[0::2], pairs[1::2]):
        meet = Line.through(*first).meet(Line.through(*second))
        if meet is None:
            warnings.warn(
                "lines {}{} and {}{} are parallel".format(*first, *second),
                ParallelDiagonalPairWarning,
            )
        points.append(meet)
    return points


def plane_space(field: Field) -> QuadSpace:
    return QuadSpace(field, (1, 1))


def conic_to_cycle(conic: Conic) -> Cycle:
    """A (u^2 + v^2) + D u + E v + F as a cycle of the standard plane."""
    A, B, C, D, E, F = conic.coefficients
    if not B.is_zero or A != C or A.is_zero:
        raise IncidenceFailure("{} is not a circle".format(conic))
    return Cycle(plane_space(conic.field), A, (D, E), F)


def nine_point_circle(cfg: OrthoConfig, parameter_budget: int = DEFAULT_PARAMETER_BUDGET) -> Cycle:
    """The eleven-point conic for the line at infinity, checked on the nine points.

    The nine-point incidence always runs, so it is the only check of the conic when
    eleven_point_conic found no spare pole.
    """
    q0, q1 = orthic_pencil(cfg)
    conic = eleven_point_conic(q0, q1, Line.at_infinity(cfg.field), parameter_budget)
    circle = conic_to_cycle(conic)
    space = circle.space
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ParallelDiagonalPairWarning)
        points = nine_points(cfg)
    for point in points:
        if point is not None and not evaluate(circle, space.vector([point.u, point.v])).is_zero:
            raise IncidenceFailure("{} is off the nine-point circle".format(point))
    return circle


def induced_involutions(q0: Conic, q1: Conic, line: Line, parameter_budget: int = DEFAULT_PARAMETER_BUDGET) -> Tuple[Moebius, Moebius]:
    """On ``line``: the polar involution of the eleven-point conic and the Desargues
    involution of the pencil. The two agree."""
    conic = eleven_point_conic(q0, q1, line, parameter_budget)
    polar = polar_involution(restrict_to_line(conic, line))
    desargues = desargues_involution(restrict_to_line(q0, line), restrict_to_line(q1, line))
    return polar, desargues


def sample_configurations(
    field: Field, seed: int, count: int, height: int = DEFAULT_HEIGHT
) -> List[OrthoConfig]:
    """Valid orthocentric configurations; invalid triangles are skipped."""
    rng = np.random.default_rng(seed)
    configurations = []
    attempts = 0
    while len(configurations) < count:
        attempts += 1
        if attempts > 50 * count + 100:
            raise NotEnoughSamples("found {} configurations in {} attempts".format(len(configurations), attempts))
        M, N, P = [
            PlanePoint(field, field.random_element(rng, height), field.random_element(rng, height))
            for _ in range(3)
        ]
        try:
            cfg = OrthoConfig.from_triangle(M, N, P)
            with warnings.catch_warnings():
                warnings.simplefilter("error", ParallelDiagonalPairWarning)
                nine_points(cfg)
        except (InversiveGeometryError, ParallelDiagonalPairWarning) as exc:
            logger.debug("skipping triangle %s %s %s: %s", M, N, P, exc)
            continue
        configurations.append(cfg)
    return configurations
