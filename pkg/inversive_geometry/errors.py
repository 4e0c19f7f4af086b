"""Exceptions raised by inversive_geometry.

All errors derive from InversiveGeometryError, a ValueError, so callers that
only care about bad input can keep catching ValueError.
"""


class InversiveGeometryError(ValueError):
    """Base class for every domain error of the package."""


# fields
class CharTwo(InversiveGeometryError):
    pass


class NotPrime(InversiveGeometryError):
    pass


class IsSquare(InversiveGeometryError):
    pass


class NotSquareFree(InversiveGeometryError):
    pass


class OrderingUnavailable(InversiveGeometryError):
    pass


class FieldMismatch(InversiveGeometryError):
    pass


# spaces and cycles
class DimensionMismatch(InversiveGeometryError):
    pass


class SpaceMismatch(InversiveGeometryError):
    pass


class NoAnisotropicForm(InversiveGeometryError):
    pass


class IsotropicVectorEncountered(InversiveGeometryError):
    """A nonzero vector of norm zero showed up in a space assumed anisotropic."""


class ZeroFunction(InversiveGeometryError):
    pass


class NotACircle(InversiveGeometryError):
    pass


class NotALine(InversiveGeometryError):
    pass


class NotIsotropic(InversiveGeometryError):
    pass


# transforms and pencils
class IsotropicMirror(InversiveGeometryError):
    pass


class ZeroSizeCircle(InversiveGeometryError):
    pass


class DegenerateInput(InversiveGeometryError):
    pass


class DependentCycles(InversiveGeometryError):
    pass


class NoRationalMembers(InversiveGeometryError):
    pass


# projective line
class DegenerateMoebius(InversiveGeometryError):
    pass


class DegenerateQuadric(InversiveGeometryError):
    pass


class SingularPencil(InversiveGeometryError):
    """The pencil restricted to the line is singular: no Desargues involution."""


# plane configurations
class Collinear(InversiveGeometryError):
    pass


class DegenerateAltitudes(InversiveGeometryError):
    pass


class DegenerateConfiguration(InversiveGeometryError):
    pass


class DegenerateConic(InversiveGeometryError):
    pass


class SingularRestriction(InversiveGeometryError):
    pass


class NotEnoughSamples(InversiveGeometryError):
    pass


class IncidenceFailure(InversiveGeometryError):
    pass


class ZeroVector(InversiveGeometryError):
    pass


# command line
class ParseError(InversiveGeometryError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line {}: {}".format(line, message)
        super().__init__(message)


class UnknownSuite(InversiveGeometryError):
    pass


class UnrenderableField(InversiveGeometryError):
    pass


class ParallelDiagonalPairWarning(UserWarning):
    """Two lines of an orthocentric configuration meet at infinity."""
