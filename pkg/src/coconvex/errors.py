"""Exception hierarchy shared by every module of the package."""


class GeometryError(ValueError):
    """Base class for invalid geometric input or failed certificates."""


class DimensionMismatch(GeometryError):
    pass


class EmptyInput(GeometryError):
    pass


# cones
class NotFullDimensional(GeometryError):
    pass


class ContainsLine(GeometryError):
    pass


class InteriorCertificateFailed(GeometryError):
    pass


class SectionNotCompact(GeometryError):
    pass


class NonpositiveOffset(GeometryError):
    pass


# coconvex bodies
class ApexOutsideCone(GeometryError):
    pass


class ComplementNotBounded(GeometryError):
    pass


class BodyEmpty(GeometryError):
    pass


class BodyZeroVolume(GeometryError):
    pass


class ConeMismatch(GeometryError):
    pass


class NonpositiveScale(GeometryError):
    pass


class HyperplaneTooLow(GeometryError):
    pass


# checks
class LambdaOutOfRange(GeometryError):
    pass


class ProjectionMismatch(GeometryError):
    pass


class PrecisionExhausted(ArithmeticError):
    """Interval bounds still overlap at the maximum precision."""


# oracle / io
class DegenerateBox(GeometryError):
    pass


class UnsupportedDimension(GeometryError):
    pass


class InstanceError(ValueError):
    """Problem with an instance document; `name` is the offending object."""

    def __init__(self, message, name=None):
        super().__init__(message if name is None else f"{name}: {message}")
        self.name = name


class InstanceSyntaxError(InstanceError):
    pass


class SchemaError(InstanceError):
    pass


class UnknownName(InstanceError):
    pass
