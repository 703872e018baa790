"""Exception types raised by the solver stack."""


class CurveError(Exception):
    """Base class for all lacurves errors."""


class DomainError(CurveError):
    """Parameter lies outside the representable branch for the given alpha."""


class AmbiguousParameter(DomainError):
    """A tangential angle with two arc-length preimages was given without a branch."""


class QuadratureError(CurveError):
    """Adaptive integration failed to reach the requested tolerance."""


class SingularCurvature(CurveError):
    """Curvature is unbounded (cusp) at the requested parameter."""


class ParallelTangents(CurveError):
    """The first tangent vector is parallel to the last tangent line."""


class DegenerateTriangle(CurveError):
    """The control triangle collapses (B coincides with an endpoint or lies on AC)."""


class NotSimilar(CurveError):
    """The solved standard triangle does not match the target triangle."""


class NotFound(CurveError):
    """A bisection exhausted its bracket without meeting the residual target."""

    def __init__(self, message, bracket=None, iterations=0):
        super().__init__(message)
        self.bracket = bracket
        self.iterations = iterations


class Unreachable(CurveError):
    """The requested tangent length lies at or beyond the theoretical limits."""

    def __init__(self, message, attainable=None):
        super().__init__(message)
        self.attainable = attainable  # (min_length, max_length), open interval


class NoPositiveRoot(CurveError):
    """The touching-circle system has no positive radius solution."""


class SchemaError(CurveError):
    """A problem/solution document violates the v1 schema."""

    def __init__(self, message, path=None):
        super().__init__(message if path is None else f"{path}: {message}")
        self.path = path
