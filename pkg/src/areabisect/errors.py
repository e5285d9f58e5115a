"""Exception types shared across the geometry kernel and its tools."""


class GeometryError(Exception):
    """Base class for every error raised by this package."""


class ParallelLines(GeometryError):
    """Two lines required to intersect are parallel within tolerance."""


class NoConvergence(GeometryError):
    """An iterative search failed to reach the requested tolerance."""


class DegenerateInput(GeometryError):
    """Input geometry too degenerate to process (needle, empty, non-convex)."""


class OddVertexCount(GeometryError):
    """An operation requiring an even vertex count received an odd one."""


class DegenerateEdge(GeometryError):
    """An edge quantity needed as a divisor vanished within tolerance."""


class NonConvexResult(GeometryError):
    """A construction produced a non-convex vertex cycle."""


class ValidationFailed(GeometryError):
    """A polygon failed half-area validation."""


class NotATrapezoid(GeometryError):
    """The four corners do not form a convex quadrilateral with the first and
    third sides parallel."""


class RetriesExhausted(GeometryError):
    """Rejection sampling hit the retry limit without an acceptable sample."""


class EpsilonTooLarge(GeometryError):
    """The outward offset breaks convexity or the half-area property."""


class InconsistentArc(GeometryError):
    """The two endpoints of a hyperbolic arc disagree on its constant."""


class CriteriaDisagree(GeometryError):
    """The cusp criteria disagree at a vertex; carries the full report."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class ClassificationConflict(GeometryError):
    """The diagonal-ratio test and the point-envelope test disagree."""


class OutsideValidInterval(GeometryError):
    """The family parameter lies outside the convexity interval."""


class AllEdgesParallel(GeometryError):
    """Every side is parallel to its opposite; no edge qualifies for the test."""


class MalformedDocument(GeometryError):
    """A polygon document violates the JSON schema."""
