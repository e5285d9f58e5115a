"""Half-area polygons: validation and the per-edge chord quantities.

A convex polygon with ``2n`` vertices is half-area when every principal
diagonal (vertex ``i`` to vertex ``i + n``) splits its area in half, or
equivalently when the two central diagonals of every side are parallel.
Validation here is dual: the algebraic parallelism test plus an
independent shoelace check of every principal chord.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DegenerateEdge,
    NonConvexResult,
    OddVertexCount,
    ParallelLines,
    ValidationFailed,
)
from .geom import AffineMap, Line, Vec2, bracket, line_intersection, polygon_signed_area
from .polygon import Polygon

__all__ = [
    "EdgeQuantities",
    "HalfAreaReport",
    "FrameCoefficients",
    "HalfAreaPolygon",
    "is_half_area",
    "construct_from_seed",
]


@dataclass(frozen=True)
class EdgeQuantities:
    """Chord quantities attached to the side from vertex ``i`` to ``i + 1``.

    ``v`` is the principal chord vector at the start vertex, ``side`` the
    edge vector, ``a_plus``/``a_minus`` the brackets of the side with the
    chord vectors at its two ends, ``delta`` the bracket with the opposite
    side, ``lam`` the central-diagonal length ratio and ``g = delta / a``.
    """

    v: Vec2
    side: Vec2
    a_plus: float
    a_minus: float
    a: float
    delta: float
    lam: float
    g: float


@dataclass(frozen=True)
class HalfAreaReport:
    """Outcome of the parallel-central-diagonal test with per-edge residuals."""

    ok: bool
    residuals: tuple[float, ...]
    max_residual: float
    threshold: float


@dataclass(frozen=True)
class FrameCoefficients:
    """Coefficients expanding the chord difference in the two local frames.

    ``v(i+1) - v(i) = alpha1 v(i) + beta1 side = alpha2 v(i+1) + beta2 side``;
    ``residual`` is the worst reconstruction error of the two expansions.
    """

    alpha1: float
    beta1: float
    alpha2: float
    beta2: float
    residual: float


def is_half_area(p: Polygon) -> HalfAreaReport:
    """Test whether the central diagonals of every side are parallel.

    The verdict compares the raw cross products against the polygon's area
    tolerance; the reported residuals are the dimensionless ratios
    ``|cross| / a`` per edge.
    """
    if p.m % 2 != 0:
        raise OddVertexCount(f"half-area test needs an even vertex count, got {p.m}")
    n = p.m // 2
    crosses = []
    ratios = []
    for i in range(p.m):
        cd1 = p.vertex(i + n + 1) - p.vertex(i)
        cd2 = p.vertex(i + n) - p.vertex(i + 1)
        cross = bracket(cd1, cd2)
        v_i = p.vertex(i + n) - p.vertex(i)
        v_next = p.vertex(i + n + 1) - p.vertex(i + 1)
        a = bracket(v_i, v_next)
        crosses.append(abs(cross))
        ratios.append(abs(cross) / abs(a) if a != 0.0 else math.inf)
    ok = max(crosses) <= p.area_tol
    return HalfAreaReport(ok, tuple(ratios), max(ratios), p.area_tol)


class HalfAreaPolygon:
    """A validated half-area polygon with cached per-edge quantities."""

    __slots__ = ("_base", "_n", "_edges", "_report")

    def __init__(self, base: Polygon) -> None:
        if base.m % 2 != 0:
            raise OddVertexCount(f"half-area polygon needs an even vertex count, got {base.m}")
        n = base.m // 2
        if n < 2:
            raise ValidationFailed("a half-area polygon needs at least 4 vertices")
        report = is_half_area(base)
        if not report.ok:
            raise ValidationFailed(
                f"central diagonals not parallel (max residual {report.max_residual:.3e})"
            )
        half = 0.5 * base.area
        for i in range(n):
            part = polygon_signed_area([base.vertex(j) for j in range(i, i + n + 1)])
            if abs(part - half) > base.area_tol:
                raise ValidationFailed(
                    f"principal chord {i} misses half area by {abs(part - half):.3e}"
                )
        self._base = base
        self._n = n
        self._report = report
        self._edges = tuple(self._edge_quantities(i) for i in range(base.m))

    def _edge_quantities(self, i: int) -> EdgeQuantities:
        b = self._base
        n = self._n
        side = b.edge_vector(i)
        v_i = b.vertex(i + n) - b.vertex(i)
        v_next = b.vertex(i + n + 1) - b.vertex(i + 1)
        a_plus = bracket(side, v_i)
        a_minus = bracket(side, v_next)
        a = a_plus + a_minus
        delta = bracket(side, b.edge_vector(i + n))
        lam_num = (b.vertex(i + 1) - b.vertex(i + n)).norm()
        lam_den = (b.vertex(i) - b.vertex(i + n + 1)).norm()
        lam = lam_num / lam_den
        return EdgeQuantities(v_i, side, a_plus, a_minus, a, delta, lam, delta / a)

    @property
    def base(self) -> Polygon:
        return self._base

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._base.m

    @property
    def area(self) -> float:
        return self._base.area

    @property
    def diameter(self) -> float:
        return self._base.diameter

    @property
    def area_tol(self) -> float:
        return self._base.area_tol

    @property
    def length_tol(self) -> float:
        return self._base.length_tol

    @property
    def vertices(self) -> tuple[Vec2, ...]:
        return self._base.vertices

    @property
    def validation_report(self) -> HalfAreaReport:
        return self._report

    def vertex(self, i: int) -> Vec2:
        return self._base.vertex(i)

    def edge_vector(self, i: int) -> Vec2:
        return self._base.edge_vector(i)

    def side_line(self, i: int) -> Line:
        return self._base.side_line(i)

    def chord_vector(self, i: int) -> Vec2:
        """Principal chord vector at vertex ``i``: vertex(i + n) - vertex(i)."""
        return self._edges[i % self.m].v

    def principal_line(self, i: int) -> Line:
        """The bisecting line through vertex ``i`` and vertex ``i + n``."""
        return Line(self.vertex(i), self.chord_vector(i))

    def edge_quantities(self, i: int) -> EdgeQuantities:
        return self._edges[i % self.m]

    def frame_coefficients(self, i: int) -> FrameCoefficients:
        """Expand the chord difference over the two ends of edge ``i``.

        Raises :class:`DegenerateEdge` when either bracket divisor is below
        the area tolerance.
        """
        q = self.edge_quantities(i)
        tol = self.area_tol
        if abs(q.a_plus) <= tol or abs(q.a_minus) <= tol:
            raise DegenerateEdge(f"edge {i % self.m}: chord bracket below tolerance")
        alpha1 = q.delta / q.a_plus
        beta1 = -q.a / q.a_plus
        alpha2 = q.delta / q.a_minus
        beta2 = -q.a / q.a_minus
        v_prime = self.chord_vector(i + 1) - q.v
        r1 = (q.v * alpha1 + q.side * beta1 - v_prime).norm()
        r2 = (self.chord_vector(i + 1) * alpha2 + q.side * beta2 - v_prime).norm()
        return FrameCoefficients(alpha1, beta1, alpha2, beta2, max(r1, r2))

    def transform(self, affine: AffineMap) -> "HalfAreaPolygon":
        return HalfAreaPolygon(self._base.transform(affine))

    def __repr__(self) -> str:  # pragma: no cover
        return f"HalfAreaPolygon(n={self._n}, area={self.area:.6g})"


def construct_from_seed(seed: Sequence[Vec2], positions: Sequence[float]) -> HalfAreaPolygon:
    """Build a half-area ``2n``-gon from ``n + 1`` seed vertices.

    The first ``n + 1`` vertices are the seed.  Each further vertex
    ``n + k`` (``k = 2 .. n - 1``) sits on the line through vertex
    ``k - 1`` parallel to the central diagonal from vertex ``k`` to vertex
    ``n + k - 1``, offset by ``positions[k - 2]`` in units of that
    diagonal; the final vertex closes the cycle as the intersection of the
    two remaining parallel constraints.  ``positions`` of all ones
    reproduce a centrally symmetric seed exactly.
    """
    pts = [p if isinstance(p, Vec2) else Vec2(float(p[0]), float(p[1])) for p in seed]
    n = len(pts) - 1
    if n < 2:
        raise NonConvexResult("seed needs at least 3 points")
    if len(positions) != n - 2:
        raise NonConvexResult(f"expected {n - 2} position scalars, got {len(positions)}")

    for k in range(2, n):
        t = float(positions[k - 2])
        pts.append(pts[k - 2] + (pts[n + k - 2] - pts[k - 1]) * t)

    l1 = Line(pts[n - 2], pts[2 * n - 2] - pts[n - 1])
    l2 = Line(pts[n], pts[n - 1] - pts[0])
    try:
        pts.append(line_intersection(l1, l2))
    except ParallelLines:
        raise
    try:
        base = Polygon(pts)
    except Exception as exc:
        raise NonConvexResult(f"seed parameters gave a non-convex cycle: {exc}") from exc
    try:
        return HalfAreaPolygon(base)
    except ValidationFailed as exc:  # pragma: no cover - construction enforces parallelism
        raise NonConvexResult(str(exc)) from exc
