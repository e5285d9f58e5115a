"""Convex polygon model, boundary points, and the area-bisection oracle.

The bisecting-chord search is deliberately brute force: it bisects the
cumulative boundary-area function, independent of any of the closed-form
chord quantities, so it can serve as an oracle for them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence

from .errors import DegenerateInput, NoConvergence
from .geom import AffineMap, Line, Tolerance, Vec2, bracket, polygon_signed_area

if TYPE_CHECKING:  # pragma: no cover
    from .halfarea import HalfAreaPolygon

__all__ = [
    "Polygon",
    "BoundaryPoint",
    "boundary_point_coords",
    "bisecting_chord_from",
    "augment_to_half_area",
]

_BISECT_MAX_ITER = 200
# Vertex-merge threshold used by augmentation, relative to the diameter.
_DEDUP_REL = 1e-9


def _as_vec(value) -> Vec2:
    if isinstance(value, Vec2):
        return value
    return Vec2(float(value[0]), float(value[1]))


class Polygon:
    """A convex vertex cycle, stored counterclockwise.

    Clockwise input is reversed silently.  Collinear vertex triples are
    allowed; zero-length edges and non-convex cycles are rejected.
    """

    __slots__ = ("_vertices", "_area", "_diameter", "_tol")

    def __init__(self, vertices: Iterable) -> None:
        pts = [_as_vec(v) for v in vertices]
        if len(pts) < 3:
            raise DegenerateInput("a polygon needs at least 3 vertices")
        signed = polygon_signed_area(pts)
        if signed < 0.0:
            pts.reverse()
            signed = -signed
        if signed == 0.0:
            raise DegenerateInput("polygon has zero area")
        diameter = max(
            (pts[i] - pts[j]).norm() for i in range(len(pts)) for j in range(i + 1, len(pts))
        )
        tol = Tolerance(scale=signed)
        m = len(pts)
        turning = 0.0
        for i in range(m):
            e0 = pts[(i + 1) % m] - pts[i]
            e1 = pts[(i + 2) % m] - pts[(i + 1) % m]
            if e0.norm() <= 1e-12 * diameter:
                raise DegenerateInput(f"edge {i} has near-zero length")
            cross = bracket(e0, e1)
            if cross < -tol.area:
                raise DegenerateInput(f"non-convex corner at vertex {(i + 1) % m}")
            turning += math.atan2(cross, e0.dot(e1))
        if abs(turning - 2.0 * math.pi) > 1e-6:
            raise DegenerateInput("vertex cycle winds more than once")
        self._vertices = tuple(pts)
        self._area = signed
        self._diameter = diameter
        self._tol = tol

    @property
    def vertices(self) -> tuple[Vec2, ...]:
        return self._vertices

    @property
    def m(self) -> int:
        return len(self._vertices)

    @property
    def area(self) -> float:
        return self._area

    @property
    def diameter(self) -> float:
        return self._diameter

    @property
    def tolerance(self) -> Tolerance:
        return self._tol

    @property
    def area_tol(self) -> float:
        return self._tol.area

    @property
    def length_tol(self) -> float:
        return self._tol.length

    def vertex(self, i: int) -> Vec2:
        return self._vertices[i % len(self._vertices)]

    def edge_vector(self, i: int) -> Vec2:
        return self.vertex(i + 1) - self.vertex(i)

    def side_line(self, i: int) -> Line:
        return Line(self.vertex(i), self.edge_vector(i))

    def transform(self, affine: AffineMap) -> "Polygon":
        return Polygon([affine.apply(v) for v in self._vertices])

    def __repr__(self) -> str:  # pragma: no cover
        return f"Polygon({len(self._vertices)} vertices, area={self._area:.6g})"


@dataclass(frozen=True)
class BoundaryPoint:
    """Point on edge ``edge`` at fraction ``t`` from its start vertex."""

    edge: int
    t: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.t) or not (0.0 <= self.t <= 1.0):
            raise DegenerateInput(f"boundary fraction {self.t} outside [0, 1]")


def boundary_point_coords(p: Polygon, b: BoundaryPoint) -> Vec2:
    """Coordinates of the convex combination (1 - t) start + t end."""
    return p.vertex(b.edge) * (1.0 - b.t) + p.vertex(b.edge + 1) * b.t


def bisecting_chord_from(p: Polygon, b: BoundaryPoint, area_tol: float | None = None) -> BoundaryPoint:
    """Far endpoint of the chord through ``b`` that halves the polygon area.

    Walks the boundary accumulating the area cut off by the moving chord
    (strictly monotone), brackets the half-area crossing, then bisects
    inside the bracketing edge until the cut area matches half the total
    within ``area_tol``.
    """
    if area_tol is None:
        area_tol = 1e-12 * p.area
    if area_tol <= 0.0:
        raise DegenerateInput("area_tol must be positive")
    target = 0.5 * p.area
    anchor = boundary_point_coords(p, b)
    m = p.m

    # Nodes along the boundary starting and ending at the anchor.  Each
    # segment k lies on edge (b.edge + k) mod m with the stated t-range.
    cumulative = [0.0]
    points = [anchor]
    for k in range(1, m + 1):
        q = p.vertex(b.edge + k)
        cumulative.append(cumulative[-1] + 0.5 * bracket(points[-1] - anchor, q - anchor))
        points.append(q)
    cumulative.append(p.area)
    points.append(anchor)

    seg = None
    for k in range(m + 1):
        if cumulative[k] <= target <= cumulative[k + 1]:
            seg = k
            break
    if seg is None:
        raise NoConvergence("half-area crossing not bracketed; degenerate input")

    edge = (b.edge + seg) % m
    if seg == 0:
        t_lo, t_hi = b.t, 1.0
    elif seg == m:
        t_lo, t_hi = 0.0, b.t
    else:
        t_lo, t_hi = 0.0, 1.0

    base = cumulative[seg]
    node = points[seg]
    v0, v1 = p.vertex(edge), p.vertex(edge + 1)

    def cut(t: float) -> float:
        q = v0 * (1.0 - t) + v1 * t
        return base + 0.5 * bracket(node - anchor, q - anchor)

    lo, hi = t_lo, t_hi
    for _ in range(_BISECT_MAX_ITER):
        mid = 0.5 * (lo + hi)
        value = cut(mid)
        if abs(value - target) <= area_tol:
            return BoundaryPoint(edge, mid)
        if value < target:
            lo = mid
        else:
            hi = mid
    raise NoConvergence("bisection failed to reach area tolerance")


def augment_to_half_area(p: Polygon, area_tol: float | None = None) -> "HalfAreaPolygon":
    """Insert the far chord endpoint of every vertex, making the result half-area.

    Far endpoints that coincide with existing vertices (or with each other)
    within ``1e-9 * diameter`` are dropped, so an already half-area polygon
    comes back unchanged.
    """
    from .halfarea import HalfAreaPolygon

    if area_tol is None:
        area_tol = 1e-12 * p.area
    merge_tol = _DEDUP_REL * p.diameter

    insertions: dict[int, list[tuple[float, Vec2]]] = {}
    for i in range(p.m):
        far = bisecting_chord_from(p, BoundaryPoint(i, 0.0), area_tol)
        q = boundary_point_coords(p, far)
        if (q - p.vertex(far.edge)).norm() <= merge_tol:
            continue
        if (q - p.vertex(far.edge + 1)).norm() <= merge_tol:
            continue
        bucket = insertions.setdefault(far.edge, [])
        if any((q - existing).norm() <= merge_tol for _, existing in bucket):
            continue
        bucket.append((far.t, q))

    cycle: list[Vec2] = []
    for e in range(p.m):
        cycle.append(p.vertex(e))
        cycle.extend(q for _, q in sorted(insertions.get(e, []), key=lambda item: item[0]))

    if len(cycle) < 4 or len(cycle) % 2 != 0:
        raise DegenerateInput(
            f"augmentation produced {len(cycle)} vertices; no half-area pairing exists"
        )
    return HalfAreaPolygon(Polygon(cycle))
