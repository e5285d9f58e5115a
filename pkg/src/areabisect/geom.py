"""Planar primitives: vectors, the determinant bracket, lines, affine maps.

All arithmetic is plain double precision.  Sign and zero tests on area-like
quantities go through :class:`Tolerance`, whose effective threshold scales
with a characteristic area so that verdicts survive uniform rescaling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegenerateInput, ParallelLines

__all__ = [
    "Vec2",
    "Point",
    "Line",
    "AffineMap",
    "Tolerance",
    "bracket",
    "polygon_signed_area",
    "line_intersection",
    "asymptote_frame",
]

# Relative floor below which two directions count as parallel.
_PARALLEL_REL = 1e-12


@dataclass(frozen=True)
class Vec2:
    """An immutable planar point or vector with finite coordinates."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DegenerateInput(f"non-finite coordinates ({self.x}, {self.y})")

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def __mul__(self, s: float) -> "Vec2":
        return Vec2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> "Vec2":
        return Vec2(self.x / s, self.y / s)

    def dot(self, other: "Vec2") -> float:
        return self.x * other.x + self.y * other.y

    def norm2(self) -> float:
        return self.x * self.x + self.y * self.y

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


Point = Vec2


def bracket(a: Vec2, b: Vec2) -> float:
    """Determinant of the matrix with columns ``a`` and ``b``.

    Antisymmetric and bilinear; twice the signed area of the triangle
    spanned by the two vectors.
    """
    return a.x * b.y - a.y * b.x


def polygon_signed_area(vertices: Sequence[Vec2]) -> float:
    """Shoelace signed area of a closed vertex cycle; positive when CCW."""
    if len(vertices) < 3:
        raise DegenerateInput("signed area needs at least 3 vertices")
    total = 0.0
    n = len(vertices)
    for i in range(n):
        total += bracket(vertices[i], vertices[(i + 1) % n])
    return 0.5 * total


@dataclass(frozen=True)
class Line:
    """A line through ``base`` with direction ``dir`` (non-zero)."""

    base: Vec2
    dir: Vec2

    def __post_init__(self) -> None:
        if self.dir.norm2() == 0.0:
            raise DegenerateInput("line direction must be non-zero")

    def point_at(self, t: float) -> Vec2:
        return self.base + self.dir * t

    def side_of(self, p: Vec2) -> float:
        """Signed area-like functional: positive on the left of ``dir``."""
        return bracket(self.dir, p - self.base)

    def distance_to(self, p: Vec2) -> float:
        return abs(self.side_of(p)) / self.dir.norm()

    def is_parallel_to(self, other: "Line", rel: float = _PARALLEL_REL) -> bool:
        return abs(bracket(self.dir, other.dir)) <= rel * self.dir.norm() * other.dir.norm()

    def same_line_as(self, other: "Line", rel: float = _PARALLEL_REL) -> bool:
        """True when directions are parallel and the bases are mutually on-line."""
        if not self.is_parallel_to(other, rel):
            return False
        off = other.base - self.base
        return abs(bracket(self.dir, off)) <= rel * self.dir.norm() * max(off.norm(), self.dir.norm())


@dataclass(frozen=True)
class AffineMap:
    """``T(p) = L p + t`` with linear part ``[[xx, xy], [yx, yy]]``."""

    xx: float
    xy: float
    yx: float
    yy: float
    tx: float = 0.0
    ty: float = 0.0

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls(1.0, 0.0, 0.0, 1.0, 0.0, 0.0)

    @classmethod
    def translation(cls, v: Vec2) -> "AffineMap":
        return cls(1.0, 0.0, 0.0, 1.0, v.x, v.y)

    @classmethod
    def from_basis(cls, origin: Vec2, u: Vec2, v: Vec2) -> "AffineMap":
        """The map sending ``origin`` to 0, ``u`` to (1, 0) and ``v`` to (0, 1)."""
        det = bracket(u, v)
        if abs(det) <= _PARALLEL_REL * u.norm() * v.norm():
            raise DegenerateInput("basis vectors are parallel")
        xx, xy = v.y / det, -v.x / det
        yx, yy = -u.y / det, u.x / det
        return cls(xx, xy, yx, yy, -(xx * origin.x + xy * origin.y), -(yx * origin.x + yy * origin.y))

    def apply(self, p: Vec2) -> Vec2:
        return Vec2(self.xx * p.x + self.xy * p.y + self.tx, self.yx * p.x + self.yy * p.y + self.ty)

    def apply_vector(self, v: Vec2) -> Vec2:
        """Apply the linear part only (directions, not points)."""
        return Vec2(self.xx * v.x + self.xy * v.y, self.yx * v.x + self.yy * v.y)

    def det(self) -> float:
        return self.xx * self.yy - self.xy * self.yx

    def inverse(self) -> "AffineMap":
        d = self.det()
        scale = max(abs(self.xx), abs(self.xy), abs(self.yx), abs(self.yy), 1e-300)
        if abs(d) <= _PARALLEL_REL * scale * scale:
            raise DegenerateInput("affine map is not invertible")
        xx, xy = self.yy / d, -self.xy / d
        yx, yy = -self.yx / d, self.xx / d
        return AffineMap(xx, xy, yx, yy, -(xx * self.tx + xy * self.ty), -(yx * self.tx + yy * self.ty))

    def compose(self, inner: "AffineMap") -> "AffineMap":
        """Return ``self o inner`` (``inner`` applied first)."""
        return AffineMap(
            self.xx * inner.xx + self.xy * inner.yx,
            self.xx * inner.xy + self.xy * inner.yy,
            self.yx * inner.xx + self.yy * inner.yx,
            self.yx * inner.xy + self.yy * inner.yy,
            self.xx * inner.tx + self.xy * inner.ty + self.tx,
            self.yx * inner.tx + self.yy * inner.ty + self.ty,
        )


@dataclass(frozen=True)
class Tolerance:
    """Scale-aware thresholds; ``scale`` is a characteristic area."""

    abs_eps: float = 1e-12
    rel_eps: float = 1e-9
    scale: float = 1.0

    def __post_init__(self) -> None:
        if self.abs_eps <= 0 or self.rel_eps <= 0:
            raise DegenerateInput("tolerance epsilons must be positive")

    @property
    def area(self) -> float:
        """Effective threshold for area-like quantities."""
        return max(self.abs_eps, self.rel_eps * self.scale)

    @property
    def length(self) -> float:
        """Effective threshold for length-like quantities."""
        return math.sqrt(self.area)


def line_intersection(l1: Line, l2: Line) -> Vec2:
    """The unique common point of two non-parallel lines.

    Raises :class:`ParallelLines` when the directions are parallel within
    the relative floor; callers decide the degenerate fallback.
    """
    denom = bracket(l1.dir, l2.dir)
    if abs(denom) <= _PARALLEL_REL * l1.dir.norm() * l2.dir.norm():
        raise ParallelLines("lines are parallel within tolerance")
    t = bracket(l2.base - l1.base, l2.dir) / denom
    return l1.base + l1.dir * t


def asymptote_frame(l1: Line, l2: Line) -> AffineMap:
    """Affine map sending ``l1 ^ l2`` to the origin and the two line
    directions onto the first and second coordinate axes.

    Points of ``l1`` land on the first axis (second coordinate zero) and
    points of ``l2`` on the second axis.
    """
    origin = line_intersection(l1, l2)
    return AffineMap.from_basis(origin, l1.dir, l2.dir)
