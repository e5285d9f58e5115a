"""Seeded constructors for the polygon families used throughout the tests.

Every generator is deterministic for a fixed seed and rejection-samples
against the full half-area validator, so each returned polygon has passed
both the algebraic parallelism test and the shoelace chord oracle.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .envelope import classify_symmetry, detect_cusps
from .errors import (
    DegenerateInput,
    EpsilonTooLarge,
    GeometryError,
    NotATrapezoid,
    RetriesExhausted,
    ValidationFailed,
)
from .geom import AffineMap, Line, Vec2, bracket, line_intersection, polygon_signed_area
from .halfarea import HalfAreaPolygon, construct_from_seed
from .polygon import Polygon, augment_to_half_area

__all__ = [
    "GeneratorConfig",
    "generate",
    "trapezoid_parallel_bisector",
    "trapezoid_companion_point",
    "maximal_cusp_polygon",
]

KINDS = ("random", "symmetric", "skew-symmetric", "maximal-cusps", "regular-augmented")


@dataclass(frozen=True)
class GeneratorConfig:
    """Recipe for one seeded polygon.

    ``n`` is half the vertex count except for ``regular-augmented``, where
    it names the source polygon size (``m`` overrides it when set).
    ``noise`` scales the perturbation away from the regular polygon.
    """

    kind: str
    n: int
    seed: int = 0
    c: float | None = None
    eps: float | None = None
    m: int | None = None
    noise: float = 0.2
    max_retries: int = 64

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise DegenerateInput(f"unknown generator kind {self.kind!r}")
        if self.kind == "regular-augmented":
            if (self.m or self.n) < 3:
                raise DegenerateInput("regular-augmented needs a source with >= 3 vertices")
            return
        if self.n < 2:
            raise DegenerateInput("n must be at least 2")
        if self.kind == "skew-symmetric":
            if self.c is None or self.c <= 0 or self.c == 1.0:
                raise DegenerateInput("skew-symmetric needs a ratio c > 0, c != 1")
            if self.n % 2 == 0 or self.n < 3:
                raise DegenerateInput("skew-symmetric polygons need odd n >= 3")
        if self.kind == "maximal-cusps" and (self.n % 2 != 0 or self.n < 4):
            raise DegenerateInput("maximal-cusps polygons need even n >= 4")
        if self.eps is not None and self.eps < 0:
            raise DegenerateInput("eps must be non-negative")


def generate(config: GeneratorConfig) -> HalfAreaPolygon:
    """Produce the configured polygon, retrying rejected samples.

    Raises :class:`RetriesExhausted` when ``max_retries`` samples in a row
    fail convexity, validation or the requested classification.
    """
    rng = random.Random(config.seed)
    last_error: Exception | None = None
    for _ in range(max(1, config.max_retries)):
        try:
            return _generate_once(config, rng)
        except GeometryError as exc:
            last_error = exc
    raise RetriesExhausted(
        f"no acceptable {config.kind} polygon after {config.max_retries} tries: {last_error}"
    )


def _generate_once(config: GeneratorConfig, rng: random.Random) -> HalfAreaPolygon:
    if config.kind == "random":
        h = _random_polygon(rng, config.n, config.noise)
        # Small n leaves no room for generic polygons: every half-area
        # quadrilateral is a parallelogram and every half-area hexagon has
        # concurrent principal diagonals (the dimension counts coincide).
        expected = {2: "symmetric", 3: "skew-symmetric"}.get(config.n, "generic")
        if classify_symmetry(h).kind != expected:
            raise ValidationFailed(f"random sample failed classification ({expected})")
        return h
    if config.kind == "symmetric":
        h = _symmetric_polygon(rng, config.n, config.noise)
        if classify_symmetry(h).kind != "symmetric":
            raise ValidationFailed("symmetric sample failed classification")
        return h
    if config.kind == "skew-symmetric":
        h = _skew_symmetric_polygon(rng, config.n, config.c, config.noise)
        cls = classify_symmetry(h)
        if cls.kind != "skew-symmetric":
            raise ValidationFailed("skew-symmetric sample failed classification")
        return h
    if config.kind == "maximal-cusps":
        return _maximal_cusps_polygon(rng, config)
    return _regular_augmented(config.m or config.n)


def _regular_vertices(count: int, radius: float = 1.0) -> list[Vec2]:
    return [
        Vec2(radius * math.cos(2.0 * math.pi * j / count), radius * math.sin(2.0 * math.pi * j / count))
        for j in range(count)
    ]


def _random_polygon(rng: random.Random, n: int, noise: float) -> HalfAreaPolygon:
    """Perturb the construction seed of a regular 2n-gon.

    The closing vertex is an intersection of two constraint lines, so
    convexity is increasingly fragile for larger n; the amplitudes below
    keep the rejection rate moderate through n = 8.
    """
    regular = _regular_vertices(2 * n)
    amp = noise * 3.0 / (2 * n) ** 1.7
    seed = [
        p + Vec2(rng.uniform(-amp, amp), rng.uniform(-amp, amp)) for p in regular[: n + 1]
    ]
    positions = [1.0 + rng.uniform(-1.2 * noise / n, 1.2 * noise / n) for _ in range(n - 2)]
    return construct_from_seed(seed, positions)


def _symmetric_polygon(rng: random.Random, n: int, noise: float) -> HalfAreaPolygon:
    """Perturb half of a regular 2n-gon and mirror it through the center."""
    amp = noise * 2.0 / (2 * n)
    half = [
        p + Vec2(rng.uniform(-amp, amp), rng.uniform(-amp, amp))
        for p in _regular_vertices(2 * n)[:n]
    ]
    return HalfAreaPolygon(Polygon(half + [-p for p in half]))


def _skew_symmetric_polygon(
    rng: random.Random, n: int, c: float, noise: float
) -> HalfAreaPolygon:
    """Place vertex pairs on n concurrent lines with alternating radius ratios.

    With vertices at ``r_i u_i`` and ``-s_i u_i`` on lines through one
    point, parallel central diagonals are equivalent to
    ``r_i r_{i+1} = s_i s_{i+1}``, so alternating ``s_i = c r_i`` and
    ``s_i = r_i / c`` (consistent only for odd n) makes every bisecting
    line pass through the common point.
    """
    gap = math.pi / n
    jitter = 0.35 * noise * gap
    angles = [j * gap + rng.uniform(-jitter, jitter) for j in range(n)]
    radii = [1.0 + rng.uniform(-noise, noise) for _ in range(n)]
    ks = [c if j % 2 == 0 else 1.0 / c for j in range(n)]
    dirs = [Vec2(math.cos(t), math.sin(t)) for t in angles]
    front = [dirs[j] * radii[j] for j in range(n)]
    back = [dirs[j] * (-ks[j] * radii[j]) for j in range(n)]
    return HalfAreaPolygon(Polygon(front + back))


def _maximal_cusps_polygon(rng: random.Random, config: GeneratorConfig) -> HalfAreaPolygon:
    c = math.exp(rng.uniform(math.log(1.3), math.log(2.0)))
    base = _skew_symmetric_polygon(rng, config.n - 1, c, config.noise)
    eps = config.eps if config.eps is not None else 0.01 * base.diameter
    while True:
        try:
            h = maximal_cusp_polygon(base, eps)
        except EpsilonTooLarge:
            eps *= 0.5
            if eps < 1e-12 * base.diameter:
                raise
            continue
        if detect_cusps(h).count != config.n - 1:
            raise ValidationFailed("maximal-cusps sample has the wrong cusp count")
        return h


def _regular_augmented(m: int) -> HalfAreaPolygon:
    return augment_to_half_area(Polygon(_regular_vertices(m)))


def _normalizing_frame(a: Vec2, b: Vec2, d: Vec2) -> AffineMap:
    return AffineMap.from_basis(a, b - a, d - a)


def _trapezoid_frame(a: Vec2, b: Vec2, c: Vec2, d: Vec2) -> tuple[AffineMap, float]:
    """Map A, B, D to (0,0), (1,0), (0,1); returns the frame and C's first coordinate.

    Raises :class:`NotATrapezoid` unless ABCD is convex with AB parallel
    to CD, which is exactly C landing at height one in the frame.
    """
    quad = [a, b, c, d]
    area = polygon_signed_area(quad)
    if area < 0:
        raise NotATrapezoid("corners must be in counterclockwise order")
    for i in range(4):
        if bracket(quad[(i + 1) % 4] - quad[i], quad[(i + 2) % 4] - quad[(i + 1) % 4]) <= 0:
            raise NotATrapezoid("corners do not form a strictly convex quadrilateral")
    frame = _normalizing_frame(a, b, d)
    c_img = frame.apply(c)
    if abs(c_img.y - 1.0) > 1e-9:
        raise NotATrapezoid("first and third sides are not parallel")
    if c_img.x <= 0.0:
        raise NotATrapezoid("degenerate parallel side")
    return frame, c_img.x


def trapezoid_parallel_bisector(a: Vec2, b: Vec2, c: Vec2, d: Vec2) -> tuple[Vec2, Vec2]:
    """The unique chord PQ parallel to AB with P on BC, Q on AD, where Q is
    also the companion point of P.

    In the normalized frame (A, B, D at the unit corners, C at height one)
    the chord sits at height ``1 / (1 + sqrt(|CD| / |AB|-ratio))``; it is the
    chord along which the polygon extension of the trapezoid balances its
    area, and feeding P back through :func:`trapezoid_companion_point`
    returns Q.
    """
    frame, c2 = _trapezoid_frame(a, b, c, d)
    croot = math.sqrt(c2)
    y0 = 1.0 / (1.0 + croot)
    x0 = 1.0 - (1.0 - c2) * y0
    inv = frame.inverse()
    return inv.apply(Vec2(x0, y0)), inv.apply(Vec2(0.0, y0))


def trapezoid_companion_point(a: Vec2, b: Vec2, c: Vec2, d: Vec2, p: Vec2) -> Vec2:
    """Intersection of the parallel to PD through B with the parallel to PA through C.

    The companion lies on the far side of line AD exactly when P lies on
    the near side of line BC (checked and asserted); :class:`ParallelLines`
    propagates when P is collinear with A and D.
    """
    frame, _ = _trapezoid_frame(a, b, c, d)
    q = line_intersection(Line(b, d - p), Line(c, a - p))
    # Side-of-line relation: sign of Q against AD is opposite to P against BC.
    s_p = bracket(c - b, p - b)
    s_q = bracket(d - a, q - a)
    scale = max(abs(s_p), abs(s_q))
    if scale > 1e-9 * (b - a).norm2() and s_p * s_q > 0:
        raise GeometryError("companion point landed on the wrong side of AD")
    return q


def maximal_cusp_polygon(base: HalfAreaPolygon, eps: float = 0.0) -> HalfAreaPolygon:
    """Insert a chord pair into a skew-symmetric polygon so that every chord
    midpoint but the new one is a cusp.

    The four vertices ``0, n-1, n, 2n-1`` of the base bound a trapezoid
    whose parallel chord pair (P on the side ``n-1 -> n``, Q on the side
    ``2n-1 -> 0``) extends the polygon to a half-area ``2(n+1)``-gon.  For
    ``eps > 0``, P is pushed outward along the side normal and Q recomputed
    as its companion, giving a strictly convex result for small eps.
    """
    if eps < 0:
        raise DegenerateInput("eps must be non-negative")
    nb = base.n
    verts = list(base.vertices)
    a = verts[0]
    b = verts[nb - 1]
    c = verts[nb]
    d = verts[2 * nb - 1]
    p, q = trapezoid_parallel_bisector(a, b, c, d)
    if eps > 0.0:
        side = c - b
        outward = Vec2(side.y, -side.x) / side.norm()
        p = p + outward * eps
        q = trapezoid_companion_point(a, b, c, d, p)
    cycle = verts[:nb] + [p] + verts[nb:] + [q]
    try:
        return HalfAreaPolygon(Polygon(cycle))
    except (DegenerateInput, ValidationFailed) as exc:
        raise EpsilonTooLarge(f"offset {eps} broke the construction: {exc}") from exc
