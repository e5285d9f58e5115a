"""Envelope objects of the bisecting lines of a half-area polygon.

Three related sets are computed per polygon: the mid-points envelope
(midpoints of the principal chords), the discrete envelope (intersections
of consecutive bisecting lines) and the hyperbolic envelope (the true
envelope of all bisecting lines, a concatenation of hyperbola arcs, one
per opposite side pair).  Cusps of the envelope are detected through the
sign pattern of the opposite-side brackets and cross-checked against
three further geometric criteria.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ClassificationConflict, CriteriaDisagree, InconsistentArc
from .geom import AffineMap, Line, Vec2, bracket
from .halfarea import HalfAreaPolygon

__all__ = [
    "HyperbolicArc",
    "CuspReport",
    "CuspCriteria",
    "Classification",
    "EnvelopeSet",
    "midpoints_envelope",
    "discrete_envelope",
    "hyperbolic_envelope",
    "detect_cusps",
    "cusp_equivalence_report",
    "classify_symmetry",
    "envelope_set",
]

# Interior samples per arc for the separation test; endpoint tangency makes
# endpoint-only tests inconclusive.
_SEPARATION_SAMPLES = 16
_RATIO_REL_TOL = 1e-9


def midpoints_envelope(h: HalfAreaPolygon) -> list[Vec2]:
    """Midpoints of the principal chords, one per chord."""
    return [(h.vertex(i) + h.vertex(i + h.n)) * 0.5 for i in range(h.n)]


def discrete_envelope(h: HalfAreaPolygon) -> list[Vec2]:
    """Intersections of consecutive bisecting lines, by the closed formula.

    Point ``j`` is the intersection of the principal lines through
    vertices ``j`` and ``j + 1``; opposite edges repeat the same point.
    """
    points = []
    for i in range(h.n):
        q = h.edge_quantities(i)
        points.append(h.vertex(i) + q.v * (q.a_minus / q.a))
    return points


@dataclass(frozen=True)
class HyperbolicArc:
    """One arc of the hyperbolic envelope, attached to side pair ``(edge, edge + n)``.

    In the affine frame sending the two support lines to the coordinate
    axes (directions oriented so the polygon side is positive), the arc is
    ``u * w = k`` between the transformed endpoints.  When the opposite
    sides are parallel the arc degenerates to the straight segment between
    the endpoints and ``frame``/``k`` are ``None``.
    """

    edge: int
    start: Vec2
    end: Vec2
    degenerate: bool
    frame: AffineMap | None = None
    k: float | None = None

    def sample(self, count: int) -> list[Vec2]:
        """``count`` points along the arc, geometric in the frame coordinate."""
        if count < 2:
            count = 2
        if self.degenerate:
            return [
                self.start + (self.end - self.start) * (j / (count - 1))
                for j in range(count)
            ]
        inv = self.frame.inverse()
        u0 = self.frame.apply(self.start).x
        u1 = self.frame.apply(self.end).x
        pts = []
        for j in range(count):
            t = j / (count - 1)
            u = u0 ** (1.0 - t) * u1 ** t
            pts.append(inv.apply(Vec2(u, self.k / u)))
        return pts

    def interior_samples(self, count: int = _SEPARATION_SAMPLES) -> list[Vec2]:
        """Samples strictly between the endpoints (tangency points excluded)."""
        full = self.sample(count + 2)
        return full[1:-1]


def hyperbolic_envelope(h: HalfAreaPolygon) -> list[HyperbolicArc]:
    """One hyperbola arc per opposite side pair, endpoints at the chord midpoints.

    Raises :class:`InconsistentArc` when the two endpoints of an arc
    disagree on the frame product beyond tolerance, which signals an
    invalid polygon slipping past validation.
    """
    mids = midpoints_envelope(h)
    arcs = []
    for i in range(h.n):
        start = mids[i]
        end = mids[(i + 1) % h.n]
        d1 = h.edge_vector(i)
        d2 = h.edge_vector(i + h.n)
        if abs(bracket(d1, d2)) <= h.area_tol:
            arcs.append(HyperbolicArc(i, start, end, degenerate=True))
            continue
        origin_frame = AffineMap.from_basis(
            _support_intersection(h, i), d1, d2
        )
        c0 = origin_frame.apply(start)
        # Flip axis directions so both frame coordinates are positive on the
        # polygon side; the product constant is then positive as well.
        d1 = d1 if c0.x > 0 else -d1
        d2 = d2 if c0.y > 0 else -d2
        frame = AffineMap.from_basis(_support_intersection(h, i), d1, d2)
        p0 = frame.apply(start)
        p1 = frame.apply(end)
        k0 = p0.x * p0.y
        k1 = p1.x * p1.y
        if p1.x <= 0.0 or p1.y <= 0.0 or abs(k0 - k1) > 1e-9 * max(abs(k0), abs(k1)):
            raise InconsistentArc(
                f"arc {i}: endpoint products {k0!r} and {k1!r} disagree"
            )
        arcs.append(HyperbolicArc(i, start, end, False, frame, 0.5 * (k0 + k1)))
    return arcs


def _support_intersection(h: HalfAreaPolygon, i: int) -> Vec2:
    from .geom import line_intersection

    return line_intersection(h.side_line(i), h.side_line(i + h.n))


@dataclass(frozen=True)
class CuspReport:
    """Cusp flags per vertex plus the count over one half period."""

    flags: tuple[bool, ...]
    count: int
    odd: bool
    degenerate_vertices: tuple[int, ...]


def detect_cusps(h: HalfAreaPolygon) -> CuspReport:
    """Flag vertex ``i`` when the opposite-side bracket changes sign there.

    A vertex is reported degenerate when the bracket of an adjacent edge is
    below the area tolerance; such vertices make the sign test unreliable
    and are listed rather than raised.
    """
    m = h.m
    deltas = [h.edge_quantities(i).delta for i in range(m)]
    thr = h.area_tol
    flags = tuple(deltas[(i - 1) % m] * deltas[i] < -thr * thr for i in range(m))
    degenerate = tuple(
        i for i in range(m) if min(abs(deltas[(i - 1) % m]), abs(deltas[i])) <= thr
    )
    count = sum(flags[: h.n])
    return CuspReport(flags, count, count % 2 == 1, degenerate)


@dataclass(frozen=True)
class CuspCriteria:
    """The four cusp criteria evaluated independently at one vertex."""

    vertex: int
    degenerate: bool
    sign_change: bool | None
    midpoint_outside: bool | None
    line_separates_midpoints: bool | None
    line_separates_arcs: bool | None

    @property
    def values(self) -> tuple[bool, ...] | None:
        if self.degenerate:
            return None
        return (
            self.sign_change,
            self.midpoint_outside,
            self.line_separates_midpoints,
            self.line_separates_arcs,
        )

    @property
    def agree(self) -> bool | None:
        vals = self.values
        if vals is None:
            return None
        return all(v == vals[0] for v in vals)


def cusp_equivalence_report(h: HalfAreaPolygon) -> list[CuspCriteria]:
    """Evaluate the four cusp criteria per vertex and assert they agree.

    Degenerate vertices (an adjacent opposite-side bracket within
    tolerance) are skipped with an explicit row.  Disagreement at any
    non-degenerate vertex raises :class:`CriteriaDisagree` carrying the
    report.
    """
    m, n = h.m, h.n
    mids = midpoints_envelope(h)
    envs = discrete_envelope(h)
    arcs = hyperbolic_envelope(h)
    cusps = detect_cusps(h)
    degenerate = set(cusps.degenerate_vertices)
    thr = h.area_tol

    rows = []
    for i in range(m):
        if i in degenerate:
            rows.append(CuspCriteria(i, True, None, None, None, None))
            continue
        d_prev = h.edge_quantities(i - 1).delta
        d_next = h.edge_quantities(i).delta
        c1 = d_prev * d_next < -thr * thr

        # The midpoint and both neighbouring envelope points lie on the
        # bisecting line through vertex i; compare 1-d positions along it.
        v = h.chord_vector(i)
        origin = h.vertex(i)
        s_mid = (mids[i % n] - origin).dot(v) / v.norm2()
        s_prev = (envs[(i - 1) % n] - origin).dot(v) / v.norm2()
        s_next = (envs[i % n] - origin).dot(v) / v.norm2()
        c2 = (s_mid - s_prev) * (s_mid - s_next) > 0.0

        f_prev = bracket(v, mids[(i - 1) % n] - origin)
        f_next = bracket(v, mids[(i + 1) % n] - origin)
        c3 = f_prev * f_next < 0.0

        c4 = _line_separates_arcs(h, i, arcs[(i - 1) % n], arcs[i % n])

        rows.append(CuspCriteria(i, False, c1, c2, c3, c4))

    bad = [r.vertex for r in rows if r.agree is False]
    if bad:
        raise CriteriaDisagree(f"cusp criteria disagree at vertices {bad}", rows)
    return rows


def _line_separates_arcs(
    h: HalfAreaPolygon, i: int, prev_arc: HyperbolicArc, next_arc: HyperbolicArc
) -> bool:
    line = h.principal_line(i)
    prev_signs = [line.side_of(p) for p in prev_arc.interior_samples()]
    next_signs = [line.side_of(p) for p in next_arc.interior_samples()]
    side_prev = math.copysign(1.0, prev_signs[0])
    side_next = math.copysign(1.0, next_signs[0])
    if any(math.copysign(1.0, s) != side_prev for s in prev_signs):
        return False
    if any(math.copysign(1.0, s) != side_next for s in next_signs):
        return False
    return side_prev != side_next


@dataclass(frozen=True)
class Classification:
    """Symmetry class: ``symmetric`` / ``skew-symmetric`` / ``generic``.

    ``center`` is the common chord midpoint for symmetric polygons; ``c``
    the alternating diagonal ratio for skew-symmetric ones.
    """

    kind: str
    center: Vec2 | None = None
    c: float | None = None


def classify_symmetry(h: HalfAreaPolygon) -> Classification:
    """Classify by midpoint coincidence, then by the diagonal-ratio pattern.

    The ratio pattern (adjacent ratios multiplying to one) and the
    point-envelope test (all bisecting lines concurrent) are both run for
    the skew-symmetric case and must agree, otherwise
    :class:`ClassificationConflict` is raised.
    """
    mids = midpoints_envelope(h)
    envs = discrete_envelope(h)
    coincide_tol = max(1e-12, 1e-9 * h.diameter)

    if _point_set_diameter(mids) <= coincide_tol:
        center = Vec2(
            sum(p.x for p in mids) / len(mids), sum(p.y for p in mids) / len(mids)
        )
        return Classification("symmetric", center=center)

    lams = [h.edge_quantities(i).lam for i in range(h.m)]
    ratio_ok = all(
        abs(lams[i] * lams[(i + 1) % h.m] - 1.0) <= _RATIO_REL_TOL for i in range(h.m)
    )
    point_ok = _point_set_diameter(envs) <= coincide_tol
    if ratio_ok != point_ok:
        raise ClassificationConflict(
            f"ratio pattern says {ratio_ok}, point envelope says {point_ok}"
        )
    if ratio_ok:
        return Classification("skew-symmetric", c=lams[0])
    return Classification("generic")


def _point_set_diameter(points: list[Vec2]) -> float:
    return max(
        ((points[i] - points[j]).norm() for i in range(len(points)) for j in range(i + 1, len(points))),
        default=0.0,
    )


@dataclass(frozen=True)
class EnvelopeSet:
    """The three envelopes of one polygon plus its cusp report."""

    midpoints: tuple[Vec2, ...]
    discrete: tuple[Vec2, ...]
    arcs: tuple[HyperbolicArc, ...]
    cusps: CuspReport


def envelope_set(h: HalfAreaPolygon) -> EnvelopeSet:
    """Compute all envelope objects of ``h`` in one bundle."""
    return EnvelopeSet(
        tuple(midpoints_envelope(h)),
        tuple(discrete_envelope(h)),
        tuple(hyperbolic_envelope(h)),
        detect_cusps(h),
    )
