"""The one-parameter family of polygons sharing both point envelopes.

Sliding every vertex along its principal chord by a common fraction ``c``
(vertex ``i`` to ``(1 - c) vertex(i) + c vertex(i + n)``) preserves the
half-area property together with the mid-points and discrete envelopes;
the hyperbolic envelope moves because the support lines do.  The family
collapses at ``c = 1/2`` and generally loses convexity before that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .envelope import discrete_envelope, midpoints_envelope
from .errors import AllEdgesParallel, OutsideValidInterval, ValidationFailed
from .geom import Line, Vec2, bracket
from .halfarea import HalfAreaPolygon
from .polygon import Polygon

__all__ = [
    "InverseFamily",
    "inverse_family",
    "compute_valid_interval",
    "family_member",
    "verify_em_invariance",
    "verify_h_changes",
    "EMInvarianceReport",
    "HChangeReport",
]

_SCAN_STEP = 1e-4
_REFINE_TOL = 1e-8
# Distinct family members live in (-1/2, 1/2): the parameter map c -> 1 - c
# relabels vertices by a half period, and c = 1/2 collapses the polygon.
_C_CAP = 0.5


@dataclass(frozen=True)
class InverseFamily:
    """A source polygon with the open parameter interval keeping it convex."""

    source: HalfAreaPolygon
    c_lo: float
    c_hi: float

    def __post_init__(self) -> None:
        if not (self.c_lo < 0.0 < self.c_hi):
            raise OutsideValidInterval("valid interval must contain 0")

    def contains(self, c: float) -> bool:
        return self.c_lo < c < self.c_hi


def _member_vertices(source: HalfAreaPolygon, c: float) -> list[Vec2]:
    n = source.n
    return [
        source.vertex(i) * (1.0 - c) + source.vertex(i + n) * c for i in range(source.m)
    ]


def _is_convex_at(source: HalfAreaPolygon, c: float) -> bool:
    # Lean float loop: the interval scan calls this thousands of times.
    xs = [v.x for v in source.vertices]
    ys = [v.y for v in source.vertices]
    m = source.m
    n = source.n
    px = [(1.0 - c) * xs[i] + c * xs[(i + n) % m] for i in range(m)]
    py = [(1.0 - c) * ys[i] + c * ys[(i + n) % m] for i in range(m)]
    tol = source.area_tol
    for i in range(m):
        j = (i + 1) % m
        k = (i + 2) % m
        e0x, e0y = px[j] - px[i], py[j] - py[i]
        e1x, e1y = px[k] - px[j], py[k] - py[j]
        if e0x * e1y - e0y * e1x < -tol:
            return False
    return True


def compute_valid_interval(source: HalfAreaPolygon) -> tuple[float, float]:
    """Maximal open interval around 0 (inside (-1/2, 1/2)) keeping the family convex.

    Scanned at resolution 1e-4, then bisected to 1e-8 at a lost-convexity
    boundary; the cap at +-1/2 is exact.
    """

    def scan(direction: float) -> float:
        good = 0.0
        c = 0.0
        while True:
            c_next = c + direction * _SCAN_STEP
            if abs(c_next) >= _C_CAP:
                return direction * _C_CAP
            if not _is_convex_at(source, c_next):
                lo, hi = good, c_next
                while abs(hi - lo) > _REFINE_TOL:
                    mid = 0.5 * (lo + hi)
                    if _is_convex_at(source, mid):
                        lo = mid
                    else:
                        hi = mid
                return lo
            good = c_next
            c = c_next

    return (scan(-1.0), scan(+1.0))


def inverse_family(source: HalfAreaPolygon) -> InverseFamily:
    """Bundle ``source`` with its computed valid parameter interval."""
    lo, hi = compute_valid_interval(source)
    return InverseFamily(source, lo, hi)


def family_member(f: InverseFamily, c: float) -> HalfAreaPolygon:
    """The validated family member at parameter ``c``.

    Raises :class:`OutsideValidInterval` for parameters outside the open
    interval and :class:`ValidationFailed` when the member does not pass
    half-area validation (should not happen inside the interval).
    """
    if not f.contains(c):
        raise OutsideValidInterval(
            f"c={c} outside ({f.c_lo}, {f.c_hi})"
        )
    try:
        return HalfAreaPolygon(Polygon(_member_vertices(f.source, c)))
    except ValidationFailed:
        raise
    except Exception as exc:
        raise ValidationFailed(f"family member at c={c} is invalid: {exc}") from exc


@dataclass(frozen=True)
class EMInvarianceReport:
    """Per-parameter maxima of envelope displacement, in length units."""

    rows: tuple[tuple[float, float, float], ...]  # (c, max |dM|, max |dE|)
    tol: float

    @property
    def ok(self) -> bool:
        return all(dm <= self.tol and de <= self.tol for _, dm, de in self.rows)


def verify_em_invariance(f: InverseFamily, samples: list[float]) -> EMInvarianceReport:
    """Measure how far each member's envelopes move from the source's."""
    src_m = midpoints_envelope(f.source)
    src_e = discrete_envelope(f.source)
    rows = []
    for c in samples:
        member = family_member(f, c)
        dm = max((a - b).norm() for a, b in zip(midpoints_envelope(member), src_m))
        de = max((a - b).norm() for a, b in zip(discrete_envelope(member), src_e))
        rows.append((c, dm, de))
    tol = max(1e-12, 1e-9 * f.source.diameter)
    return EMInvarianceReport(tuple(rows), tol)


@dataclass(frozen=True)
class HChangeReport:
    """Support-line displacement per edge between the source and one member.

    ``rows`` hold ``(edge, direction_sine, offset)`` with the angle measured
    by the normalized cross product of the two side directions and the
    offset as the distance of the member's side endpoints from the source
    support line, normalized by the diameter.  Parallel-opposite edges are
    excluded.
    """

    c: float
    rows: tuple[tuple[int, float, float], ...]
    excluded_edges: tuple[int, ...]

    @property
    def max_displacement(self) -> float:
        return max((max(s, o) for _, s, o in self.rows), default=0.0)


def verify_h_changes(f: InverseFamily, c: float) -> HChangeReport:
    """Quantify how the arcs' asymptote lines move for a member with c != 0.

    Raises :class:`AllEdgesParallel` when every side is parallel to its
    opposite (symmetric polygons), which is the excluded case where the
    hyperbolic envelope degenerates to a point for the whole family.
    """
    source = f.source
    member = family_member(f, c)
    qualifying = [
        i
        for i in range(source.m)
        if abs(source.edge_quantities(i).delta) > 10.0 * source.area_tol
    ]
    if not qualifying:
        raise AllEdgesParallel("every side is parallel to its opposite")
    rows = []
    for i in qualifying:
        old = source.side_line(i)
        new_base = member.vertex(i)
        new_dir = member.edge_vector(i)
        sine = abs(bracket(old.dir, new_dir)) / (old.dir.norm() * new_dir.norm())
        offset = max(
            old.distance_to(new_base), old.distance_to(new_base + new_dir)
        ) / source.diameter
        rows.append((i, sine, offset))
    excluded = tuple(i for i in range(source.m) if i not in set(qualifying))
    return HChangeReport(c, tuple(rows), excluded)
