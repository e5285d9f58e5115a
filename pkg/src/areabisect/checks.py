"""Cross-checks tying the closed-form machinery to brute-force oracles.

Everything here recomputes quantities by an independent route (shoelace
areas, chord bisection search, line intersections) and compares against
the cached algebra, so a sign or indexing bug in either side shows up as
a failed invariant rather than a silently wrong figure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .envelope import (
    classify_symmetry,
    cusp_equivalence_report,
    detect_cusps,
    discrete_envelope,
    hyperbolic_envelope,
    midpoints_envelope,
)
from .errors import CriteriaDisagree, GeometryError, OddVertexCount
from .geom import Vec2, bracket, line_intersection, polygon_signed_area
from .halfarea import HalfAreaPolygon, is_half_area
from .polygon import BoundaryPoint, Polygon, bisecting_chord_from, boundary_point_coords

__all__ = [
    "InvariantResult",
    "characterization_verdicts",
    "arc_oracle_error",
    "sum_identity_residuals",
    "run_invariant_suite",
]


@dataclass(frozen=True)
class InvariantResult:
    name: str
    ok: bool
    detail: str


def characterization_verdicts(p: Polygon) -> tuple[bool, bool, bool]:
    """Three independent half-area verdicts for an even convex polygon.

    Returns (algebraic bracket pairing, parallel central diagonals,
    shoelace chord oracle); all three must agree on any input.
    """
    if p.m % 2 != 0:
        raise OddVertexCount(f"even vertex count required, got {p.m}")
    n = p.m // 2
    tol = p.area_tol

    worst_pair = 0.0
    for i in range(p.m):
        side = p.edge_vector(i)
        a_plus = bracket(side, p.vertex(i + n) - p.vertex(i))
        opp_side = p.edge_vector(i + n)
        a_minus_opp = bracket(opp_side, p.vertex(i + 1) - p.vertex(i + n + 1))
        worst_pair = max(worst_pair, abs(a_plus - a_minus_opp))
    algebraic = worst_pair <= tol

    parallel = is_half_area(p).ok

    half = 0.5 * p.area
    worst_cut = 0.0
    for i in range(n):
        part = polygon_signed_area([p.vertex(j) for j in range(i, i + n + 1)])
        worst_cut = max(worst_cut, abs(part - half))
    oracle = worst_cut <= tol

    return algebraic, parallel, oracle


def _point_segment_distance(p: Vec2, a: Vec2, b: Vec2) -> float:
    ab = b - a
    denom = ab.norm2()
    if denom == 0.0:
        return (p - a).norm()
    t = min(1.0, max(0.0, (p - a).dot(ab) / denom))
    return (p - a - ab * t).norm()


def arc_oracle_error(h: HalfAreaPolygon, samples: int = 16) -> float:
    """Worst relative error of brute-force chord midpoints against the arcs.

    For each arc, ``samples`` bisecting chords are launched from interior
    points of its side; the chord midpoint must satisfy the frame product
    for hyperbolic arcs, or lie on the endpoint segment for degenerate
    ones (error then relative to the diameter).  The far endpoint is also
    required to land on the opposite side.
    """
    worst = 0.0
    area_tol = 1e-12 * h.area
    for arc in hyperbolic_envelope(h):
        i = arc.edge
        opposite = h.side_line(i + h.n)
        for j in range(samples):
            t = (j + 1.0) / (samples + 1.0)
            far = bisecting_chord_from(h.base, BoundaryPoint(i, t), area_tol)
            q = boundary_point_coords(h.base, far)
            if opposite.distance_to(q) > h.length_tol:
                raise GeometryError(
                    f"chord from side {i} missed the opposite side by {opposite.distance_to(q):.3e}"
                )
            mid = (boundary_point_coords(h.base, BoundaryPoint(i, t)) + q) * 0.5
            if arc.degenerate:
                err = _point_segment_distance(mid, arc.start, arc.end) / h.diameter
            else:
                img = arc.frame.apply(mid)
                err = abs(img.x * img.y - arc.k) / arc.k
            worst = max(worst, err)
    return worst


def sum_identity_residuals(h: HalfAreaPolygon) -> tuple[float, float]:
    """Residuals of the two vanishing sums over all edges.

    Returns ``(|sum g|, |sum g * side_midpoint|)`` with the vector sum
    taken about the vertex centroid so the result is translation-clean.
    """
    gs = [h.edge_quantities(i).g for i in range(h.m)]
    centroid = Vec2(
        sum(v.x for v in h.vertices) / h.m, sum(v.y for v in h.vertices) / h.m
    )
    acc = Vec2(0.0, 0.0)
    for i in range(h.m):
        mid = (h.vertex(i) + h.vertex(i + 1)) * 0.5
        acc = acc + (mid - centroid) * gs[i]
    return abs(sum(gs)), acc.norm()


def run_invariant_suite(h: HalfAreaPolygon, arc_samples: int = 16) -> list[InvariantResult]:
    """Run every structural invariant on one polygon and report per item."""
    results: list[InvariantResult] = []

    sum_g, sum_gm = sum_identity_residuals(h)
    tol_g = 1e-9 * max(1.0, sum(abs(h.edge_quantities(i).g) for i in range(h.m)))
    tol_gm = 1e-9 * h.diameter
    results.append(
        InvariantResult("sum g = 0", sum_g <= tol_g, f"residual {sum_g:.3e} (tol {tol_g:.3e})")
    )
    results.append(
        InvariantResult(
            "sum g * side-midpoint = 0", sum_gm <= tol_gm, f"residual {sum_gm:.3e} (tol {tol_gm:.3e})"
        )
    )

    verdicts = characterization_verdicts(h.base)
    results.append(
        InvariantResult(
            "half-area characterizations agree",
            all(verdicts),
            f"algebraic/parallel/oracle = {verdicts}",
        )
    )

    worst_pair = max(
        abs(h.edge_quantities(i).a_plus - h.edge_quantities(i + h.n).a_minus)
        for i in range(h.m)
    )
    results.append(
        InvariantResult(
            "bracket pairing across opposite edges",
            worst_pair <= h.area_tol,
            f"max |a+(i) - a-(i+n)| = {worst_pair:.3e}",
        )
    )
    worst_delta = max(
        abs(h.edge_quantities(i).delta + h.edge_quantities(i + h.n).delta)
        for i in range(h.m)
    )
    results.append(
        InvariantResult(
            "opposite-side bracket antisymmetry",
            worst_delta <= h.area_tol,
            f"max |delta(i) + delta(i+n)| = {worst_delta:.3e}",
        )
    )

    coeff_res = max(h.frame_coefficients(i).residual for i in range(h.m))
    results.append(
        InvariantResult(
            "chord-difference expansion reconstructs",
            coeff_res <= h.length_tol,
            f"max residual {coeff_res:.3e}",
        )
    )

    mids = midpoints_envelope(h)
    envs = discrete_envelope(h)
    worst_mid = max(h.principal_line(i).distance_to(mids[i]) for i in range(h.n))
    results.append(
        InvariantResult(
            "chord midpoints on their bisecting lines",
            worst_mid <= h.length_tol,
            f"max distance {worst_mid:.3e}",
        )
    )
    worst_env = 0.0
    for i in range(h.n):
        cross = line_intersection(h.principal_line(i), h.principal_line(i + 1))
        worst_env = max(worst_env, (cross - envs[i]).norm())
    results.append(
        InvariantResult(
            "discrete envelope matches line intersections",
            worst_env <= h.length_tol,
            f"max distance {worst_env:.3e}",
        )
    )

    cusps = detect_cusps(h)
    if cusps.degenerate_vertices:
        results.append(
            InvariantResult(
                "cusp count odd and >= 3",
                True,
                f"skipped: degenerate vertices {list(cusps.degenerate_vertices)}",
            )
        )
        results.append(
            InvariantResult(
                "cusp criteria agree",
                True,
                "skipped: degenerate vertices present",
            )
        )
    else:
        results.append(
            InvariantResult(
                "cusp count odd and >= 3",
                cusps.odd and cusps.count >= 3,
                f"count {cusps.count} over one half period",
            )
        )
        try:
            cusp_equivalence_report(h)
            results.append(InvariantResult("cusp criteria agree", True, "all vertices agree"))
        except CriteriaDisagree as exc:
            results.append(InvariantResult("cusp criteria agree", False, str(exc)))

    try:
        classify_symmetry(h)
        results.append(InvariantResult("symmetry classification consistent", True, ""))
    except GeometryError as exc:
        results.append(InvariantResult("symmetry classification consistent", False, str(exc)))

    try:
        worst_arc = arc_oracle_error(h, arc_samples)
        results.append(
            InvariantResult(
                "arc product matches chord oracle",
                worst_arc <= 1e-6,
                f"max relative error {worst_arc:.3e}",
            )
        )
    except GeometryError as exc:
        results.append(InvariantResult("arc product matches chord oracle", False, str(exc)))

    return results
