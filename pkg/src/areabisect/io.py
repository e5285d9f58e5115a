"""Polygon JSON documents and SVG figure rendering.

The JSON schema is deliberately small: a top-level object with a required
``vertices`` array of ``[x, y]`` pairs, an optional ``name`` string and an
optional ``metadata`` object; nothing else.  Floats are rendered with 17
significant digits so documents round-trip losslessly and byte-identically.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace

from .envelope import EnvelopeSet
from .errors import MalformedDocument
from .geom import Vec2, polygon_signed_area
from .halfarea import HalfAreaPolygon
from .polygon import Polygon

__all__ = [
    "PolygonDocument",
    "read_polygon",
    "write_polygon",
    "RenderOptions",
    "render_svg",
]

# Fixed figure legend; one color per layer, independent of input.
COLOR_POLYGON = "#000000"
COLOR_PRINCIPAL = "#999999"
COLOR_MIDPOINTS = "#d62728"
COLOR_DISCRETE = "#1f77b4"
COLOR_ARCS = "#ff7f0e"
COLOR_CUSPS = "#d62728"


@dataclass(frozen=True)
class PolygonDocument:
    """A named vertex list (counterclockwise) with free-form metadata."""

    vertices: tuple[tuple[float, float], ...]
    name: str | None = None
    metadata: dict = field(default_factory=dict)

    def to_polygon(self) -> Polygon:
        return Polygon(self.vertices)

    @classmethod
    def from_polygon(cls, p: Polygon, name: str | None = None, metadata: dict | None = None):
        return cls(tuple(v.as_tuple() for v in p.vertices), name, dict(metadata or {}))


def _require_finite_number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise MalformedDocument(f"{where}: expected a number, got {value!r}")
    out = float(value)
    if not math.isfinite(out):
        raise MalformedDocument(f"{where}: non-finite number {value!r}")
    return out


def read_polygon(data: bytes | str) -> PolygonDocument:
    """Parse a polygon document, reversing clockwise input with a warning flag.

    Raises :class:`MalformedDocument` on any schema violation: missing
    ``vertices``, malformed pairs, non-finite numbers, fewer than 3
    vertices, or unknown top-level keys.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedDocument(f"not UTF-8: {exc}") from exc
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise MalformedDocument("top level must be a JSON object")
    unknown = set(raw) - {"vertices", "name", "metadata"}
    if unknown:
        raise MalformedDocument(f"unknown top-level keys: {sorted(unknown)}")
    if "vertices" not in raw:
        raise MalformedDocument("missing required key 'vertices'")
    if not isinstance(raw["vertices"], list) or len(raw["vertices"]) < 3:
        raise MalformedDocument("'vertices' must be an array of at least 3 pairs")
    vertices = []
    for idx, entry in enumerate(raw["vertices"]):
        if not isinstance(entry, list) or len(entry) != 2:
            raise MalformedDocument(f"vertex {idx} is not a 2-array")
        vertices.append(
            (
                _require_finite_number(entry[0], f"vertex {idx}.x"),
                _require_finite_number(entry[1], f"vertex {idx}.y"),
            )
        )
    name = raw.get("name")
    if name is not None and not isinstance(name, str):
        raise MalformedDocument("'name' must be a string")
    metadata = raw.get("metadata", {})
    if not isinstance(metadata, dict) or any(not isinstance(k, str) for k in metadata):
        raise MalformedDocument("'metadata' must be an object with string keys")
    doc = PolygonDocument(tuple(vertices), name, dict(metadata))
    signed = polygon_signed_area([Vec2(x, y) for x, y in vertices])
    if signed < 0.0:
        meta = dict(doc.metadata)
        meta["reversed_orientation"] = True
        doc = replace(doc, vertices=tuple(reversed(doc.vertices)), metadata=meta)
    return doc


def _fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def _emit_json(value) -> str:
    if value is None or isinstance(value, bool):
        return json.dumps(value)
    if isinstance(value, float):
        return _fmt_float(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_emit_json(v) for v in value) + "]"
    if isinstance(value, dict):
        items = sorted(value.items())
        return "{" + ", ".join(f"{json.dumps(k)}: {_emit_json(v)}" for k, v in items) + "}"
    raise MalformedDocument(f"cannot serialize {type(value).__name__} into a document")


def write_polygon(doc: PolygonDocument) -> str:
    """Serialize a document; floats carry 17 significant digits."""
    parts = []
    if doc.name is not None:
        parts.append(f'"name": {json.dumps(doc.name)}')
    vertex_text = ", ".join(f"[{_fmt_float(x)}, {_fmt_float(y)}]" for x, y in doc.vertices)
    parts.append(f'"vertices": [{vertex_text}]')
    if doc.metadata:
        parts.append(f'"metadata": {_emit_json(doc.metadata)}')
    return "{" + ", ".join(parts) + "}\n"


@dataclass(frozen=True)
class RenderOptions:
    """Figure size, margins, layer toggles and arc resolution."""

    width: int = 800
    height: int = 800
    margin_fraction: float = 0.05
    show_polygon: bool = True
    show_principal_lines: bool = True
    show_midpoints: bool = True
    show_discrete: bool = True
    show_arcs: bool = True
    show_cusps: bool = True
    show_legend: bool = True
    arc_samples: int = 64

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise MalformedDocument("render size must be positive")
        if self.arc_samples < 2:
            raise MalformedDocument("arc_samples must be at least 2")


def _world_bounds(h: HalfAreaPolygon, env: EnvelopeSet, opts: RenderOptions):
    pts = list(h.vertices)
    pts.extend(env.midpoints)
    pts.extend(env.discrete)
    for arc in env.arcs:
        pts.extend(arc.sample(opts.arc_samples))
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    return min(xs), min(ys), max(xs), max(ys)


def render_svg(h: HalfAreaPolygon, env: EnvelopeSet, opts: RenderOptions = RenderOptions()) -> str:
    """Deterministic SVG 1.1 figure of a polygon and its envelope objects.

    Layers (each in its own group): polygon outline, dashed principal
    chords, mid-points envelope, discrete envelope, hyperbolic arcs as
    sampled polylines, filled cusp markers at flagged chord midpoints, and
    a legend naming the colors.  The vertical axis is flipped so
    counterclockwise polygons render counterclockwise on screen.
    """
    min_x, min_y, max_x, max_y = _world_bounds(h, env, opts)
    span_x = max(max_x - min_x, 1e-30)
    span_y = max(max_y - min_y, 1e-30)
    inner_w = opts.width * (1.0 - 2.0 * opts.margin_fraction)
    inner_h = opts.height * (1.0 - 2.0 * opts.margin_fraction)
    scale = min(inner_w / span_x, inner_h / span_y)
    off_x = opts.margin_fraction * opts.width + 0.5 * (inner_w - span_x * scale)
    off_y = opts.margin_fraction * opts.height + 0.5 * (inner_h - span_y * scale)

    def txy(p: Vec2) -> tuple[float, float]:
        return (
            off_x + (p.x - min_x) * scale,
            opts.height - (off_y + (p.y - min_y) * scale),
        )

    def fmt(p: Vec2) -> str:
        x, y = txy(p)
        return f"{x:.3f},{y:.3f}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{opts.width}" height="{opts.height}" '
        f'viewBox="0 0 {opts.width} {opts.height}">'
    ]
    if opts.show_polygon:
        pts = " ".join(fmt(v) for v in h.vertices)
        out.append(
            f'<g id="polygon"><polygon points="{pts}" fill="none" '
            f'stroke="{COLOR_POLYGON}" stroke-width="1.5"/></g>'
        )
    if opts.show_principal_lines:
        out.append(
            f'<g id="principal-lines" stroke="{COLOR_PRINCIPAL}" '
            f'stroke-width="1" stroke-dasharray="6 4">'
        )
        for i in range(h.n):
            x1, y1 = txy(h.vertex(i))
            x2, y2 = txy(h.vertex(i + h.n))
            out.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}"/>')
        out.append("</g>")
    if opts.show_midpoints:
        pts = " ".join(fmt(p) for p in env.midpoints)
        out.append(f'<g id="midpoints" stroke="{COLOR_MIDPOINTS}" fill="{COLOR_MIDPOINTS}">')
        out.append(f'<polyline points="{pts} {fmt(env.midpoints[0])}" fill="none" stroke-width="1"/>')
        for p in env.midpoints:
            x, y = txy(p)
            out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="2.5"/>')
        out.append("</g>")
    if opts.show_discrete:
        pts = " ".join(fmt(p) for p in env.discrete)
        out.append(f'<g id="discrete-envelope" stroke="{COLOR_DISCRETE}" fill="{COLOR_DISCRETE}">')
        out.append(f'<polyline points="{pts} {fmt(env.discrete[0])}" fill="none" stroke-width="1"/>')
        for p in env.discrete:
            x, y = txy(p)
            out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="2.5"/>')
        out.append("</g>")
    if opts.show_arcs:
        out.append(f'<g id="hyperbolic-envelope" stroke="{COLOR_ARCS}" fill="none" stroke-width="1.5">')
        for arc in env.arcs:
            pts = " ".join(fmt(p) for p in arc.sample(opts.arc_samples))
            out.append(f'<polyline points="{pts}"/>')
        out.append("</g>")
    if opts.show_cusps:
        out.append(f'<g id="cusps" fill="{COLOR_CUSPS}">')
        for i in range(h.n):
            if env.cusps.flags[i]:
                x, y = txy(env.midpoints[i])
                out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="4"/>')
        out.append("</g>")
    if opts.show_legend:
        entries = [
            (COLOR_POLYGON, "polygon"),
            (COLOR_PRINCIPAL, "bisecting chords"),
            (COLOR_MIDPOINTS, "mid-points envelope"),
            (COLOR_DISCRETE, "discrete envelope"),
            (COLOR_ARCS, "hyperbolic envelope"),
            (COLOR_CUSPS, "cusps"),
        ]
        out.append('<g id="legend" font-family="sans-serif" font-size="12">')
        for row, (color, label) in enumerate(entries):
            y = 16 + 16 * row
            out.append(f'<rect x="8" y="{y - 9}" width="10" height="10" fill="{color}"/>')
            out.append(f'<text x="24" y="{y}">{label}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
