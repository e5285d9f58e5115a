"""Command-line interface: every construction reachable from the shell.

Reports are JSON on stdout by default (``--human`` switches to plain
text).  Exit codes: 0 success, 1 validation or oracle failure, 2 usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .checks import run_invariant_suite
from .envelope import classify_symmetry, detect_cusps, envelope_set
from .errors import GeometryError
from .family import family_member, inverse_family
from .generators import KINDS, GeneratorConfig, generate
from .halfarea import HalfAreaPolygon, is_half_area
from .io import PolygonDocument, RenderOptions, read_polygon, render_svg, write_polygon
from .polygon import Polygon, augment_to_half_area

__all__ = ["main"]


def _load_polygon(path: str) -> tuple[PolygonDocument, Polygon]:
    doc = read_polygon(Path(path).read_bytes())
    return doc, doc.to_polygon()


def _as_half_area(p: Polygon, strict: bool, context: str) -> HalfAreaPolygon:
    """Promote to half-area, augmenting non-half-area input unless strict."""
    if p.m % 2 == 0 and is_half_area(p).ok:
        return HalfAreaPolygon(p)
    if strict:
        raise GeometryError(f"{context}: input is not half-area and --strict is set")
    print(f"note: input is not half-area; augmenting before {context}", file=sys.stderr)
    return augment_to_half_area(p)


def _emit(report: dict, human: bool) -> None:
    if human:
        _print_human(report)
    else:
        print(json.dumps(report, sort_keys=True))


def _print_human(report: dict, indent: str = "") -> None:
    for key in sorted(report):
        value = report[key]
        if isinstance(value, dict):
            print(f"{indent}{key}:")
            _print_human(value, indent + "  ")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{indent}{key}:")
            for item in value:
                _print_human(item, indent + "  ")
                print(f"{indent}  -")
        else:
            print(f"{indent}{key}: {value}")


def _classification_dict(h: HalfAreaPolygon) -> dict:
    cls = classify_symmetry(h)
    out: dict = {"kind": cls.kind}
    if cls.center is not None:
        out["center"] = [cls.center.x, cls.center.y]
    if cls.c is not None:
        out["c"] = cls.c
    return out


def _cusp_dict(h: HalfAreaPolygon) -> dict:
    report = detect_cusps(h)
    return {
        "flags": list(report.flags),
        "count": report.count,
        "parity": "odd" if report.odd else "even",
        "degenerate_vertices": list(report.degenerate_vertices),
    }


def _envelope_dict(h: HalfAreaPolygon) -> dict:
    env = envelope_set(h)
    arcs = []
    for arc in env.arcs:
        entry: dict = {
            "edge": arc.edge,
            "degenerate": arc.degenerate,
            "start": [arc.start.x, arc.start.y],
            "end": [arc.end.x, arc.end.y],
        }
        if not arc.degenerate:
            entry["k"] = arc.k
        arcs.append(entry)
    return {
        "midpoints": [[p.x, p.y] for p in env.midpoints],
        "discrete": [[p.x, p.y] for p in env.discrete],
        "arcs": arcs,
        "cusps": _cusp_dict(h),
    }


def _cmd_check(args) -> int:
    _, poly = _load_polygon(args.input)
    report: dict = {"vertex_count": poly.m, "area": poly.area}
    if poly.m % 2 != 0:
        report["half_area"] = False
        report["reason"] = "odd vertex count"
        _emit(report, args.human)
        return 1
    ha = is_half_area(poly)
    report["half_area"] = ha.ok
    report["max_residual"] = ha.max_residual
    report["residuals"] = list(ha.residuals)
    if ha.ok:
        report["classification"] = _classification_dict(HalfAreaPolygon(poly))
    _emit(report, args.human)
    return 0 if ha.ok else 1


def _cmd_augment(args) -> int:
    doc, poly = _load_polygon(args.input)
    h = augment_to_half_area(poly)
    meta = dict(doc.metadata)
    meta["augmented_from"] = poly.m
    out = PolygonDocument.from_polygon(h.base, doc.name, meta)
    Path(args.output).write_text(write_polygon(out), encoding="utf-8")
    return 0


def _cmd_envelope(args) -> int:
    _, poly = _load_polygon(args.input)
    h = _as_half_area(poly, args.strict, "computing envelopes")
    report = _envelope_dict(h)
    if args.json_out:
        Path(args.json_out).write_text(json.dumps(report, sort_keys=True) + "\n", encoding="utf-8")
    if args.svg:
        opts = RenderOptions(arc_samples=args.arc_samples)
        Path(args.svg).write_text(render_svg(h, envelope_set(h), opts), encoding="utf-8")
    _emit(report, args.human)
    return 0


def _cmd_cusps(args) -> int:
    _, poly = _load_polygon(args.input)
    h = _as_half_area(poly, args.strict, "counting cusps")
    _emit(_cusp_dict(h), args.human)
    return 0


def _cmd_family(args) -> int:
    doc, poly = _load_polygon(args.input)
    fam = inverse_family(HalfAreaPolygon(poly))
    if args.interval:
        _emit({"c_lo": fam.c_lo, "c_hi": fam.c_hi}, args.human)
        return 0
    if args.c is None or args.output is None:
        print("family: either --interval or both -c and -o are required", file=sys.stderr)
        return 2
    member = family_member(fam, args.c)
    meta = dict(doc.metadata)
    meta["family_parameter"] = args.c
    out = PolygonDocument.from_polygon(member.base, doc.name, meta)
    Path(args.output).write_text(write_polygon(out), encoding="utf-8")
    return 0


def _cmd_generate(args) -> int:
    config = GeneratorConfig(
        kind=args.kind,
        n=args.n,
        seed=args.seed,
        c=args.c,
        eps=args.eps,
        noise=args.noise,
    )
    h = generate(config)
    meta: dict = {"kind": args.kind, "n": args.n, "seed": args.seed}
    if args.c is not None:
        meta["c"] = args.c
    if args.eps is not None:
        meta["eps"] = args.eps
    meta["classification"] = _classification_dict(h)["kind"]
    doc = PolygonDocument.from_polygon(h.base, f"{args.kind}-{2 * h.n}gon", meta)
    text = write_polygon(doc)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    _, poly = _load_polygon(args.input)
    h = HalfAreaPolygon(poly)
    results = run_invariant_suite(h, arc_samples=args.samples)
    report = {
        "invariants": [
            {"name": r.name, "pass": r.ok, "detail": r.detail} for r in results
        ],
        "ok": all(r.ok for r in results),
    }
    _emit(report, args.human)
    return 0 if report["ok"] else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="areabisect",
        description="Half-area polygons and the envelopes of their bisecting lines.",
    )
    parser.add_argument("--human", action="store_true", help="plain-text reports instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="half-area diagnostic report")
    p.add_argument("input")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("augment", help="insert vertex chord endpoints to make the input half-area")
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_augment)

    p = sub.add_parser("envelope", help="mid-points, discrete and hyperbolic envelopes")
    p.add_argument("input")
    p.add_argument("--svg", help="write an SVG figure to this path")
    p.add_argument("--json", dest="json_out", help="write the envelope report to this path")
    p.add_argument("--arc-samples", type=int, default=64)
    p.add_argument("--strict", action="store_true", help="fail instead of augmenting")
    p.set_defaults(func=_cmd_envelope)

    p = sub.add_parser("cusps", help="cusp report with count and parity")
    p.add_argument("input")
    p.add_argument("--strict", action="store_true", help="fail instead of augmenting")
    p.set_defaults(func=_cmd_cusps)

    p = sub.add_parser("family", help="members of the envelope-preserving family")
    p.add_argument("input")
    p.add_argument("-c", type=float, help="family parameter")
    p.add_argument("-o", "--output", help="output polygon path")
    p.add_argument("--interval", action="store_true", help="print the valid parameter interval")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("generate", help="seeded example polygons")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-c", type=float, help="diagonal ratio for skew-symmetric")
    p.add_argument("--eps", type=float, help="outward offset for maximal-cusps")
    p.add_argument("--noise", type=float, default=0.2)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("verify", help="run the full invariant suite")
    p.add_argument("input")
    p.add_argument("--samples", type=int, default=16, help="oracle chords per arc")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
