"""Command-line pipeline: CSV values + GeoJSON in; breaks JSON, classified
GeoJSON, SVG maps and the method comparison table out.

Exit codes: 0 success, 1 data error, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import json
import random
import sys

from .classify import (DEFAULT_PALETTE, NO_DATA_COLOR, DataRecord,
                       classify)
from .geo import canonical_projection, fit_viewport, parse_geojson
from .geo import projected_area
from .render import render_svg
from .series import METHOD_NAMES, MethodSpec

COMPARE_ORDER = ("quantile", "greedy1", "greedy2", "dp",
                 "balanced-greedy", "dp-weighted")


def _round_floats(obj, digits=12):
    if isinstance(obj, float):
        return float(f"{obj:.{digits}g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v, digits) for v in obj]
    return obj


def read_csv_records(path: str):
    """CSV with header id,value[,weight]; LF or CRLF."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise ValueError(f"{path}: empty CSV")
        fields = [f.strip() for f in reader.fieldnames]
        if fields[:2] != ["id", "value"]:
            raise ValueError(f"{path}: header must be id,value[,weight]")
        has_weight = "weight" in fields
        records = []
        for i, row in enumerate(reader, start=2):
            try:
                value = float(row["value"])
            except (TypeError, ValueError):
                raise ValueError(f"{path}:{i}: bad value {row.get('value')!r}") from None
            weight = None
            if has_weight and row.get("weight") not in (None, ""):
                weight = float(row["weight"])
            records.append(DataRecord(id=row["id"], value=value, weight=weight))
    return records


def synthetic_records(seed: int, n: int = 200):
    """Heavy-tailed synthetic dataset for compare runs without input files."""
    rng = random.Random(seed)
    records = []
    for i in range(n):
        records.append(DataRecord(
            id=f"r{i:04d}",
            value=rng.uniform(0.0, 100.0),
            weight=rng.lognormvariate(0.0, 2.0),
        ))
    return records


def _load_inputs(args):
    """Returns (records, geoms, areas_by_id, viewport, projection, weight_mode)."""
    geoms = None
    areas = None
    viewport = None
    projection = canonical_projection(args.projection)
    if args.geo:
        with open(args.geo, "rb") as fh:
            geoms, _skipped = parse_geojson(fh.read(), args.id_property)
        viewport = fit_viewport(geoms, projection, args.width, args.height)
        areas = {g.id: projected_area(g, projection, viewport) for g in geoms}

    if args.input:
        records = read_csv_records(args.input)
    elif getattr(args, "seed", None) is not None:
        records = synthetic_records(args.seed, getattr(args, "n", 200))
    else:
        raise ValueError("no --input CSV given (and no --seed for synthetic data)")

    weight_mode = args.weight_mode
    if weight_mode is None:
        if args.geo:
            weight_mode = "projected-area"
        elif any(r.weight is not None for r in records):
            weight_mode = "column"
        else:
            weight_mode = "unit"
    return records, geoms, areas, viewport, projection, weight_mode


def _method_spec(args, kind=None):
    kind = kind or args.method
    return MethodSpec(kind=kind, k=args.classes,
                      w=args.weight if kind == "dp-weighted" else None)


def _palette(args):
    if args.palette:
        return tuple(c.strip() for c in args.palette.split(","))
    return DEFAULT_PALETTE


def _result_payload(result):
    payload = {
        "method": result.method.kind,
        "k": result.method.k,
    }
    if result.method.kind == "dp-weighted":
        payload["w"] = 0.5 if result.method.w is None else result.method.w
    payload["break_indices"] = list(result.breaks.indices)
    payload["thresholds"] = list(result.thresholds)
    payload["error_abs"] = result.error_abs
    if result.weighted_objective is not None:
        payload["weighted_objective"] = result.weighted_objective
    payload["classes"] = [
        {
            "count": c.count,
            "weight_sum": c.weight_sum,
            "weight_share": c.weight_share,
            "min": c.value_min,
            "max": c.value_max,
            "color": c.color,
        }
        for c in result.classes
    ]
    return payload


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_breaks(args) -> int:
    records, _geoms, areas, _vp, _proj, weight_mode = _load_inputs(args)
    result = classify(records, areas, _method_spec(args), _palette(args),
                      snap=args.snap_ties, weight_mode=weight_mode)
    payload = _round_floats(_result_payload(result))
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def cmd_classify(args) -> int:
    if not args.geo:
        raise ValueError("classify requires --geo")
    records, _geoms, areas, _vp, _proj, weight_mode = _load_inputs(args)
    result = classify(records, areas, _method_spec(args), _palette(args),
                      snap=args.snap_ties, weight_mode=weight_mode)
    values = {r.id: r.value for r in records}
    with open(args.geo, encoding="utf-8") as fh:
        doc = json.load(fh)
    for feat in doc.get("features", []):
        props = feat.setdefault("properties", {})
        rid = props.get(args.id_property)
        if rid is None and args.id_property == "id":
            rid = feat.get("id")
        rid = None if rid is None else str(rid)
        cls = result.assignments.get(rid)
        props["class"] = cls
        props["color"] = (result.classes[cls].color if cls is not None
                          else NO_DATA_COLOR)
        props["value"] = values.get(rid)
    _emit(json.dumps(_round_floats(doc)) + "\n", args.out)
    return 0


def cmd_render(args) -> int:
    if not args.geo:
        raise ValueError("render requires --geo")
    records, geoms, areas, viewport, projection, weight_mode = _load_inputs(args)
    result = classify(records, areas, _method_spec(args), _palette(args),
                      snap=args.snap_ties, weight_mode=weight_mode)
    _emit(render_svg(geoms, result, projection, viewport), args.out)
    return 0


def cmd_compare(args) -> int:
    records, _geoms, areas, _vp, _proj, weight_mode = _load_inputs(args)
    lines = [f"# weights: {weight_mode}", f"{'method':<16} error_abs"]
    for kind in COMPARE_ORDER:
        spec = _method_spec(args, kind)
        result = classify(records, areas, spec, _palette(args),
                          snap=args.snap_ties, weight_mode=weight_mode)
        lines.append(f"{kind:<16} {result.error_abs:.6g}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_serve(args) -> int:
    from . import server as server_mod

    records, geoms, _areas, _vp, _proj, weight_mode = _load_inputs(args)
    if geoms is None:
        raise ValueError("serve requires --geo")
    state = server_mod.build_state(
        records, geoms, width=args.width, height=args.height,
        k_default=args.classes, palette=_palette(args),
        weight_mode=weight_mode, static_dir=args.static_dir)
    app = server_mod.create_app(state)
    import uvicorn

    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqbreaks",
        description="Equal-area choropleth classification toolkit")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, need_method=True):
        p.add_argument("--input", help="CSV path with header id,value[,weight]")
        p.add_argument("--geo", help="GeoJSON FeatureCollection path")
        p.add_argument("--id-property", default="id")
        if need_method:
            p.add_argument("--method", default="dp", choices=METHOD_NAMES)
        p.add_argument("--classes", "-k", type=int, default=5)
        p.add_argument("--weight", "-w", type=float, default=0.5,
                       help="W in [0,1] for dp-weighted")
        p.add_argument("--projection", default="winkel3",
                       choices=["winkel3", "mercator"])
        p.add_argument("--width", type=int, default=960)
        p.add_argument("--height", type=int, default=500)
        p.add_argument("--weight-mode", default=None,
                       choices=["projected-area", "unit", "column"])
        p.add_argument("--palette", help="comma-separated hex anchors")
        p.add_argument("--snap-ties", action="store_true")
        p.add_argument("--out", help="output path (default: stdout)")

    p = sub.add_parser("breaks", help="emit breaks JSON")
    common(p)
    p.set_defaults(func=cmd_breaks)

    p = sub.add_parser("classify", help="emit classified GeoJSON")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("render", help="emit an SVG map with legend")
    common(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("compare", help="error_abs comparison table")
    common(p, need_method=False)
    p.add_argument("--seed", type=int,
                   help="generate synthetic lognormal data instead of --input")
    p.add_argument("--n", type=int, default=200,
                   help="synthetic dataset size (with --seed)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("serve", help="run the classification API + explorer UI")
    common(p)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--static-dir", help="directory of web explorer assets")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, IndexError) as e:
        print(f"eqbreaks: error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"eqbreaks: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
