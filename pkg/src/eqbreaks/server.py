"""HTTP API for interactive exploration: one dataset loaded at startup,
classification computed fresh per request over immutable shared state.

Routes: /api/meta, /api/geometry, /api/classify, and / for the explorer UI
assets when a static directory is configured.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .classify import DEFAULT_PALETTE, classify
from .geo import PROJECTIONS, canonical_projection, fit_viewport, projected_area
from .geo import ring_to_pixels
from .series import METHOD_NAMES, MethodSpec

K_MAX = 9


@dataclass(frozen=True)
class ServerState:
    records: tuple
    geoms: tuple
    areas: dict  # projection -> {id: pixel area}
    rings_px: dict  # projection -> [{id, rings}]
    k_default: int
    palette: tuple
    weight_mode: str
    static_dir: str | None = None


def build_state(records, geoms, width=960, height=500, k_default=5,
                palette=DEFAULT_PALETTE, weight_mode="projected-area",
                static_dir=None) -> ServerState:
    """Precompute per-projection areas and pixel ring coordinates."""
    areas = {}
    rings_px = {}
    for proj in PROJECTIONS:
        viewport = fit_viewport(geoms, proj, width, height)
        areas[proj] = {g.id: projected_area(g, proj, viewport) for g in geoms}
        rings_px[proj] = [
            {
                "id": g.id,
                "rings": [
                    [[round(x, 2), round(y, 2)]
                     for x, y in ring_to_pixels(ring, proj, viewport)]
                    for part in g.parts for ring in part
                ],
            }
            for g in geoms
        ]
    return ServerState(
        records=tuple(records),
        geoms=tuple(geoms),
        areas=areas,
        rings_px=rings_px,
        k_default=k_default,
        palette=tuple(palette),
        weight_mode=weight_mode,
        static_dir=static_dir,
    )


def _bad_request(message, **params):
    body = {"error": message}
    if params:
        body["params"] = params
    return JSONResponse(status_code=400, content=body)


def create_app(state: ServerState) -> FastAPI:
    app = FastAPI(title="eqbreaks explorer")

    @app.get("/api/meta")
    def meta():
        values = [r.value for r in state.records]
        return {
            "regions": len(state.geoms),
            "methods": list(METHOD_NAMES),
            "k_default": state.k_default,
            "projections": list(PROJECTIONS),
            "value_stats": {"min": min(values), "max": max(values)},
        }

    @app.get("/api/geometry")
    def geometry(projection: str = "winkel3"):
        try:
            proj = canonical_projection(projection)
        except ValueError as e:
            return _bad_request(str(e), projection=projection)
        return {"projection": proj, "regions": state.rings_px[proj]}

    @app.get("/api/classify")
    def classify_route(method: str = "dp", k: str = "5", w: str = "0.5",
                       projection: str = "winkel3", snap_ties: str = "0"):
        params = {"method": method, "k": k, "w": w, "projection": projection,
                  "snap_ties": snap_ties}
        if method not in METHOD_NAMES:
            return _bad_request(f"unknown method {method!r}", **params)
        try:
            k_val = int(k)
        except ValueError:
            return _bad_request(f"k must be an integer, got {k!r}", **params)
        if not 1 <= k_val <= K_MAX:
            return _bad_request(f"k must be in [1, {K_MAX}]", **params)
        try:
            w_val = float(w)
        except ValueError:
            return _bad_request(f"w must be a number, got {w!r}", **params)
        if not 0.0 <= w_val <= 1.0:
            return _bad_request("w must be in [0, 1]", **params)
        try:
            proj = canonical_projection(projection)
        except ValueError as e:
            return _bad_request(str(e), **params)
        snap = snap_ties.lower() in ("1", "true", "yes", "on")

        spec = MethodSpec(kind=method, k=k_val,
                          w=w_val if method == "dp-weighted" else None)
        try:
            result = classify(state.records, state.areas[proj], spec,
                              state.palette, snap=snap,
                              weight_mode=state.weight_mode)
        except ValueError as e:
            return _bad_request(str(e), **params)

        body = {
            "method": method,
            "k": k_val,
        }
        if method == "dp-weighted":
            body["w"] = w_val
        body["break_indices"] = list(result.breaks.indices)
        body["thresholds"] = list(result.thresholds)
        body["error_abs"] = result.error_abs
        if result.weighted_objective is not None:
            body["weighted_objective"] = result.weighted_objective
        body["classes"] = [
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
        body["assignments"] = result.assignments
        return body

    static_dir = state.static_dir
    if static_dir is None:
        candidate = os.path.join(os.path.dirname(os.path.dirname(
            os.path.dirname(os.path.abspath(__file__)))), "frontend", "dist")
        if os.path.isdir(candidate):
            static_dir = candidate
    if static_dir and os.path.isdir(static_dir):
        app.mount("/", StaticFiles(directory=static_dir, html=True))
    return app
