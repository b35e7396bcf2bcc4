"""Geometry ingestion, forward projections, viewport fit and pixel areas.

Areas are measured in projected screen pixels, not spherical km^2: the
weights feeding equal-area classification are exactly what the map shows.
Rings crossing the antimeridian are not clipped (documented limitation).
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

MERCATOR_LAT_LIMIT = math.radians(85.051129)
WINKEL_PHI1 = math.acos(2.0 / math.pi)  # standard parallel, fixed

PROJECTIONS = ("winkel3", "mercator")


@dataclass(frozen=True)
class RegionGeometry:
    """One region: id plus polygon parts (exterior ring first, then holes).

    Ring coordinates are (lon, lat) in degrees.
    """

    id: str
    parts: tuple  # tuple of parts; each part is a tuple of rings


@dataclass(frozen=True)
class Viewport:
    """Affine fit from projection units to pixels, north-up flipped."""

    width: float
    height: float
    scale: float
    tx: float
    ty: float

    def to_pixel(self, x: float, y: float) -> tuple[float, float]:
        return (self.tx + self.scale * x, self.ty - self.scale * y)


def _sinc(a: float) -> float:
    if abs(a) < 1e-8:
        return 1.0 - a * a / 6.0
    return math.sin(a) / a


def project(lam: float, phi: float, kind: str) -> tuple[float, float]:
    """Forward projection; lam/phi in radians, north-up output."""
    if kind == "mercator":
        phi = max(-MERCATOR_LAT_LIMIT, min(MERCATOR_LAT_LIMIT, phi))
        # asinh(tan(phi)) == ln(tan(pi/4 + phi/2)), exact and odd at 0
        return (lam, math.asinh(math.tan(phi)))
    if kind == "winkel3":
        alpha = math.acos(max(-1.0, min(1.0, math.cos(phi) * math.cos(lam / 2.0))))
        sa = _sinc(alpha)
        x = 0.5 * (lam * math.cos(WINKEL_PHI1)
                   + 2.0 * math.cos(phi) * math.sin(lam / 2.0) / sa)
        y = 0.5 * (phi + math.sin(phi) / sa)
        return (x, y)
    raise ValueError(f"unknown projection {kind!r}; valid: {', '.join(PROJECTIONS)}")


def _check_ring(ring, feature_idx):
    if len(ring) < 4:
        raise ValueError(f"feature {feature_idx}: ring with < 4 points")
    if ring[0] != ring[-1]:
        raise ValueError(f"feature {feature_idx}: ring not closed")
    for lon, lat in ring:
        if not (math.isfinite(lon) and math.isfinite(lat)):
            raise ValueError(f"feature {feature_idx}: non-finite coordinate")
        if not (-180.0 <= lon <= 180.0 and -90.0 <= lat <= 90.0):
            raise ValueError(
                f"feature {feature_idx}: coordinate ({lon}, {lat}) out of range")


def _rings_of(coords, feature_idx):
    rings = []
    for ring in coords:
        pts = tuple((float(p[0]), float(p[1])) for p in ring)
        _check_ring(pts, feature_idx)
        rings.append(pts)
    return tuple(rings)


def parse_geojson(text, id_property: str = "id"):
    """Parse a FeatureCollection of Polygon/MultiPolygon features.

    Returns (regions, skipped) where skipped counts features with
    unsupported geometry types.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"malformed GeoJSON at line {e.lineno} col {e.colno}: "
                         f"{e.msg}") from e
    if not isinstance(doc, dict) or doc.get("type") != "FeatureCollection":
        raise ValueError("expected a GeoJSON FeatureCollection")

    regions = []
    skipped = 0
    for idx, feat in enumerate(doc.get("features", [])):
        props = feat.get("properties") or {}
        rid = props.get(id_property)
        if rid is None and id_property == "id":
            rid = feat.get("id")
        if rid is None:
            raise ValueError(
                f"feature {idx}: missing id property {id_property!r}")
        geom = feat.get("geometry") or {}
        gtype = geom.get("type")
        if gtype == "Polygon":
            parts = (_rings_of(geom["coordinates"], idx),)
        elif gtype == "MultiPolygon":
            parts = tuple(_rings_of(p, idx) for p in geom["coordinates"])
        else:
            skipped += 1
            continue
        regions.append(RegionGeometry(id=str(rid), parts=parts))
    return regions, skipped


def fit_viewport(geoms, kind: str, width: float, height: float,
                 margin: float = 10.0) -> Viewport:
    """Fit the projected bounding box into the canvas, aspect preserved,
    centered, with a fixed pixel margin."""
    if not geoms:
        raise ValueError("need at least one geometry")
    if width < 40 or height < 40:
        raise ValueError("width and height must be >= 40")
    xmin = ymin = math.inf
    xmax = ymax = -math.inf
    for g in geoms:
        for part in g.parts:
            for ring in part:
                for lon, lat in ring:
                    x, y = project(math.radians(lon), math.radians(lat), kind)
                    xmin = min(xmin, x)
                    xmax = max(xmax, x)
                    ymin = min(ymin, y)
                    ymax = max(ymax, y)
    dx = xmax - xmin
    dy = ymax - ymin
    if dx <= 0 and dy <= 0:
        raise ValueError("degenerate (zero-extent) bounding box")
    scale = math.inf
    if dx > 0:
        scale = min(scale, (width - 2 * margin) / dx)
    if dy > 0:
        scale = min(scale, (height - 2 * margin) / dy)
    tx = (width - scale * dx) / 2.0 - scale * xmin
    ty = (height - scale * dy) / 2.0 + scale * ymax
    return Viewport(width=width, height=height, scale=scale, tx=tx, ty=ty)


def ring_to_pixels(ring, kind: str, viewport: Viewport):
    """Project a degree-space ring and map it to pixel coordinates."""
    return [viewport.to_pixel(*project(math.radians(lon), math.radians(lat), kind))
            for lon, lat in ring]


def ring_area(points) -> float:
    """Absolute shoelace area of one ring of planar points."""
    s = 0.0
    for i in range(len(points) - 1):
        x0, y0 = points[i]
        x1, y1 = points[i + 1]
        s += x0 * y1 - x1 * y0
    return abs(s) / 2.0


def part_area(rings_pixels) -> float:
    """|exterior| minus hole areas, floored at zero."""
    ext = ring_area(rings_pixels[0])
    holes = sum(ring_area(r) for r in rings_pixels[1:])
    return max(ext - holes, 0.0)


def projected_area(geom: RegionGeometry, kind: str, viewport: Viewport) -> float:
    """On-screen area of a region in square pixels."""
    total = 0.0
    for part in geom.parts:
        for ring in part:
            if len(ring) < 4:
                raise ValueError(f"region {geom.id}: ring with < 4 points")
        total += part_area([ring_to_pixels(r, kind, viewport) for r in part])
    return total


def canonical_projection(name: str) -> str:
    """Accept the common aliases for the two supported projections."""
    aliases = {"winkel3": "winkel3", "winkel-tripel": "winkel3",
               "mercator": "mercator"}
    try:
        return aliases[name]
    except KeyError:
        raise ValueError(
            f"unknown projection {name!r}; valid: {', '.join(PROJECTIONS)}") from None
