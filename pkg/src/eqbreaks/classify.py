"""Join values with weights, run a break method, emit the classification:
per-region class, thresholds, per-class legend stats and colors."""
from __future__ import annotations

from dataclasses import dataclass

from .partition import compute_breaks, error_abs, snap_ties, weighted_objective
from .series import Breaks, MethodSpec, SortedSeries

DEFAULT_PALETTE = ("#ffffb2", "#fecc5c", "#fd8d3c", "#f03b20", "#bd0026")
NO_DATA_COLOR = "#cccccc"


@dataclass(frozen=True)
class DataRecord:
    id: str
    value: float
    weight: float | None = None  # used only in column weight mode


@dataclass(frozen=True)
class ClassStats:
    count: int
    weight_sum: float
    weight_share: float
    value_min: float | None
    value_max: float | None
    color: str


@dataclass(frozen=True)
class ClassificationResult:
    method: MethodSpec
    breaks: Breaks
    assignments: dict  # id -> class index in [0, k)
    thresholds: tuple  # value at each break index
    classes: tuple  # ClassStats per class, including empty ones
    error_abs: float
    weighted_objective: float | None


def _parse_hex(color: str) -> tuple[int, int, int]:
    c = color.strip()
    if c.startswith("#"):
        c = c[1:]
    if len(c) != 6:
        raise ValueError(f"invalid hex color {color!r}")
    try:
        return tuple(int(c[i:i + 2], 16) for i in (0, 2, 4))
    except ValueError:
        raise ValueError(f"invalid hex color {color!r}") from None


def resolve_palette(anchors, k: int):
    """k colors along the anchor polyline; exact anchors when k matches."""
    anchors = list(anchors)
    if k < 1:
        raise ValueError("k must be >= 1")
    if len(anchors) < 2:
        raise ValueError("need at least 2 palette anchors")
    rgb = [_parse_hex(a) for a in anchors]
    if k == len(anchors):
        return ["#%02x%02x%02x" % c for c in rgb]
    if k == 1:
        return ["#%02x%02x%02x" % rgb[0]]
    out = []
    last = len(rgb) - 1
    for j in range(k):
        pos = j / (k - 1) * last
        i = min(int(pos), last - 1)
        f = pos - i
        channels = tuple(
            int((1 - f) * rgb[i][c] + f * rgb[i + 1][c] + 0.5) for c in range(3))
        out.append("#%02x%02x%02x" % channels)
    return out


def build_series(records, weights_by_id=None, weight_mode: str = "unit"):
    """Sort records by (value, id) and align their weights.

    Returns (series, ids) where ids[p] is the record at series position p.
    """
    seen = set()
    for r in records:
        if r.id in seen:
            raise ValueError(f"duplicate record id {r.id!r}")
        seen.add(r.id)
    ordered = sorted(records, key=lambda r: (r.value, r.id))
    if weight_mode == "unit":
        weights = [1.0] * len(ordered)
    elif weight_mode == "projected-area":
        weights_by_id = weights_by_id or {}
        missing = [r.id for r in ordered if r.id not in weights_by_id]
        if missing:
            raise ValueError(
                f"records without geometry/area: {', '.join(missing)}")
        weights = [float(weights_by_id[r.id]) for r in ordered]
    elif weight_mode == "column":
        missing = [r.id for r in ordered if r.weight is None]
        if missing:
            raise ValueError(f"records without weight column: {', '.join(missing)}")
        weights = [float(r.weight) for r in ordered]
    else:
        raise ValueError(f"unknown weight mode {weight_mode!r}")
    for r, w in zip(ordered, weights):
        if w < 0:
            raise ValueError(f"negative weight for record {r.id!r}")
    series = SortedSeries.build([r.value for r in ordered], weights)
    return series, [r.id for r in ordered]


def classify(records, weights_by_id, spec: MethodSpec, palette=None,
             snap: bool = False,
             weight_mode: str = "projected-area") -> ClassificationResult:
    """Full classification pipeline over one dataset."""
    records = list(records)
    if not records:
        raise ValueError("no records to classify")
    series, ids = build_series(records, weights_by_id, weight_mode)
    breaks = compute_breaks(series, spec)
    if snap:
        breaks = snap_ties(series, breaks)
    colors = resolve_palette(palette or DEFAULT_PALETTE, spec.k)

    n = series.n
    edges = breaks.edges(n)
    assignments = {}
    for cls in range(spec.k):
        for p in range(edges[cls], edges[cls + 1]):
            assignments[ids[p]] = cls

    thresholds = tuple(series.values[min(b, n - 1)] for b in breaks.indices)
    total = series.total
    classes = []
    for cls in range(spec.k):
        lo, hi = edges[cls], edges[cls + 1]
        count = hi - lo
        wsum = series.psum(lo, hi)
        classes.append(ClassStats(
            count=count,
            weight_sum=wsum,
            weight_share=(wsum / total if total > 0 else 0.0),
            value_min=series.values[lo] if count else None,
            value_max=series.values[hi - 1] if count else None,
            color=colors[cls],
        ))

    wobj = None
    if spec.kind == "dp-weighted" or spec.w is not None:
        w = 0.5 if spec.w is None else spec.w
        wobj = weighted_objective(series, breaks, w)
    return ClassificationResult(
        method=spec,
        breaks=breaks,
        assignments=assignments,
        thresholds=thresholds,
        classes=tuple(classes),
        error_abs=error_abs(series, breaks),
        weighted_objective=wobj,
    )
