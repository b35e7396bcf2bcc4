"""Deterministic SVG output: colored region paths, legend swatches with
value ranges, and a proportion bar showing each class's share of regions."""
from __future__ import annotations

from .classify import NO_DATA_COLOR, ClassificationResult
from .geo import RegionGeometry, Viewport, ring_to_pixels

LEGEND_ROW_H = 18
LEGEND_PAD = 10
BAR_H = 14


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _fmt_value(v: float) -> str:
    return f"{v:.6g}"


def _path_d(geom: RegionGeometry, kind: str, viewport: Viewport) -> str:
    cmds = []
    for part in geom.parts:
        for ring in part:
            pts = ring_to_pixels(ring, kind, viewport)
            cmds.append("M" + "L".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts) + "Z")
    return "".join(cmds)


def proportion_segments(counts, bar_width: int):
    """Pixel widths for the proportion bar, cumulative rounding so the
    segments tile the bar exactly."""
    total = sum(counts)
    if total == 0:
        return [0] * len(counts)
    xs = [round(bar_width * c / total) for c in
          _cumsum(counts)]
    widths = []
    prev = 0
    for x in xs:
        widths.append(x - prev)
        prev = x
    return widths


def _cumsum(counts):
    s = 0
    out = []
    for c in counts:
        s += c
        out.append(s)
    return out


def render_svg(geoms, result: ClassificationResult, kind: str,
               viewport: Viewport) -> str:
    """One <path> per region; legend swatches for non-empty classes;
    proportion bar at the bottom.  Byte-identical for identical inputs."""
    lines = []
    visible = [(i, c) for i, c in enumerate(result.classes) if c.count > 0]
    legend_h = LEGEND_PAD + len(visible) * LEGEND_ROW_H + LEGEND_PAD + BAR_H + LEGEND_PAD
    width = int(viewport.width)
    height = int(viewport.height)
    total_h = height + legend_h
    lines.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{total_h}" viewBox="0 0 {width} {total_h}">')
    lines.append('<g class="regions">')
    for g in sorted(geoms, key=lambda g: g.id):
        cls = result.assignments.get(g.id)
        color = result.classes[cls].color if cls is not None else NO_DATA_COLOR
        lines.append(
            f'<path d="{_path_d(g, kind, viewport)}" fill="{color}" '
            f'stroke="#000" stroke-width="0.5"/>')
    lines.append("</g>")

    lines.append('<g class="legend">')
    y = height + LEGEND_PAD
    for i, c in visible:
        label = f"{_fmt_value(c.value_min)} – {_fmt_value(c.value_max)} ({c.count})"
        lines.append(
            f'<rect class="legend-swatch" x="{LEGEND_PAD}" y="{y}" '
            f'width="14" height="14" fill="{c.color}" stroke="#000" '
            f'stroke-width="0.5"/>')
        lines.append(
            f'<text x="{LEGEND_PAD + 20}" y="{y + 11}" font-size="11" '
            f'font-family="sans-serif">{label}</text>')
        y += LEGEND_ROW_H
    lines.append("</g>")

    bar_w = width - 2 * LEGEND_PAD
    widths = proportion_segments([c.count for _, c in visible], bar_w)
    x = LEGEND_PAD
    y += LEGEND_PAD
    lines.append('<g class="proportion-bar">')
    for (i, c), w in zip(visible, widths):
        lines.append(
            f'<rect class="prop-segment" x="{x}" y="{y}" width="{w}" '
            f'height="{BAR_H}" fill="{c.color}" stroke="#000" '
            f'stroke-width="0.5"/>')
        x += w
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
