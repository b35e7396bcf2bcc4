/** Pure markup builders: map paths, legend rows, and the proportion bar.
 * No DOM access here so everything is unit-testable in node. */
import { ClassifyResponse, GeometryRegion } from "./api.js";

export const NO_DATA_COLOR = "#cccccc";

export function regionPathD(rings: number[][][]): string {
  return rings
    .map(
      (ring) =>
        "M" + ring.map(([x, y]) => `${x},${y}`).join("L") + "Z",
    )
    .join("");
}

export function fillFor(
  id: string,
  result: ClassifyResponse | null,
): string {
  if (!result) return NO_DATA_COLOR;
  const cls = result.assignments[id];
  if (cls === undefined) return NO_DATA_COLOR;
  return result.classes[cls].color;
}

/** One <path> per region, sorted by id for stable output. */
export function mapPathsMarkup(
  regions: GeometryRegion[],
  result: ClassifyResponse | null,
): string {
  return [...regions]
    .sort((a, b) => (a.id < b.id ? -1 : a.id > b.id ? 1 : 0))
    .map(
      (g) =>
        `<path data-id="${g.id}" d="${regionPathD(g.rings)}" ` +
        `fill="${fillFor(g.id, result)}" stroke="#000" stroke-width="0.5"/>`,
    )
    .join("");
}

export interface LegendRow {
  color: string;
  label: string;
  count: number;
}

const fmt = (v: number): string =>
  Number.isInteger(v) ? String(v) : String(Number(v.toPrecision(6)));

/** Non-empty classes only: "min – max (count)". */
export function legendRows(result: ClassifyResponse): LegendRow[] {
  return result.classes
    .filter((c) => c.count > 0)
    .map((c) => ({
      color: c.color,
      label: `${fmt(c.min as number)} – ${fmt(c.max as number)} (${c.count})`,
      count: c.count,
    }));
}

/**
 * Segment widths proportional to class counts, cumulative-rounded so they
 * sum exactly to totalWidth.
 */
export function proportionWidths(
  counts: number[],
  totalWidth: number,
): number[] {
  const total = counts.reduce((a, b) => a + b, 0);
  if (total === 0) return counts.map(() => 0);
  const widths: number[] = [];
  let acc = 0;
  let prev = 0;
  for (const c of counts) {
    acc += c;
    const edge = Math.round((totalWidth * acc) / total);
    widths.push(edge - prev);
    prev = edge;
  }
  return widths;
}

export function proportionBarMarkup(
  result: ClassifyResponse,
  totalWidth: number,
  height = 12,
): string {
  const active = result.classes.filter((c) => c.count > 0);
  const widths = proportionWidths(
    active.map((c) => c.count),
    totalWidth,
  );
  let x = 0;
  const parts: string[] = [];
  for (let i = 0; i < active.length; i++) {
    parts.push(
      `<rect class="prop-segment" x="${x}" y="0" width="${widths[i]}" ` +
        `height="${height}" fill="${active[i].color}"/>`,
    );
    x += widths[i];
  }
  return parts.join("");
}

export function readoutText(result: ClassifyResponse): string {
  let text = `error_abs ${fmt(result.error_abs)}`;
  if (result.weighted_objective !== undefined) {
    text += ` · objective ${fmt(result.weighted_objective)}`;
  }
  return text;
}
