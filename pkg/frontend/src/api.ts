/** Typed wrappers for the classification server's JSON routes. */

export interface ValueStats {
  min: number;
  max: number;
}

export interface MetaResponse {
  regions: number;
  methods: string[];
  k_default: number;
  projections: string[];
  value_stats: ValueStats;
}

export interface GeometryRegion {
  id: string;
  /** Pixel-space rings, each a closed list of [x, y] pairs. */
  rings: number[][][];
}

export interface GeometryResponse {
  projection: string;
  regions: GeometryRegion[];
}

export interface ClassInfo {
  count: number;
  weight_sum: number;
  weight_share: number;
  min: number | null;
  max: number | null;
  color: string;
}

export interface ClassifyResponse {
  method: string;
  k: number;
  w?: number;
  break_indices: number[];
  thresholds: number[];
  error_abs: number;
  weighted_objective?: number;
  classes: ClassInfo[];
  assignments: Record<string, number>;
}

export interface ClassifyParams {
  method: string;
  k: number;
  w: number;
  projection: string;
}

/** Fetch-shaped dependency so tests can inject a fake transport. */
export type FetchJson = (url: string) => Promise<unknown>;

export function classifyUrl(base: string, p: ClassifyParams): string {
  const q = new URLSearchParams({
    method: p.method,
    k: String(p.k),
    projection: p.projection,
  });
  if (p.method === "dp-weighted") q.set("w", String(p.w));
  return `${base}/api/classify?${q.toString()}`;
}

export function geometryUrl(base: string, projection: string): string {
  return `${base}/api/geometry?projection=${encodeURIComponent(projection)}`;
}

export function metaUrl(base: string): string {
  return `${base}/api/meta`;
}

/** Default transport: plain fetch, throwing on non-2xx with the server's
 * error message when one is present. */
export async function fetchJson(url: string): Promise<unknown> {
  const resp = await fetch(url);
  const body = (await resp.json()) as { error?: string };
  if (!resp.ok) {
    throw new Error(body.error ?? `request failed (${resp.status})`);
  }
  return body;
}
