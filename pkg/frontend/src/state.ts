/** Explorer state: current controls, cached geometry, and the latest
 * classification, with latest-wins supersession of in-flight requests.
 *
 * The store never computes breaks itself — every displayed classification
 * came back from the API.
 */
import {
  ClassifyParams,
  ClassifyResponse,
  FetchJson,
  GeometryResponse,
  MetaResponse,
  classifyUrl,
  geometryUrl,
  metaUrl,
} from "./api.js";

export const W_STEP = 0.05;
export const K_MIN = 1;
export const K_MAX = 9;

export type Control = "method" | "k" | "w" | "projection";

export interface Snapshot {
  params: ClassifyParams;
  latest: ClassifyResponse | null;
  geometry: GeometryResponse | null;
  error: string | null;
  pending: boolean;
}

export class ExplorerStore {
  params: ClassifyParams = {
    method: "dp",
    k: 5,
    w: 0.5,
    projection: "winkel3",
  };
  latest: ClassifyResponse | null = null;
  error: string | null = null;
  meta: MetaResponse | null = null;
  /** Responses actually applied (not superseded); exposed for tests. */
  appliedCount = 0;

  private geometryByProjection = new Map<string, GeometryResponse>();
  private requestSeq = 0;
  private listeners: Array<(s: Snapshot) => void> = [];

  constructor(
    private transport: FetchJson,
    private base = "",
  ) {}

  /** The W slider only drives the length-vs-area trade-off method. */
  wEnabled(): boolean {
    return this.params.method === "dp-weighted";
  }

  pending(): boolean {
    return this.requestSeq > this.appliedSeq;
  }

  private appliedSeq = 0;

  subscribe(fn: (s: Snapshot) => void): void {
    this.listeners.push(fn);
  }

  snapshot(): Snapshot {
    return {
      params: { ...this.params },
      latest: this.latest,
      geometry:
        this.geometryByProjection.get(this.params.projection) ?? null,
      error: this.error,
      pending: this.pending(),
    };
  }

  private notify(): void {
    const snap = this.snapshot();
    for (const fn of this.listeners) fn(snap);
  }

  async loadMeta(): Promise<MetaResponse> {
    this.meta = (await this.transport(metaUrl(this.base))) as MetaResponse;
    this.params.k = this.meta.k_default;
    return this.meta;
  }

  /** Geometry is fetched once per projection and re-colored client-side. */
  async ensureGeometry(): Promise<GeometryResponse> {
    const proj = this.params.projection;
    const cached = this.geometryByProjection.get(proj);
    if (cached) return cached;
    const geo = (await this.transport(
      geometryUrl(this.base, proj),
    )) as GeometryResponse;
    this.geometryByProjection.set(proj, geo);
    return geo;
  }

  /**
   * Apply one control change and issue exactly one classify request.
   * Resolves true if this request's response was applied, false if a
   * newer change superseded it (latest-wins) — either way the last good
   * render is retained on failure.
   */
  async setControl(control: Control, value: string | number): Promise<boolean> {
    switch (control) {
      case "method":
        this.params.method = String(value);
        break;
      case "k": {
        const k = Number(value);
        if (!Number.isInteger(k) || k < K_MIN || k > K_MAX) {
          throw new Error(`k must be an integer in [${K_MIN}, ${K_MAX}]`);
        }
        this.params.k = k;
        break;
      }
      case "w": {
        const w = Number(value);
        if (!(w >= 0 && w <= 1)) {
          throw new Error("w must be in [0, 1]");
        }
        this.params.w = w;
        break;
      }
      case "projection":
        this.params.projection = String(value);
        break;
    }
    return this.refresh();
  }

  /** Issue a classify request for the current params (latest-wins). */
  async refresh(): Promise<boolean> {
    const seq = ++this.requestSeq;
    const url = classifyUrl(this.base, this.params);
    try {
      const [resp] = await Promise.all([
        this.transport(url) as Promise<ClassifyResponse>,
        this.ensureGeometry(),
      ]);
      if (seq !== this.requestSeq) return false; // superseded
      this.latest = resp;
      this.error = null;
      this.appliedCount += 1;
      this.appliedSeq = seq;
      this.notify();
      return true;
    } catch (err) {
      if (seq !== this.requestSeq) return false;
      // non-blocking banner; the last good classification stays rendered
      this.error = err instanceof Error ? err.message : String(err);
      this.appliedSeq = seq;
      this.notify();
      return false;
    }
  }
}
