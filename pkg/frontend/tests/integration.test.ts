/** End-to-end slider loop against the real server: spawns `eqbreaks serve`
 * on the 8-uniform-region dataset and drives the store through the same
 * path the W slider's input handler uses. */
import { ChildProcess, spawn } from "node:child_process";
import { fileURLToPath } from "node:url";
import path from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { fetchJson } from "../src/api.js";
import { ExplorerStore, W_STEP } from "../src/state.js";
import { legendRows } from "../src/render.js";

const PORT = 18637;
const BASE = `http://127.0.0.1:${PORT}`;
const DATA = path.resolve(
  path.dirname(fileURLToPath(import.meta.url)),
  "../../tests/data",
);

let server: ChildProcess;

async function waitForServer(timeoutMs = 30000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const resp = await fetch(`${BASE}/api/meta`);
      if (resp.ok) return;
    } catch {
      /* not up yet */
    }
    await new Promise((r) => setTimeout(r, 200));
  }
  throw new Error("server did not become ready");
}

beforeAll(async () => {
  server = spawn(
    "eqbreaks",
    [
      "serve",
      "--input", path.join(DATA, "uniform8.csv"),
      "--geo", path.join(DATA, "uniform8.geojson"),
      "--port", String(PORT),
      "--classes", "4",
    ],
    { stdio: "ignore" },
  );
  await waitForServer();
}, 40000);

afterAll(() => {
  server?.kill();
});

describe("scripted W drag against the live server", () => {
  it("dragging W from 0 to 1 ends with equal class counts, latest-wins",
    async () => {
      const store = new ExplorerStore(fetchJson, BASE);
      const meta = await store.loadMeta();
      expect(meta.regions).toBe(8);

      await store.setControl("method", "dp-weighted");
      await store.setControl("k", 4);
      expect(store.wEnabled()).toBe(true);

      await store.setControl("w", 0);
      const appliedBefore = store.appliedCount;

      // rapid scrub: fire every step without waiting, like a fast drag
      const steps: Promise<boolean>[] = [];
      for (let i = 1; i <= Math.round(1 / W_STEP); i++) {
        steps.push(store.setControl("w", i * W_STEP));
      }
      const applied = await Promise.all(steps);

      // exactly one response applied — the final w=1 request
      expect(store.appliedCount - appliedBefore).toBe(1);
      expect(applied.filter(Boolean).length).toBe(1);
      expect(applied[applied.length - 1]).toBe(true);
      expect(store.latest?.w).toBe(1);
      expect(store.error).toBeNull();

      // W=1 on 8 uniform regions with K=4: perfectly equal classes
      const counts = store.latest!.classes.map((c) => c.count);
      expect(counts).toEqual([2, 2, 2, 2]);

      const rows = legendRows(store.latest!);
      expect(rows.reduce((a, r) => a + r.count, 0)).toBe(meta.regions);
    }, 30000);

  it("every region is assigned and colored from the server palette",
    async () => {
      const store = new ExplorerStore(fetchJson, BASE);
      await store.loadMeta();
      await store.setControl("k", 4);
      const geo = await store.ensureGeometry();
      expect(geo.regions.length).toBe(8);
      for (const g of geo.regions) {
        expect(store.latest!.assignments[g.id]).toBeTypeOf("number");
      }
    }, 30000);

  it("surfaces server 400s as a banner and keeps the last good state",
    async () => {
      const store = new ExplorerStore(fetchJson, BASE);
      await store.loadMeta();
      await store.setControl("method", "dp");
      const good = store.latest;
      expect(good).not.toBeNull();

      // bypass client validation to hit the server's own guard
      store.params.k = 99;
      expect(await store.refresh()).toBe(false);
      expect(store.error).toMatch(/k must be/);
      expect(store.latest).toBe(good);
    }, 30000);
});
