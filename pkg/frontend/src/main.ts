/** DOM bindings: wire the controls to the store and repaint on snapshots. */
import { fetchJson } from "./api.js";
import { ExplorerStore, Snapshot, W_STEP } from "./state.js";
import {
  legendRows,
  mapPathsMarkup,
  proportionBarMarkup,
  readoutText,
} from "./render.js";

const $ = <T extends HTMLElement>(id: string): T =>
  document.getElementById(id) as T;

function repaint(store: ExplorerStore, snap: Snapshot): void {
  const mapEl = $("map");
  if (snap.geometry) {
    mapEl.innerHTML = mapPathsMarkup(snap.geometry.regions, snap.latest);
  }
  const banner = $("error-banner");
  banner.textContent = snap.error ?? "";
  banner.style.display = snap.error ? "block" : "none";

  const wInput = $<HTMLInputElement>("w");
  wInput.disabled = !store.wEnabled();
  $("w-value").textContent = snap.params.w.toFixed(2);

  if (snap.latest) {
    $("legend").innerHTML = legendRows(snap.latest)
      .map(
        (row) =>
          `<div class="legend-row"><span class="legend-swatch" ` +
          `style="background:${row.color}"></span>${row.label}</div>`,
      )
      .join("");
    $("prop-bar").innerHTML = proportionBarMarkup(snap.latest, 920);
    $("readout").textContent = readoutText(snap.latest);
  }
}

function attachHover(store: ExplorerStore): void {
  const tip = $("tooltip");
  $("map").addEventListener("mousemove", (ev) => {
    const target = ev.target as SVGElement;
    const id = target.getAttribute?.("data-id");
    if (!id || !store.latest) {
      tip.style.display = "none";
      return;
    }
    const cls = store.latest.assignments[id];
    const info =
      cls === undefined
        ? "no data"
        : `class ${cls + 1}: ${store.latest.classes[cls].min} – ` +
          `${store.latest.classes[cls].max}`;
    tip.textContent = `${id} — ${info}`;
    tip.style.left = `${ev.pageX + 12}px`;
    tip.style.top = `${ev.pageY + 12}px`;
    tip.style.display = "block";
  });
}

async function boot(): Promise<void> {
  const store = new ExplorerStore(fetchJson);
  store.subscribe((snap) => repaint(store, snap));

  const meta = await store.loadMeta();
  const methodSel = $<HTMLSelectElement>("method");
  methodSel.innerHTML = meta.methods
    .map((m) => `<option value="${m}"${m === "dp" ? " selected" : ""}>${m}</option>`)
    .join("");
  const projSel = $<HTMLSelectElement>("projection");
  projSel.innerHTML = meta.projections
    .map((p) => `<option value="${p}">${p}</option>`)
    .join("");
  const kInput = $<HTMLInputElement>("k");
  kInput.value = String(meta.k_default);
  const wInput = $<HTMLInputElement>("w");
  wInput.step = String(W_STEP);
  wInput.value = "0.5";

  methodSel.addEventListener("change", () =>
    store.setControl("method", methodSel.value),
  );
  kInput.addEventListener("change", () =>
    store.setControl("k", kInput.value),
  );
  wInput.addEventListener("input", () =>
    store.setControl("w", wInput.value),
  );
  projSel.addEventListener("change", () =>
    store.setControl("projection", projSel.value),
  );

  attachHover(store);
  await store.refresh();
}

boot().catch((err) => {
  const banner = document.getElementById("error-banner");
  if (banner) {
    banner.textContent = String(err);
    (banner as HTMLElement).style.display = "block";
  }
});
