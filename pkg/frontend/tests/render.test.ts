import { describe, expect, it } from "vitest";

import { ClassifyResponse } from "../src/api.js";
import {
  NO_DATA_COLOR,
  fillFor,
  legendRows,
  mapPathsMarkup,
  proportionBarMarkup,
  proportionWidths,
  regionPathD,
} from "../src/render.js";

const square = (x: number): number[][][] => [
  [
    [x, 0],
    [x + 10, 0],
    [x + 10, 10],
    [x, 10],
    [x, 0],
  ],
];

const response: ClassifyResponse = {
  method: "dp",
  k: 3,
  break_indices: [1, 3],
  thresholds: [1, 3],
  error_abs: 0.5,
  classes: [
    { count: 1, weight_sum: 1, weight_share: 0.25, min: 1, max: 1, color: "#ffffb2" },
    { count: 2, weight_sum: 2, weight_share: 0.5, min: 2, max: 3, color: "#fd8d3c" },
    { count: 1, weight_sum: 1, weight_share: 0.25, min: 4, max: 4, color: "#bd0026" },
  ],
  assignments: { A: 0, B: 1, C: 1, D: 2 },
};

describe("map markup", () => {
  it("renders one path per region with class fills", () => {
    const regions = ["D", "B", "A", "C"].map((id, i) => ({
      id,
      rings: square(i * 20),
    }));
    const markup = mapPathsMarkup(regions, response);
    expect(markup.match(/<path /g)?.length).toBe(4);
    // sorted by id
    const order = [...markup.matchAll(/data-id="(\w)"/g)].map((m) => m[1]);
    expect(order).toEqual(["A", "B", "C", "D"]);
    expect(markup).toContain('fill="#ffffb2"');
  });

  it("uses no-data styling for unassigned regions", () => {
    expect(fillFor("ZZZ", response)).toBe(NO_DATA_COLOR);
    expect(fillFor("A", null)).toBe(NO_DATA_COLOR);
  });

  it("emits closed subpaths per ring", () => {
    const d = regionPathD([
      [
        [0, 0],
        [1, 0],
        [1, 1],
        [0, 0],
      ],
    ]);
    expect(d).toBe("M0,0L1,0L1,1L0,0Z");
  });
});

describe("legend", () => {
  it("lists non-empty classes with counts summing to the region total", () => {
    const rows = legendRows(response);
    expect(rows.length).toBe(3);
    expect(rows.reduce((a, r) => a + r.count, 0)).toBe(
      Object.keys(response.assignments).length,
    );
    expect(rows[1].label).toBe("2 – 3 (2)");
  });

  it("skips empty classes", () => {
    const sparse: ClassifyResponse = {
      ...response,
      classes: [
        ...response.classes,
        { count: 0, weight_sum: 0, weight_share: 0, min: null, max: null, color: "#000" },
      ],
    };
    expect(legendRows(sparse).length).toBe(3);
  });
});

describe("proportion bar", () => {
  it("widths sum exactly to the bar width", () => {
    for (const counts of [[1, 2, 1], [3, 3, 3], [1, 1, 1, 1, 1, 1, 1]]) {
      const widths = proportionWidths(counts, 920);
      expect(widths.reduce((a, b) => a + b, 0)).toBe(920);
    }
  });

  it("widths are proportional to counts within 1px", () => {
    const counts = [5, 1, 9, 2];
    const total = counts.reduce((a, b) => a + b, 0);
    const widths = proportionWidths(counts, 940);
    widths.forEach((w, i) => {
      expect(Math.abs(w - (940 * counts[i]) / total)).toBeLessThanOrEqual(1);
    });
  });

  it("renders one segment per non-empty class", () => {
    const markup = proportionBarMarkup(response, 920);
    expect(markup.match(/class="prop-segment"/g)?.length).toBe(3);
  });
});
