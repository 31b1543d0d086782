import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { SchemaError, pivot, readAveraged, readCeffFit, readFim } from "../src/csv.js";
import { renderCrossing, renderCurves, renderHeatmap, renderScaling } from "../src/figures.js";
import { main, renderSpec } from "../src/cli.js";
import { parseSpec } from "../src/spec.js";

const DATA = join(__dirname, "..", "testdata");

function tmp(): string {
  return mkdtempSync(join(tmpdir(), "hnsim-fig-"));
}

describe("csv readers", () => {
  it("reads the averaged schema and pivots a grid", () => {
    const rows = readAveraged(join(DATA, "nj.csv"));
    const grid = pivot(rows, "nj");
    expect(grid.indices).toEqual([0, 1, 2, 3, 4, 5, 6, 7]);
    expect(grid.times.length).toBeGreaterThan(8);
    expect(grid.values[0].length).toBe(8);
  });

  it("rejects a wrong header", () => {
    const dir = tmp();
    const bad = join(dir, "bad.csv");
    writeFileSync(bad, "a,b,c\n1,2,3\n");
    expect(() => readAveraged(bad)).toThrow(SchemaError);
    expect(() => readFim(bad)).toThrow(SchemaError);
  });

  it("rejects non-numeric cells", () => {
    const dir = tmp();
    const bad = join(dir, "bad.csv");
    writeFileSync(bad, "t,key,index,mean,stderr,n\noops,nj,0,1,0,1\n");
    expect(() => readAveraged(bad)).toThrow(SchemaError);
  });

  it("reads the fit summary", () => {
    const fit = readCeffFit(join(DATA, "fit_ceff.csv"));
    expect(fit.c_eff).toBeGreaterThan(0.8);
    expect(fit.c_eff).toBeLessThan(1.3);
    expect(fit.n_points).toBe(7);
  });
});

describe("figure builders", () => {
  it("renders a density space-time heatmap", () => {
    const svg = renderHeatmap(readAveraged(join(DATA, "nj.csv")), {
      key: "nj", title: "site density", xLabel: "site j", vmin: 0, vmax: 1,
    });
    expect(svg.startsWith("<svg")).toBe(true);
    expect(svg).toContain("rect");
    expect((svg.match(/<rect/g) ?? []).length).toBeGreaterThan(100);
  });

  it("renders a momentum heatmap from the same schema", () => {
    const svg = renderHeatmap(readAveraged(join(DATA, "nk.csv")), { key: "nk" });
    expect(svg).toContain("</svg>");
  });

  it("renders entanglement curves with error bands and legend", () => {
    const rows = readAveraged(join(DATA, "sent.csv"));
    const svg = renderCurves(
      [{ label: "L = 8, l = 4", rows, key: "sent", index: 4 }],
      { title: "entanglement growth", yLabel: "S (nats)" },
    );
    expect(svg).toContain("polyline");
    expect(svg).toContain("L = 8, l = 4");
  });

  it("renders the scaling figure with the fitted curve", () => {
    const svg = renderScaling(readAveraged(join(DATA, "sinf.csv")),
      readCeffFit(join(DATA, "fit_ceff.csv")), 10);
    expect(svg).toContain("circle");
    expect(svg).toContain("c_eff");
  });

  it("renders the spectral crossing figure", () => {
    const svg = renderCrossing(readFim(join(DATA, "fim.csv")));
    expect(svg).toContain("L = 6");
    expect(svg).toContain("L = 8");
  });

  it("fails loudly when the requested key is absent", () => {
    const rows = readAveraged(join(DATA, "sent.csv"));
    expect(() => renderHeatmap(rows, { key: "nj" })).toThrow(SchemaError);
    expect(() => renderCurves([{ label: "x", rows, key: "nope" }], {})).toThrow(SchemaError);
  });

  it("is deterministic", () => {
    const rows = readAveraged(join(DATA, "nj.csv"));
    const a = renderHeatmap(rows, { key: "nj" });
    const b = renderHeatmap(rows, { key: "nj" });
    expect(a).toBe(b);
  });
});

describe("spec validation and cli", () => {
  it("rejects unknown keys and kinds", () => {
    expect(() => parseSpec({ kind: "heatmap", inputs: ["x"], output: "y", bogus: 1 }))
      .toThrow(SchemaError);
    expect(() => parseSpec({ kind: "pie", inputs: ["x"], output: "y" }))
      .toThrow(SchemaError);
    expect(() => parseSpec({ kind: "curves", inputs: [], output: "y" }))
      .toThrow(SchemaError);
    expect(() => parseSpec({
      kind: "heatmap", inputs: ["x"], output: "y", options: { wat: 1 },
    })).toThrow(SchemaError);
  });

  it("renders every figure kind through the spec interface", () => {
    const dir = tmp();
    const specs = [
      {
        kind: "heatmap", inputs: [join(DATA, "nj.csv")], output: join(dir, "fig2.svg"),
        options: { key: "nj", vmin: 0, vmax: 1, title: "density heatmap" },
      },
      {
        kind: "curves", inputs: [join(DATA, "sent.csv")], output: join(dir, "fig4.svg"),
        options: { key: "sent", index: 4, labels: ["L = 8"] },
      },
      {
        kind: "scaling", inputs: [join(DATA, "sinf.csv")], output: join(dir, "fig7.svg"),
        options: { L: 10, fit: join(DATA, "fit_ceff.csv") },
      },
      {
        kind: "crossing", inputs: [join(DATA, "fim.csv")], output: join(dir, "fig8.svg"),
      },
    ];
    for (const raw of specs) {
      const svg = renderSpec(parseSpec(raw));
      expect(svg.startsWith("<svg")).toBe(true);
    }
  });

  it("cli writes the SVG and returns 0; schema violations return 2", () => {
    const dir = tmp();
    const specPath = join(dir, "spec.json");
    const out = join(dir, "out.svg");
    writeFileSync(specPath, JSON.stringify({
      kind: "heatmap", inputs: [join(DATA, "nk.csv")], output: out,
      options: { key: "nk", vmin: 0, vmax: 1 },
    }));
    expect(main(["--spec", specPath])).toBe(0);
    expect(readFileSync(out, "utf8")).toContain("</svg>");

    const badPath = join(dir, "bad.json");
    writeFileSync(badPath, JSON.stringify({
      kind: "heatmap", inputs: [join(DATA, "sent.csv")], output: out,
      options: { key: "nj" },
    }));
    expect(main(["--spec", badPath])).toBe(2);
    expect(main([])).toBe(2);
  });
});
