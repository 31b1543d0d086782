#!/usr/bin/env node
/**
 * Render one figure from simulator CSV output.
 *
 *   hnsim-figures --spec figure.json
 *
 * The spec names the kind (heatmap | curves | scaling | crossing), the
 * input CSVs, options, and the output SVG path. Exit codes: 0 rendered,
 * 2 spec/schema error, 1 anything else.
 */

import { readFileSync, writeFileSync, mkdirSync } from "node:fs";
import { dirname, basename } from "node:path";

import { SchemaError, readAveraged, readCeffFit, readFim } from "./csv.js";
import { renderCrossing, renderCurves, renderHeatmap, renderScaling } from "./figures.js";
import { FigureSpec, parseSpec } from "./spec.js";

export function renderSpec(spec: FigureSpec): string {
  switch (spec.kind) {
    case "heatmap": {
      const rows = spec.inputs.flatMap((p) => readAveraged(p));
      const o = spec.options;
      return renderHeatmap(rows, {
        key: (o.key as string) ?? "nj",
        title: o.title as string | undefined,
        xLabel: o.xLabel as string | undefined,
        vmin: o.vmin as number | undefined,
        vmax: o.vmax as number | undefined,
      });
    }
    case "curves": {
      const o = spec.options;
      const labels = (o.labels as string[] | undefined) ?? spec.inputs.map((p) => basename(p));
      if (labels.length !== spec.inputs.length) {
        throw new SchemaError("labels must match inputs one to one");
      }
      const series = spec.inputs.map((p, i) => ({
        label: labels[i],
        rows: readAveraged(p),
        key: (o.key as string) ?? "sent",
        index: o.index as number | undefined,
      }));
      return renderCurves(series, {
        title: o.title as string | undefined,
        yLabel: o.yLabel as string | undefined,
        xLog: o.xLog as boolean | undefined,
      });
    }
    case "scaling": {
      const o = spec.options;
      if (typeof o.fit !== "string") {
        throw new SchemaError("scaling needs options.fit (fit_ceff.csv path)");
      }
      if (typeof o.L !== "number") {
        throw new SchemaError("scaling needs options.L (ring size)");
      }
      const rows = spec.inputs.flatMap((p) => readAveraged(p));
      return renderScaling(rows, readCeffFit(o.fit), o.L, {
        title: o.title as string | undefined,
      });
    }
    case "crossing": {
      const rows = spec.inputs.flatMap((p) => readFim(p));
      return renderCrossing(rows, { title: spec.options.title as string | undefined });
    }
  }
}

export function main(argv: string[]): number {
  const idx = argv.indexOf("--spec");
  if (idx === -1 || idx + 1 >= argv.length) {
    process.stderr.write("usage: hnsim-figures --spec FIGURE.json\n");
    return 2;
  }
  try {
    const spec = parseSpec(JSON.parse(readFileSync(argv[idx + 1], "utf8")));
    const svg = renderSpec(spec);
    mkdirSync(dirname(spec.output), { recursive: true });
    writeFileSync(spec.output, svg);
    process.stdout.write(`${spec.output}\n`);
    return 0;
  } catch (err) {
    if (err instanceof SchemaError || err instanceof SyntaxError) {
      process.stderr.write(`spec/schema error: ${(err as Error).message}\n`);
      return 2;
    }
    process.stderr.write(`error: ${(err as Error).message}\n`);
    return 1;
  }
}

const isDirectRun = process.argv[1] !== undefined
  && import.meta.url.endsWith(basename(process.argv[1]));
if (isDirectRun) {
  process.exit(main(process.argv.slice(2)));
}
