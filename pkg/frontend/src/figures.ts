/**
 * Figure builders: each consumes already-parsed CSV rows and returns a
 * complete SVG document string. No physics is recomputed here; fitted
 * parameters are read from the fit CSVs.
 */

import {
  AveragedRow, CeffFit, FimRow, SchemaError, pivot,
} from "./csv.js";
import {
  STYLE, axes, colormap, document as svgDocument, el, esc, fmt, linearScale, logScale,
  polyline, Scale,
} from "./svg.js";

const M = STYLE.margin;

function plotBox() {
  return { x0: M.left, x1: STYLE.width - M.right, y0: STYLE.height - M.bottom, y1: M.top };
}

/** Space-time heatmap of a per-index observable (site density, mode occupation, |C|). */
export function renderHeatmap(rows: AveragedRow[], opts: {
  key: string; title?: string; xLabel?: string; vmin?: number; vmax?: number;
}): string {
  const { times, indices, values } = pivot(rows, opts.key);
  const box = plotBox();
  const vmin = opts.vmin ?? 0;
  const vmax = opts.vmax ?? Math.max(...values.flat());
  const x = linearScale(indices[0] - 0.5, indices[indices.length - 1] + 0.5, box.x0, box.x1);
  const y = logScale(times[0], times[times.length - 1], box.y0, box.y1);
  const cells: string[] = [];
  for (let i = 0; i < times.length; i += 1) {
    const yLo = i === 0 ? box.y0 : (y(times[i - 1]) + y(times[i])) / 2;
    const yHi = i === times.length - 1 ? box.y1 : (y(times[i]) + y(times[i + 1])) / 2;
    for (let j = 0; j < indices.length; j += 1) {
      const v = (values[i][j] - vmin) / (vmax - vmin || 1);
      cells.push(el("rect", {
        x: x(indices[j] - 0.5), y: yHi,
        width: x(indices[j] + 0.5) - x(indices[j] - 0.5), height: yLo - yHi,
        fill: colormap(v),
      }));
    }
  }
  const bar = colorbar(vmin, vmax, box);
  const title = el("text", { x: (box.x0 + box.x1) / 2, y: 20, "text-anchor": "middle" },
    esc(opts.title ?? `${opts.key}(t)`));
  const frame = axes(x, y, opts.xLabel ?? "index", "time", box);
  return svgDocument([cells.join("\n"), frame, bar, title].join("\n"));
}

function colorbar(vmin: number, vmax: number, box: { y0: number; y1: number }): string {
  const x0 = STYLE.width - M.right + 24;
  const steps = 40;
  const parts: string[] = [];
  for (let i = 0; i < steps; i += 1) {
    const f0 = i / steps;
    const y = box.y0 + (box.y1 - box.y0) * f0;
    const y1 = box.y0 + (box.y1 - box.y0) * ((i + 1) / steps);
    parts.push(el("rect", {
      x: x0, y: y1, width: 14, height: y - y1, fill: colormap((f0 + 0.5 / steps)),
    }));
  }
  parts.push(el("text", { x: x0 + 18, y: box.y0 + 4 }, esc(fmt(vmin))));
  parts.push(el("text", { x: x0 + 18, y: box.y1 + 4 }, esc(fmt(vmax))));
  return parts.join("\n");
}

export interface CurveSeries {
  label: string;
  rows: AveragedRow[];
  key: string;
  index?: number;
}

/** Observable-vs-time curves (log time axis) with stderr bands and a legend. */
export function renderCurves(series: CurveSeries[], opts: {
  title?: string; yLabel?: string; xLog?: boolean;
}): string {
  if (series.length === 0) {
    throw new SchemaError("no curve series given");
  }
  const box = plotBox();
  const data = series.map((s) => {
    const sel = s.rows.filter((r) => r.key === s.key
      && (s.index === undefined || r.index === s.index))
      .sort((a, b) => a.t - b.t);
    if (sel.length === 0) {
      throw new SchemaError(`series ${s.label}: no rows for key ${s.key}`
        + (s.index === undefined ? "" : ` index ${s.index}`));
    }
    return sel;
  });
  const allT = data.flat().map((r) => r.t);
  const allV = data.flat().map((r) => r.mean);
  const allE = data.flat().map((r) => r.stderr);
  const x = (opts.xLog ?? true)
    ? logScale(Math.min(...allT), Math.max(...allT), box.x0, box.x1)
    : linearScale(Math.min(...allT), Math.max(...allT), box.x0, box.x1);
  const vLo = Math.min(...allV.map((v, i) => v - allE[i]));
  const vHi = Math.max(...allV.map((v, i) => v + allE[i]));
  const pad = 0.05 * (vHi - vLo || 1);
  const y = linearScale(vLo - pad, vHi + pad, box.y0, box.y1);
  const parts: string[] = [];
  data.forEach((sel, si) => {
    const color = STYLE.seriesColors[si % STYLE.seriesColors.length];
    const band = sel.map((r) => [x(r.t), y(r.mean - r.stderr)] as [number, number])
      .concat(sel.slice().reverse().map((r) => [x(r.t), y(r.mean + r.stderr)] as [number, number]));
    if (sel.some((r) => r.stderr > 0)) {
      parts.push(el("polygon", {
        points: band.map(([px, py]) => `${fmt(px)},${fmt(py)}`).join(" "),
        fill: color, "fill-opacity": 0.15, stroke: "none",
      }));
    }
    parts.push(polyline(sel.map((r) => [x(r.t), y(r.mean)]), color));
    parts.push(el("text", {
      x: box.x1 + 8, y: box.y1 + 14 + 16 * si, fill: color,
    }, esc(series[si].label)));
  });
  const frame = axes(x, y, "time", opts.yLabel ?? series[0].key, box);
  const title = el("text", { x: (box.x0 + box.x1) / 2, y: 20, "text-anchor": "middle" },
    esc(opts.title ?? ""));
  return svgDocument([parts.join("\n"), frame, title].join("\n"));
}

/** Entanglement scaling: S_inf(l) points plus the fitted chord-log curve. */
export function renderScaling(rows: AveragedRow[], fit: CeffFit, L: number, opts: {
  title?: string;
} = {}): string {
  const sel = rows.filter((r) => r.key === "sinf").sort((a, b) => a.index - b.index);
  if (sel.length === 0) {
    throw new SchemaError("no 'sinf' rows for the scaling figure");
  }
  if (!(L >= 2)) {
    throw new SchemaError("scaling figure needs the ring size L");
  }
  const box = plotBox();
  const x = linearScale(0, 1, box.x0, box.x1);
  const vLo = Math.min(...sel.map((r) => r.mean - r.stderr));
  const vHi = Math.max(...sel.map((r) => r.mean + r.stderr));
  const pad = 0.1 * (vHi - vLo || 1);
  const y = linearScale(vLo - pad, vHi + pad, box.y0, box.y1);
  const parts: string[] = [];
  // fitted curve (c_eff/3) ln(2 L sin(pi l / L)) + const, sampled densely
  const curve: [number, number][] = [];
  for (let i = 1; i <= 200; i += 1) {
    const ell = (i / 201) * L;
    const S = (fit.c_eff / 3) * Math.log(2 * L * Math.sin((Math.PI * ell) / L)) + fit.const;
    if (S >= vLo - pad && S <= vHi + pad) curve.push([x(ell / L), y(S)]);
  }
  parts.push(polyline(curve, STYLE.seriesColors[1], 1.2));
  for (const r of sel) {
    const px = x(r.index / L);
    if (r.stderr > 0) {
      parts.push(el("line", {
        x1: px, y1: y(r.mean - r.stderr), x2: px, y2: y(r.mean + r.stderr),
        stroke: STYLE.seriesColors[0], "stroke-width": 1,
      }));
    }
    parts.push(el("circle", { cx: px, cy: y(r.mean), r: 3, fill: STYLE.seriesColors[0] }));
  }
  parts.push(el("text", {
    x: box.x1 + 8, y: box.y1 + 14, fill: STYLE.seriesColors[1],
  }, esc(`c_eff = ${fit.c_eff.toFixed(3)}`)));
  const frame = axes(x, y, "l / L", "S_inf (nats)", box);
  const title = el("text", { x: (box.x0 + box.x1) / 2, y: 20, "text-anchor": "middle" },
    esc(opts.title ?? "asymptotic entanglement scaling"));
  return svgDocument([parts.join("\n"), frame, title].join("\n"));
}

/** f_Im(W) for several ring sizes: the curves cross near the transition. */
export function renderCrossing(rows: FimRow[], opts: { title?: string } = {}): string {
  if (rows.length === 0) {
    throw new SchemaError("empty spectral sweep");
  }
  const box = plotBox();
  const sizes = [...new Set(rows.map((r) => r.L))].sort((a, b) => a - b);
  const x = linearScale(Math.min(...rows.map((r) => r.W)),
    Math.max(...rows.map((r) => r.W)), box.x0, box.x1);
  const y = linearScale(0, 1, box.y0, box.y1);
  const parts: string[] = [];
  sizes.forEach((L, si) => {
    const color = STYLE.seriesColors[si % STYLE.seriesColors.length];
    const sel = rows.filter((r) => r.L === L).sort((a, b) => a.W - b.W);
    parts.push(polyline(sel.map((r) => [x(r.W), y(r.f_im_mean)]), color));
    for (const r of sel) {
      if (r.f_im_err > 0) {
        parts.push(el("line", {
          x1: x(r.W), y1: y(Math.max(0, r.f_im_mean - r.f_im_err)),
          x2: x(r.W), y2: y(Math.min(1, r.f_im_mean + r.f_im_err)),
          stroke: color, "stroke-width": 1,
        }));
      }
      parts.push(el("circle", { cx: x(r.W), cy: y(r.f_im_mean), r: 2.5, fill: color }));
    }
    parts.push(el("text", { x: box.x1 + 8, y: box.y1 + 14 + 16 * si, fill: color },
      esc(`L = ${L}`)));
  });
  const frame = axes(x, y, "W", "f_Im", box);
  const title = el("text", { x: (box.x0 + box.x1) / 2, y: 20, "text-anchor": "middle" },
    esc(opts.title ?? "real-complex spectral transition"));
  return svgDocument([parts.join("\n"), frame, title].join("\n"));
}
