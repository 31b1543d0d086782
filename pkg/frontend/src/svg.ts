/** Minimal deterministic SVG assembly: fixed style sheet, no randomness. */

export const STYLE = {
  width: 640,
  height: 420,
  margin: { top: 36, right: 120, bottom: 46, left: 60 },
  font: "12px sans-serif",
  axisColor: "#333333",
  seriesColors: ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"],
};

export function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function el(tag: string, attrs: Record<string, string | number>, body = ""): string {
  const a = Object.entries(attrs)
    .map(([k, v]) => `${k}="${typeof v === "number" ? fmt(v) : esc(v)}"`)
    .join(" ");
  return body === "" ? `<${tag} ${a}/>` : `<${tag} ${a}>${body}</${tag}>`;
}

export function fmt(x: number): string {
  if (!Number.isFinite(x)) return "0";
  const s = x.toFixed(3);
  return s.replace(/\.?0+$/, "") || "0";
}

export function document(body: string, width = STYLE.width, height = STYLE.height): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}" font-family="sans-serif" font-size="12">\n` +
    `<rect x="0" y="0" width="${width}" height="${height}" fill="#ffffff"/>\n` +
    body +
    `\n</svg>\n`
  );
}

export interface Scale {
  (x: number): number;
  ticks: number[];
  label: (x: number) => string;
}

export function linearScale(lo: number, hi: number, outLo: number, outHi: number): Scale {
  const span = hi - lo || 1;
  const f = ((x: number) => outLo + ((x - lo) / span) * (outHi - outLo)) as Scale;
  const step = niceStep(span / 5);
  const ticks: number[] = [];
  for (let t = Math.ceil(lo / step) * step; t <= hi + 1e-12; t += step) ticks.push(t);
  f.ticks = ticks;
  f.label = (x) => fmt(x);
  return f;
}

export function logScale(lo: number, hi: number, outLo: number, outHi: number): Scale {
  const llo = Math.log10(Math.max(lo, 1e-300));
  const lhi = Math.log10(Math.max(hi, lo * 10));
  const span = lhi - llo || 1;
  const f = ((x: number) =>
    outLo + ((Math.log10(Math.max(x, 1e-300)) - llo) / span) * (outHi - outLo)) as Scale;
  const ticks: number[] = [];
  for (let d = Math.ceil(llo); d <= Math.floor(lhi); d += 1) ticks.push(10 ** d);
  f.ticks = ticks.length >= 2 ? ticks : [lo, hi];
  f.label = (x) => {
    const d = Math.log10(x);
    return Number.isInteger(d) ? `1e${d}` : fmt(x);
  };
  return f;
}

function niceStep(raw: number): number {
  const mag = 10 ** Math.floor(Math.log10(Math.abs(raw) || 1));
  const r = raw / mag;
  const n = r < 1.5 ? 1 : r < 3.5 ? 2 : r < 7.5 ? 5 : 10;
  return n * mag;
}

/** Dark-blue -> yellow colormap on [0, 1] (fixed, print-friendly). */
export function colormap(v: number): string {
  const x = Math.min(1, Math.max(0, v));
  const stops: [number, number, number][] = [
    [13, 8, 135], [84, 2, 163], [156, 23, 158], [205, 62, 113],
    [237, 121, 83], [253, 180, 47], [240, 249, 33],
  ];
  const pos = x * (stops.length - 1);
  const i = Math.min(stops.length - 2, Math.floor(pos));
  const frac = pos - i;
  const mix = (a: number, b: number) => Math.round(a + (b - a) * frac);
  const [r, g, b] = [0, 1, 2].map((c) => mix(stops[i][c], stops[i + 1][c]));
  return `rgb(${r},${g},${b})`;
}

export function axes(x: Scale, y: Scale, xLabel: string, yLabel: string,
                     box: { x0: number; x1: number; y0: number; y1: number }): string {
  const parts: string[] = [];
  parts.push(el("line", { x1: box.x0, y1: box.y0, x2: box.x1, y2: box.y0,
    stroke: STYLE.axisColor, "stroke-width": 1 }));
  parts.push(el("line", { x1: box.x0, y1: box.y0, x2: box.x0, y2: box.y1,
    stroke: STYLE.axisColor, "stroke-width": 1 }));
  for (const t of x.ticks) {
    const px = x(t);
    if (px < box.x0 - 0.5 || px > box.x1 + 0.5) continue;
    parts.push(el("line", { x1: px, y1: box.y0, x2: px, y2: box.y0 + 4,
      stroke: STYLE.axisColor, "stroke-width": 1 }));
    parts.push(el("text", { x: px, y: box.y0 + 17, "text-anchor": "middle",
      fill: STYLE.axisColor }, esc(x.label(t))));
  }
  for (const t of y.ticks) {
    const py = y(t);
    if (py > box.y0 + 0.5 || py < box.y1 - 0.5) continue;
    parts.push(el("line", { x1: box.x0 - 4, y1: py, x2: box.x0, y2: py,
      stroke: STYLE.axisColor, "stroke-width": 1 }));
    parts.push(el("text", { x: box.x0 - 7, y: py + 4, "text-anchor": "end",
      fill: STYLE.axisColor }, esc(y.label(t))));
  }
  parts.push(el("text", { x: (box.x0 + box.x1) / 2, y: box.y0 + 36,
    "text-anchor": "middle", fill: STYLE.axisColor }, esc(xLabel)));
  parts.push(el("text", { x: box.x0 - 44, y: (box.y0 + box.y1) / 2, fill: STYLE.axisColor,
    transform: `rotate(-90 ${fmt(box.x0 - 44)} ${fmt((box.y0 + box.y1) / 2)})`,
    "text-anchor": "middle" }, esc(yLabel)));
  return parts.join("\n");
}

export function polyline(points: [number, number][], color: string, width = 1.5): string {
  const d = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
  return el("polyline", { points: d, fill: "none", stroke: color, "stroke-width": width });
}
