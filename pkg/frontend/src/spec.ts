/** FigureSpec: the JSON contract of the --spec file, strictly validated. */

import { SchemaError } from "./csv.js";

export type FigureKind = "heatmap" | "curves" | "scaling" | "crossing";

export interface FigureSpec {
  kind: FigureKind;
  inputs: string[];
  output: string;
  options: Record<string, unknown>;
}

const KNOWN_TOP = new Set(["kind", "inputs", "output", "options"]);
const KNOWN_OPTIONS: Record<FigureKind, Set<string>> = {
  heatmap: new Set(["key", "title", "xLabel", "vmin", "vmax"]),
  curves: new Set(["key", "index", "labels", "title", "yLabel", "xLog"]),
  scaling: new Set(["L", "fit", "title"]),
  crossing: new Set(["title"]),
};

export function parseSpec(raw: unknown): FigureSpec {
  if (typeof raw !== "object" || raw === null || Array.isArray(raw)) {
    throw new SchemaError("figure spec must be a JSON object");
  }
  const obj = raw as Record<string, unknown>;
  for (const key of Object.keys(obj)) {
    if (!KNOWN_TOP.has(key)) {
      throw new SchemaError(`unknown spec key ${JSON.stringify(key)}`);
    }
  }
  const kind = obj.kind;
  if (kind !== "heatmap" && kind !== "curves" && kind !== "scaling" && kind !== "crossing") {
    throw new SchemaError(`kind must be heatmap|curves|scaling|crossing, got ${String(kind)}`);
  }
  const inputs = obj.inputs;
  if (!Array.isArray(inputs) || inputs.length === 0
      || inputs.some((p) => typeof p !== "string")) {
    throw new SchemaError("inputs must be a nonempty array of paths");
  }
  if (typeof obj.output !== "string" || obj.output.length === 0) {
    throw new SchemaError("output must be a path");
  }
  const options = (obj.options ?? {}) as Record<string, unknown>;
  if (typeof options !== "object" || options === null || Array.isArray(options)) {
    throw new SchemaError("options must be an object");
  }
  for (const key of Object.keys(options)) {
    if (!KNOWN_OPTIONS[kind].has(key)) {
      throw new SchemaError(`unknown option ${JSON.stringify(key)} for kind ${kind}`);
    }
  }
  return { kind, inputs: inputs as string[], output: obj.output, options };
}
