/**
 * Readers for the simulator's CSV schemas.
 *
 * Long format:      sample,t,key,index,value
 * Averaged format:  t,key,index,mean,stderr,n
 * Spectral sweep:   W,L,f_im_mean,f_im_err,E_top_mean,E_tilde_mean
 * Fit summary:      c_eff,const,residual_rms,n_points
 *
 * Schema violations (wrong header, short rows, non-numeric cells) throw
 * SchemaError; the figure scripts never guess at malformed input.
 */

import { readFileSync } from "node:fs";

export class SchemaError extends Error {}

export interface AveragedRow {
  t: number;
  key: string;
  index: number;
  mean: number;
  stderr: number;
  n: number;
}

export interface LongRow {
  sample: number;
  t: number;
  key: string;
  index: number;
  value: number;
}

export interface FimRow {
  W: number;
  L: number;
  f_im_mean: number;
  f_im_err: number;
  E_top_mean: number;
  E_tilde_mean: number;
}

export interface CeffFit {
  c_eff: number;
  const: number;
  residual_rms: number;
  n_points: number;
}

function splitCsv(text: string): string[][] {
  return text
    .split(/\r?\n/)
    .filter((line) => line.length > 0)
    .map((line) => line.split(","));
}

function num(cell: string, where: string): number {
  const x = Number(cell);
  if (!Number.isFinite(x)) {
    throw new SchemaError(`${where}: non-numeric cell ${JSON.stringify(cell)}`);
  }
  return x;
}

function requireHeader(rows: string[][], expected: string[], path: string): string[][] {
  if (rows.length === 0) {
    throw new SchemaError(`${path}: empty file`);
  }
  const header = rows[0];
  if (header.length !== expected.length || expected.some((h, i) => header[i] !== h)) {
    throw new SchemaError(
      `${path}: expected header ${expected.join(",")}, got ${header.join(",")}`,
    );
  }
  if (rows.length === 1) {
    throw new SchemaError(`${path}: no data rows`);
  }
  return rows.slice(1);
}

export function readAveraged(path: string): AveragedRow[] {
  const rows = requireHeader(splitCsv(readFileSync(path, "utf8")),
    ["t", "key", "index", "mean", "stderr", "n"], path);
  return rows.map((r, i) => ({
    t: num(r[0], `${path}:${i + 2}`),
    key: r[1],
    index: num(r[2], `${path}:${i + 2}`),
    mean: num(r[3], `${path}:${i + 2}`),
    stderr: num(r[4], `${path}:${i + 2}`),
    n: num(r[5], `${path}:${i + 2}`),
  }));
}

export function readLong(path: string): LongRow[] {
  const rows = requireHeader(splitCsv(readFileSync(path, "utf8")),
    ["sample", "t", "key", "index", "value"], path);
  return rows.map((r, i) => ({
    sample: num(r[0], `${path}:${i + 2}`),
    t: num(r[1], `${path}:${i + 2}`),
    key: r[2],
    index: num(r[3], `${path}:${i + 2}`),
    value: num(r[4], `${path}:${i + 2}`),
  }));
}

export function readFim(path: string): FimRow[] {
  const rows = requireHeader(splitCsv(readFileSync(path, "utf8")),
    ["W", "L", "f_im_mean", "f_im_err", "E_top_mean", "E_tilde_mean"], path);
  return rows.map((r, i) => ({
    W: num(r[0], `${path}:${i + 2}`),
    L: num(r[1], `${path}:${i + 2}`),
    f_im_mean: num(r[2], `${path}:${i + 2}`),
    f_im_err: num(r[3], `${path}:${i + 2}`),
    E_top_mean: num(r[4], `${path}:${i + 2}`),
    E_tilde_mean: num(r[5], `${path}:${i + 2}`),
  }));
}

export function readCeffFit(path: string): CeffFit {
  const rows = requireHeader(splitCsv(readFileSync(path, "utf8")),
    ["c_eff", "const", "residual_rms", "n_points"], path);
  const r = rows[0];
  return {
    c_eff: num(r[0], path),
    const: num(r[1], path),
    residual_rms: num(r[2], path),
    n_points: num(r[3], path),
  };
}

/** Pivot averaged rows for one key into a (times x indices) grid. */
export function pivot(rows: AveragedRow[], key: string): {
  times: number[];
  indices: number[];
  values: number[][];
  stderr: number[][];
} {
  const sel = rows.filter((r) => r.key === key);
  if (sel.length === 0) {
    throw new SchemaError(`no rows with key ${JSON.stringify(key)}`);
  }
  const times = [...new Set(sel.map((r) => r.t))].sort((a, b) => a - b);
  const indices = [...new Set(sel.map((r) => r.index))].sort((a, b) => a - b);
  const ti = new Map(times.map((t, i) => [t, i]));
  const xi = new Map(indices.map((x, i) => [x, i]));
  const values = times.map(() => indices.map(() => NaN));
  const stderr = times.map(() => indices.map(() => 0));
  for (const r of sel) {
    values[ti.get(r.t)!][xi.get(r.index)!] = r.mean;
    stderr[ti.get(r.t)!][xi.get(r.index)!] = r.stderr;
  }
  for (const row of values) {
    if (row.some((v) => Number.isNaN(v))) {
      throw new SchemaError(`key ${key}: ragged grid (missing cells)`);
    }
  }
  return { times, indices, values, stderr };
}
