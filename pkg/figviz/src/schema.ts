/**
 * Strict parsing of the two CSV schemas emitted by the mstratio CLI.
 * The files are plain comma-separated numbers with a fixed header line;
 * any deviation is reported with the offending column or row.
 */

export const SWEEP_COLUMNS = [
  "n", "trials", "mean_max", "mean_avg", "mean_bipartite",
  "stderr_max", "stderr_avg", "stderr_bipartite",
] as const;

export const SCATTER_COLUMNS = ["n", "trial", "bipartite", "other"] as const;

export interface SweepRecord {
  n: number;
  trials: number;
  mean_max: number;
  mean_avg: number;
  mean_bipartite: number;
  stderr_max: number;
  stderr_avg: number;
  stderr_bipartite: number;
}

export interface ScatterRow {
  n: number;
  trial: number;
  bipartite: number;
  other: number;
}

export class SchemaError extends Error {}

function checkHeader(got: string[], expected: readonly string[]): void {
  const missing = expected.filter((c) => !got.includes(c));
  const unexpected = got.filter((c) => !(expected as readonly string[]).includes(c));
  if (missing.length || unexpected.length) {
    const parts = [];
    if (missing.length) parts.push(`missing columns: ${missing.join(", ")}`);
    if (unexpected.length) parts.push(`unexpected columns: ${unexpected.join(", ")}`);
    throw new SchemaError(parts.join("; "));
  }
  for (let i = 0; i < expected.length; i++) {
    if (got[i] !== expected[i]) {
      throw new SchemaError(
        `column ${i + 1} is '${got[i]}', expected '${expected[i]}' (order matters)`);
    }
  }
}

function parseRows(text: string, expected: readonly string[]): number[][] {
  const lines = text.split(/\r?\n/).filter((l) => l.trim() !== "");
  if (lines.length === 0) throw new SchemaError("empty file, no header line");
  checkHeader(lines[0].split(","), expected);
  if (lines.length === 1) throw new SchemaError("no data rows");
  const rows: number[][] = [];
  for (let i = 1; i < lines.length; i++) {
    const fields = lines[i].split(",");
    if (fields.length !== expected.length) {
      throw new SchemaError(
        `row ${i + 1} has ${fields.length} fields, expected ${expected.length}`);
    }
    const row = fields.map((f, j) => {
      const v = Number(f);
      if (f.trim() === "" || Number.isNaN(v)) {
        throw new SchemaError(`row ${i + 1}, column '${expected[j]}': not a number: '${f}'`);
      }
      return v;
    });
    rows.push(row);
  }
  return rows;
}

export function parseSweepCsv(text: string): SweepRecord[] {
  return parseRows(text, SWEEP_COLUMNS).map((r) => ({
    n: r[0], trials: r[1], mean_max: r[2], mean_avg: r[3], mean_bipartite: r[4],
    stderr_max: r[5], stderr_avg: r[6], stderr_bipartite: r[7],
  }));
}

export function parseScatterCsv(text: string): ScatterRow[] {
  return parseRows(text, SCATTER_COLUMNS).map((r) => ({
    n: r[0], trial: r[1], bipartite: r[2], other: r[3],
  }));
}
