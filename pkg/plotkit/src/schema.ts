/**
 * Sweep CSV schema.
 *
 * The Monte Carlo harness writes one row per (n, ratio) point with the
 * exact header below; anything else is rejected with a SchemaError that
 * names the offending header or row.
 */

export const EXPECTED_HEADER =
  "k,n,L,ratio,samples,sat_count,proportion,ci_low,ci_high";

/** One measured sweep point. */
export interface SweepRow {
  k: number;
  n: number;
  L: number;
  ratio: number;
  samples: number;
  satCount: number;
  proportion: number;
  ciLow: number;
  ciHigh: number;
}

export class SchemaError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "SchemaError";
  }
}

function parseIntField(token: string, field: string, line: string): number {
  if (!/^-?\d+$/.test(token)) {
    throw new SchemaError(`non-integer ${field} ${JSON.stringify(token)} in row ${JSON.stringify(line)}`);
  }
  return Number(token);
}

function parseFloatField(token: string, field: string, line: string): number {
  const value = Number(token);
  if (token.trim() === "" || Number.isNaN(value)) {
    throw new SchemaError(`non-numeric ${field} ${JSON.stringify(token)} in row ${JSON.stringify(line)}`);
  }
  return value;
}

/** Parse and validate a whole sweep CSV document. */
export function parseSweepCsv(text: string): SweepRow[] {
  const lines = text.split(/\r?\n/).filter((line) => line.trim() !== "");
  if (lines.length === 0) {
    throw new SchemaError(`schema mismatch: empty input, expected header ${JSON.stringify(EXPECTED_HEADER)}`);
  }
  if (lines[0] !== EXPECTED_HEADER) {
    throw new SchemaError(
      `schema mismatch: offending header ${JSON.stringify(lines[0])}, expected ${JSON.stringify(EXPECTED_HEADER)}`,
    );
  }
  const rows: SweepRow[] = [];
  const widths = new Set<number>();
  for (const line of lines.slice(1)) {
    const parts = line.split(",");
    if (parts.length !== 9) {
      throw new SchemaError(`schema mismatch: expected 9 fields, got ${parts.length} in row ${JSON.stringify(line)}`);
    }
    const row: SweepRow = {
      k: parseIntField(parts[0], "k", line),
      n: parseIntField(parts[1], "n", line),
      L: parseIntField(parts[2], "L", line),
      ratio: parseFloatField(parts[3], "ratio", line),
      samples: parseIntField(parts[4], "samples", line),
      satCount: parseIntField(parts[5], "sat_count", line),
      proportion: parseFloatField(parts[6], "proportion", line),
      ciLow: parseFloatField(parts[7], "ci_low", line),
      ciHigh: parseFloatField(parts[8], "ci_high", line),
    };
    if (row.samples < 1 || row.satCount < 0 || row.satCount > row.samples) {
      throw new SchemaError(`sat_count/samples out of range in row ${JSON.stringify(line)}`);
    }
    if (row.ciLow < 0 || row.ciHigh > 1 || row.ciLow > row.proportion || row.proportion > row.ciHigh) {
      throw new SchemaError(`confidence bounds do not bracket proportion in row ${JSON.stringify(line)}`);
    }
    widths.add(row.k);
    rows.push(row);
  }
  if (widths.size > 1) {
    throw new SchemaError(`mixed clause widths in CSV: ${[...widths].sort().join(", ")}`);
  }
  return rows;
}

/** Group rows by n, each group sorted by ratio. */
export function groupByN(rows: SweepRow[]): Map<number, SweepRow[]> {
  const groups = new Map<number, SweepRow[]>();
  for (const row of rows) {
    const group = groups.get(row.n);
    if (group === undefined) {
      groups.set(row.n, [row]);
    } else {
      group.push(row);
    }
  }
  const sorted = new Map<number, SweepRow[]>();
  for (const n of [...groups.keys()].sort((a, b) => a - b)) {
    sorted.set(n, groups.get(n)!.slice().sort((a, b) => a.ratio - b.ratio));
  }
  return sorted;
}
