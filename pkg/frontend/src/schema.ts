/**
 * Strict CSV schemas for the two figure kinds.
 *
 * The CSV contract is the boundary with the simulation CLI: a header row,
 * '.' decimal floats, and optional leading '#' metadata comment lines.
 * Columns must match the schema exactly -- no silent guessing; a mismatch
 * reports the full column diff.
 */

import { z } from "zod";
import Papa from "papaparse";

export type FigureKind = "bloch" | "fidelity";

const finiteNumber = z
  .string()
  .transform((s) => Number(s))
  .refine((v) => Number.isFinite(v), { message: "not a finite number" });

export const blochRowSchema = z.strictObject({
  x: finiteNumber,
  y: finiteNumber,
  z: finiteNumber,
  seq_len: finiteNumber.refine((v) => Number.isInteger(v) && v >= 0, {
    message: "seq_len must be a non-negative integer",
  }),
});

export const fidelityRowSchema = z.strictObject({
  g: finiteNumber,
  fidelity_full: finiteNumber,
  fidelity_zeno: finiteNumber,
  fidelity_holonomic: finiteNumber,
  fidelity_no_phi: finiteNumber,
});

export type BlochRow = z.infer<typeof blochRowSchema>;
export type FidelityRow = z.infer<typeof fidelityRowSchema>;

export const expectedColumns: Record<FigureKind, readonly string[]> = {
  bloch: ["x", "y", "z", "seq_len"],
  fidelity: [
    "g",
    "fidelity_full",
    "fidelity_zeno",
    "fidelity_holonomic",
    "fidelity_no_phi",
  ],
};

export class SchemaError extends Error {
  constructor(
    message: string,
    readonly missing: readonly string[] = [],
    readonly unexpected: readonly string[] = [],
  ) {
    super(message);
    this.name = "SchemaError";
  }
}

function checkColumns(kind: FigureKind, header: readonly string[]): void {
  const expected = expectedColumns[kind];
  const missing = expected.filter((c) => !header.includes(c));
  const unexpected = header.filter((c) => !expected.includes(c));
  if (missing.length > 0 || unexpected.length > 0) {
    const parts = [
      `column mismatch for kind '${kind}'`,
      `expected [${expected.join(", ")}]`,
      `got [${header.join(", ")}]`,
    ];
    if (missing.length > 0) parts.push(`missing: [${missing.join(", ")}]`);
    if (unexpected.length > 0)
      parts.push(`unexpected: [${unexpected.join(", ")}]`);
    throw new SchemaError(parts.join("; "), missing, unexpected);
  }
}

export interface ParsedCsv<Row> {
  rows: Row[];
  /** Leading '#' comment lines from the CLI metadata header. */
  metadata: string[];
}

interface RowSchema<Row> {
  safeParse(data: unknown):
    | { success: true; data: Row }
    | { success: false; error: z.ZodError };
}

function parseWith<Row>(
  kind: FigureKind,
  schema: RowSchema<Row>,
  text: string,
): ParsedCsv<Row> {
  const metadata = text
    .split(/\r?\n/)
    .filter((line) => line.startsWith("#"));
  const result = Papa.parse<Record<string, string>>(text, {
    header: true,
    comments: "#",
    skipEmptyLines: true,
  });
  if (result.errors.length > 0) {
    const first = result.errors[0]!;
    throw new SchemaError(`CSV parse error: ${first.message} (row ${first.row})`);
  }
  const header = result.meta.fields ?? [];
  checkColumns(kind, header);
  if (result.data.length === 0) {
    throw new SchemaError(`CSV for kind '${kind}' contains no data rows`);
  }
  const rows = result.data.map((raw, i) => {
    const parsed = schema.safeParse(raw);
    if (!parsed.success) {
      const issue = parsed.error.issues[0]!;
      throw new SchemaError(
        `row ${i + 1}: ${issue.path.join(".")}: ${issue.message}`,
      );
    }
    return parsed.data;
  });
  return { rows, metadata };
}

export function parseBlochCsv(text: string): ParsedCsv<BlochRow> {
  return parseWith("bloch", blochRowSchema, text);
}

export function parseFidelityCsv(text: string): ParsedCsv<FidelityRow> {
  return parseWith("fidelity", fidelityRowSchema, text);
}
