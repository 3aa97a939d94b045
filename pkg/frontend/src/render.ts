/**
 * Figure rendering entry point: read a CLI CSV, validate it strictly
 * against the schema for the requested kind, and write an SVG.  The
 * output file is only written after validation and rendering succeed.
 */

import { readFileSync, writeFileSync } from "node:fs";

import { renderBloch, defaultBlochStyle, type BlochStyle } from "./bloch.js";
import {
  renderFidelity,
  defaultFidelityStyle,
  type FidelityStyle,
} from "./fidelity.js";
import {
  parseBlochCsv,
  parseFidelityCsv,
  type FigureKind,
} from "./schema.js";

export interface FigureSpec {
  input: string;
  kind: FigureKind;
  output: string;
  style?: Partial<BlochStyle & FidelityStyle>;
}

export interface RenderReport {
  output: string;
  rowCount: number;
  metadata: string[];
}

export function renderToString(
  kind: FigureKind,
  csvText: string,
  style?: FigureSpec["style"],
): { svg: string; rowCount: number; metadata: string[] } {
  if (kind === "bloch") {
    const { rows, metadata } = parseBlochCsv(csvText);
    const svg = renderBloch(rows, { ...defaultBlochStyle, ...style });
    return { svg, rowCount: rows.length, metadata };
  }
  const { rows, metadata } = parseFidelityCsv(csvText);
  const svg = renderFidelity(rows, { ...defaultFidelityStyle, ...style });
  return { svg, rowCount: rows.length, metadata };
}

export function render(spec: FigureSpec): RenderReport {
  const text = readFileSync(spec.input, "utf8");
  const { svg, rowCount, metadata } = renderToString(
    spec.kind,
    text,
    spec.style,
  );
  writeFileSync(spec.output, svg);
  return { output: spec.output, rowCount, metadata };
}
