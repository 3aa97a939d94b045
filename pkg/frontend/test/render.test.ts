import { mkdtempSync, existsSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, describe, expect, it } from "vitest";

import { renderBloch } from "../src/bloch.js";
import { renderFidelity, seriesSpec } from "../src/fidelity.js";
import { render, renderToString } from "../src/render.js";
import { parseBlochCsv, parseFidelityCsv } from "../src/schema.js";

const tmp = mkdtempSync(join(tmpdir(), "plots-render-"));
afterAll(() => rmSync(tmp, { recursive: true, force: true }));

function blochCsv(count: number): string {
  // deterministic fixture points on the unit sphere (golden-angle spiral)
  const lines = ["x,y,z,seq_len"];
  for (let i = 0; i < count; i++) {
    const z = 1 - (2 * (i + 0.5)) / count;
    const r = Math.sqrt(1 - z * z);
    const phi = i * 2.399963229728653;
    lines.push(
      `${(r * Math.cos(phi)).toFixed(6)},${(r * Math.sin(phi)).toFixed(6)},` +
        `${z.toFixed(6)},${(i % 30) + 1}`,
    );
  }
  return lines.join("\n") + "\n";
}

const FIDELITY_CSV = [
  "g,fidelity_full,fidelity_zeno,fidelity_holonomic,fidelity_no_phi",
  "5,0.98272,0.99999,0.99997,0.97341",
  "10,0.99621,0.99998,0.99997,0.98328",
  "20,0.99785,0.99898,0.99997,0.98577",
  "40,0.98757,0.98786,0.99997,0.98640",
  "",
].join("\n");

describe("bloch rendering", () => {
  it("draws one marker per row", () => {
    const { rows } = parseBlochCsv(blochCsv(137));
    const svg = renderBloch(rows);
    const markers = svg.match(/class="bloch-point"/g) ?? [];
    expect(markers).toHaveLength(137);
  });

  it("is deterministic", () => {
    const { rows } = parseBlochCsv(blochCsv(64));
    expect(renderBloch(rows)).toBe(renderBloch(rows));
  });

  it("is valid standalone SVG", () => {
    const { rows } = parseBlochCsv(blochCsv(8));
    const svg = renderBloch(rows);
    expect(svg.startsWith("<svg xmlns=")).toBe(true);
    expect(svg.trimEnd().endsWith("</svg>")).toBe(true);
  });
});

describe("fidelity rendering", () => {
  it("contains all four series", () => {
    const { rows } = parseFidelityCsv(FIDELITY_CSV);
    const svg = renderFidelity(rows);
    for (const series of seriesSpec) {
      expect(svg).toContain(`class="series-${series.key}"`);
      expect(svg).toContain(`>${series.label}</text>`);
    }
  });

  it("is deterministic and row-order independent", () => {
    const { rows } = parseFidelityCsv(FIDELITY_CSV);
    const reversed = [...rows].reverse();
    expect(renderFidelity(rows)).toBe(renderFidelity(reversed));
  });
});

describe("render() file contract", () => {
  it("writes the SVG and reports the row count", () => {
    const input = join(tmp, "points.csv");
    const output = join(tmp, "points.svg");
    writeFileSync(input, blochCsv(25));
    const report = render({ kind: "bloch", input, output });
    expect(report.rowCount).toBe(25);
    expect(readFileSync(output, "utf8")).toContain("bloch-point");
  });

  it("does not write a file when the CSV is empty", () => {
    const input = join(tmp, "empty.csv");
    const output = join(tmp, "empty.svg");
    writeFileSync(input, "x,y,z,seq_len\n");
    expect(() => render({ kind: "bloch", input, output })).toThrow(
      /no data rows/,
    );
    expect(existsSync(output)).toBe(false);
  });

  it("does not write a file on a schema mismatch", () => {
    const input = join(tmp, "mismatch.csv");
    const output = join(tmp, "mismatch.svg");
    writeFileSync(input, FIDELITY_CSV);
    expect(() => render({ kind: "bloch", input, output })).toThrow(
      /column mismatch/,
    );
    expect(existsSync(output)).toBe(false);
  });

  it("applies style overrides", () => {
    const { svg } = renderToString("fidelity", FIDELITY_CSV, {
      width: 300,
      height: 200,
      title: "custom",
    });
    expect(svg).toContain('width="300"');
    expect(svg).toContain(">custom</text>");
  });
});
