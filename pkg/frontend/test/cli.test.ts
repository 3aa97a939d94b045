/**
 * End-to-end: render figures from fresh simulation CLI output, consuming
 * only the documented CSV interface, plus exit-code contract checks.
 */

import { execFileSync, spawnSync } from "node:child_process";
import { existsSync, mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { fileURLToPath } from "node:url";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { main } from "../src/cli.js";

const tmp = mkdtempSync(join(tmpdir(), "plots-cli-"));
afterAll(() => rmSync(tmp, { recursive: true, force: true }));

const universalityCsv = join(tmp, "universality.csv");
const sweepCsv = join(tmp, "sweep.csv");

function runPlot(...argv: string[]) {
  const logs: string[] = [];
  const errs: string[] = [];
  const origLog = console.log;
  const origErr = console.error;
  console.log = (msg: unknown) => logs.push(String(msg));
  console.error = (msg: unknown) => errs.push(String(msg));
  try {
    const code = main(argv);
    return { code, out: logs.join("\n"), err: errs.join("\n") };
  } finally {
    console.log = origLog;
    console.error = origErr;
  }
}

beforeAll(() => {
  // fresh output from the simulation CLI (small sizes keep this quick)
  const uni = execFileSync(
    "python3",
    ["-m", "darkholonomy.cli", "universality", "--count", "400", "--seed", "11"],
    { encoding: "utf8" },
  );
  writeFileSync(universalityCsv, uni);
  const sweep = execFileSync(
    "python3",
    ["-m", "darkholonomy.cli", "sweep", "--g-list", "15,30", "--t-scale", "60"],
    { encoding: "utf8" },
  );
  writeFileSync(sweepCsv, sweep);
}, 180_000);

describe("figures from fresh simulation output", () => {
  it("renders the Bloch scatter with one marker per CSV row", () => {
    const out = join(tmp, "bloch.svg");
    const { code } = runPlot(
      "--kind", "bloch", "--input", universalityCsv, "--output", out,
    );
    expect(code).toBe(0);
    const svg = readFileSync(out, "utf8");
    expect(svg.match(/class="bloch-point"/g)).toHaveLength(400);
  });

  it("renders the fidelity figure with all four series", () => {
    const out = join(tmp, "fidelity.svg");
    const { code } = runPlot(
      "--kind", "fidelity", "--input", sweepCsv, "--output", out,
    );
    expect(code).toBe(0);
    const svg = readFileSync(out, "utf8");
    for (const key of [
      "fidelity_full",
      "fidelity_zeno",
      "fidelity_holonomic",
      "fidelity_no_phi",
    ]) {
      expect(svg).toContain(`class="series-${key}"`);
    }
  });

  it("renders byte-identically on repeated runs", () => {
    const a = join(tmp, "bloch-a.svg");
    const b = join(tmp, "bloch-b.svg");
    runPlot("--kind", "bloch", "--input", universalityCsv, "--output", a);
    runPlot("--kind", "bloch", "--input", universalityCsv, "--output", b);
    expect(readFileSync(a, "utf8")).toBe(readFileSync(b, "utf8"));
  });
});

describe("exit-code contract", () => {
  it("usage error without required flags", () => {
    const { code, err } = runPlot("--kind", "bloch");
    expect(code).toBe(2);
    expect(err).toContain("required");
  });

  it("usage error on unknown kind", () => {
    const { code } = runPlot(
      "--kind", "pie", "--input", universalityCsv, "--output", join(tmp, "x.svg"),
    );
    expect(code).toBe(2);
  });

  it("schema mismatch exits 1 with a column diff and writes nothing", () => {
    const out = join(tmp, "wrong.svg");
    const { code, err } = runPlot(
      "--kind", "bloch", "--input", sweepCsv, "--output", out,
    );
    expect(code).toBe(1);
    expect(err).toContain("missing: [x, y, z, seq_len]");
    expect(existsSync(out)).toBe(false);
  });

  it("missing input file exits 1", () => {
    const { code } = runPlot(
      "--kind", "bloch",
      "--input", join(tmp, "nope.csv"),
      "--output", join(tmp, "nope.svg"),
    );
    expect(code).toBe(1);
  });

  it("compiled CLI runs as a standalone process", () => {
    const out = join(tmp, "proc.svg");
    const proc = spawnSync(
      "node",
      [
        fileURLToPath(new URL("../dist/cli.js", import.meta.url)),
        "--kind", "bloch", "--input", universalityCsv, "--output", out,
      ],
      { encoding: "utf8" },
    );
    expect(proc.status).toBe(0);
    expect(proc.stdout).toContain("400 rows");
    expect(existsSync(out)).toBe(true);
  });
});
