#!/usr/bin/env node
/**
 * darkholonomy-plot --kind bloch|fidelity --input data.csv --output fig.svg
 *
 * Exit codes: 0 success, 1 data/schema or I/O failure, 2 usage error.
 */

import { parseArgs } from "node:util";
import { pathToFileURL } from "node:url";

import { render } from "./render.js";
import { SchemaError } from "./schema.js";

const USAGE =
  "usage: darkholonomy-plot --kind <bloch|fidelity> --input <csv> --output <svg> " +
  "[--width N] [--height N] [--title TEXT]";

export function main(argv: string[]): number {
  let args;
  try {
    args = parseArgs({
      args: argv,
      options: {
        kind: { type: "string" },
        input: { type: "string" },
        output: { type: "string" },
        width: { type: "string" },
        height: { type: "string" },
        title: { type: "string" },
        help: { type: "boolean", short: "h" },
      },
      allowPositionals: false,
    });
  } catch (err) {
    console.error(`${(err as Error).message}\n${USAGE}`);
    return 2;
  }
  const { values } = args;
  if (values.help) {
    console.log(USAGE);
    return 0;
  }
  const { kind, input, output } = values;
  if (!kind || !input || !output) {
    console.error(`--kind, --input and --output are required\n${USAGE}`);
    return 2;
  }
  if (kind !== "bloch" && kind !== "fidelity") {
    console.error(`unknown kind '${kind}' (expected bloch or fidelity)\n${USAGE}`);
    return 2;
  }
  const style: Record<string, number | string> = {};
  for (const dim of ["width", "height"] as const) {
    const raw = values[dim];
    if (raw !== undefined) {
      const parsed = Number(raw);
      if (!Number.isFinite(parsed) || parsed <= 0) {
        console.error(`--${dim} must be a positive number\n${USAGE}`);
        return 2;
      }
      style[dim] = parsed;
    }
  }
  if (values.title !== undefined) style.title = values.title;

  try {
    const report = render({ kind, input, output, style });
    console.log(`wrote ${report.output} (${report.rowCount} rows)`);
    return 0;
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`schema error: ${err.message}`);
    } else {
      console.error(`error: ${(err as Error).message}`);
    }
    return 1;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === pathToFileURL(process.argv[1]).href;
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
