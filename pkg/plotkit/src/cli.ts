/**
 * Render a sweep CSV to an SVG image.
 *
 *   node dist/cli.js <input.csv> <output.svg> [--no-crossings]
 *
 * Exit codes: 0 ok, 1 schema/IO error (message on stderr), 2 usage.
 */

import { readFileSync, writeFileSync } from "node:fs";
import { pathToFileURL } from "node:url";

import { renderSvg } from "./render.js";
import { parseSweepCsv, SchemaError } from "./schema.js";

const USAGE = "usage: plotkit <input.csv> <output.svg> [--no-crossings]";

export function runCli(argv: string[]): number {
  const positional: string[] = [];
  let annotate = true;
  for (const arg of argv) {
    if (arg === "--no-crossings") {
      annotate = false;
    } else if (arg === "--help" || arg === "-h") {
      console.log(USAGE);
      return 0;
    } else if (arg.startsWith("-")) {
      console.error(`unknown flag ${arg}\n${USAGE}`);
      return 2;
    } else {
      positional.push(arg);
    }
  }
  if (positional.length !== 2) {
    console.error(USAGE);
    return 2;
  }
  const [inputPath, outputPath] = positional;
  let text: string;
  try {
    text = readFileSync(inputPath, "utf8");
  } catch (err) {
    console.error(`error: cannot read ${inputPath}: ${(err as Error).message}`);
    return 1;
  }
  try {
    const rows = parseSweepCsv(text);
    const svg = renderSvg(rows, { annotateCrossings: annotate });
    writeFileSync(outputPath, svg, "utf8");
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    console.error(`error: ${(err as Error).message}`);
    return 1;
  }
  return 0;
}

if (process.argv[1] !== undefined && import.meta.url === pathToFileURL(process.argv[1]).href) {
  process.exit(runCli(process.argv.slice(2)));
}
