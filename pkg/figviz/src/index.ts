#!/usr/bin/env node
/**
 * figviz: render mstratio CSV output into figures.
 *
 *   figviz three-curves sweep.csv out.png [--xlabel L] [--ylabel L]
 *   figviz scatter scatter.csv out.png [--xlabel L] [--ylabel L]
 *
 * Output format follows the file extension: .svg writes the SVG text,
 * anything else is rasterized to PNG. Exit codes: 0 ok, 1 bad input
 * (schema mismatch, unreadable file), 2 usage.
 */

import { readFileSync, realpathSync, writeFileSync } from "fs";
import { pathToFileURL } from "url";

import { parseScatterCsv, parseSweepCsv, SchemaError } from "./schema.js";
import { scatterSvg, threeCurvesSvg } from "./render.js";

export interface FigureSpec {
  kind: "three_curves" | "scatter";
  input: string;
  output: string;
  xLabel?: string;
  yLabel?: string;
}

export async function render(spec: FigureSpec): Promise<void> {
  const text = readFileSync(spec.input, "utf8");
  let svg: string;
  if (spec.kind === "three_curves") {
    svg = threeCurvesSvg(parseSweepCsv(text),
                         spec.xLabel ?? "number of points n",
                         spec.yLabel ?? "ratio");
  } else {
    svg = scatterSvg(parseScatterCsv(text),
                     spec.xLabel ?? "bipartite ratio",
                     spec.yLabel ?? "ratio");
  }
  if (spec.output.endsWith(".svg")) {
    writeFileSync(spec.output, svg);
  } else {
    const sharp = (await import("sharp")).default;
    const png = await sharp(Buffer.from(svg)).png().toBuffer();
    writeFileSync(spec.output, png);
  }
}

const USAGE =
  "usage: figviz <three-curves|scatter> <input.csv> <output.(png|svg)> " +
  "[--xlabel L] [--ylabel L]";

export async function main(argv: string[]): Promise<number> {
  const positional: string[] = [];
  let xLabel: string | undefined;
  let yLabel: string | undefined;
  for (let i = 0; i < argv.length; i++) {
    if (argv[i] === "--xlabel") xLabel = argv[++i];
    else if (argv[i] === "--ylabel") yLabel = argv[++i];
    else if (argv[i].startsWith("--")) {
      console.error(`unknown option ${argv[i]}\n${USAGE}`);
      return 2;
    } else positional.push(argv[i]);
  }
  if (positional.length !== 3) {
    console.error(USAGE);
    return 2;
  }
  const [verb, input, output] = positional;
  if (verb !== "three-curves" && verb !== "scatter") {
    console.error(`unknown figure kind '${verb}'\n${USAGE}`);
    return 2;
  }
  try {
    await render({
      kind: verb === "three-curves" ? "three_curves" : "scatter",
      input, output, xLabel, yLabel,
    });
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`error: schema: ${err.message}`);
    } else {
      console.error(`error: ${(err as Error).message}`);
    }
    return 1;
  }
  return 0;
}

function isDirectRun(): boolean {
  if (!process.argv[1]) return false;
  try {
    return import.meta.url === pathToFileURL(realpathSync(process.argv[1])).href;
  } catch {
    return false;
  }
}

if (isDirectRun()) {
  main(process.argv.slice(2)).then((code) => process.exit(code));
}
