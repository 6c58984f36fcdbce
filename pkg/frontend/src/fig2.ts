// Phase portraits: 2x2 panel of stroboscopic orbits, one poincare CSV per
// panel, labeled (a)-(d) with the gain read from each file's metadata.

import { writeFileSync } from "node:fs";

import { isDirectRun, parseScriptArgs, runScript } from "./args.js";
import { column, metaNumber, readTable, requireColumns } from "./csv.js";
import * as svg from "./svg.js";

const PANEL = 260;
const GAP = 58;
const MARGIN = 60;
const LABELS = ["(a)", "(b)", "(c)", "(d)"];

export function renderFig2(csvPaths: string[], range = 16): string {
  const parts: string[] = [];
  for (let p = 0; p < csvPaths.length; p++) {
    const table = readTable(csvPaths[p]);
    requireColumns(table, ["seed_id", "kick", "x1", "x2", "escaped"]);
    const x1 = column(table, "x1");
    const x2 = column(table, "x2");

    const row = Math.floor(p / 2);
    const col = p % 2;
    const frame: svg.Frame = {
      x0: MARGIN + col * (PANEL + GAP),
      y0: 40 + row * (PANEL + GAP),
      w: PANEL,
      h: PANEL,
      xmin: -range,
      xmax: range,
      ymin: -range,
      ymax: range,
    };
    const g = metaNumber(table, "config.g");
    parts.push(
      svg.axes(frame, {
        xlabel: "x1",
        ylabel: "x2",
        title: `${LABELS[p] ?? ""} g = ${g}`,
      }),
    );
    parts.push(svg.scatter(frame, x1, x2));
  }
  const width = MARGIN + 2 * PANEL + GAP + 30;
  const height = 40 + 2 * PANEL + GAP + 50;
  return svg.document(width, height, parts.filter((s) => s !== "").join("\n"));
}

export function main(argv: string[]): number {
  return runScript(() => {
    const args = parseScriptArgs(argv, "fig2.svg");
    if (args.inputs.length !== 4) {
      throw new Error(`expected 4 poincare CSVs, got ${args.inputs.length}`);
    }
    writeFileSync(args.out, renderFig2(args.inputs, args.range ?? 16));
  });
}

if (isDirectRun(import.meta.url)) {
  process.exit(main(process.argv.slice(2)));
}
