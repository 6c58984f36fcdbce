// Collapse/revival traces: one panel per compare CSV, overlaying the
// quantum ground-state signal P_g (solid) and the classical readout
// cos^2(phi_tau * E) (dashed) against kick number.

import { writeFileSync } from "node:fs";

import { isDirectRun, parseScriptArgs, runScript } from "./args.js";
import { column, metaNumber, readTable, requireColumns } from "./csv.js";
import * as svg from "./svg.js";

const PANEL_W = 430;
const PANEL_H = 260;
const GAP = 60;
const MARGIN = 60;

export function renderFig34(csvPaths: string[]): string {
  const parts: string[] = [];
  for (let p = 0; p < csvPaths.length; p++) {
    const table = readTable(csvPaths[p]);
    requireColumns(table, ["kick", "p_g", "cos_sq_phi_tau_e"]);
    const kick = column(table, "kick");
    const pg = column(table, "p_g");
    const cls = column(table, "cos_sq_phi_tau_e");

    const frame: svg.Frame = {
      x0: MARGIN + p * (PANEL_W + GAP),
      y0: 40,
      w: PANEL_W,
      h: PANEL_H,
      xmin: 0,
      xmax: Math.max(1, ...kick),
      ymin: 0,
      ymax: 1.02,
    };
    const g = metaNumber(table, "config.g");
    const are = metaNumber(table, "config.alpha_re");
    const aim = metaNumber(table, "config.alpha_im");
    parts.push(
      svg.axes(frame, {
        xlabel: "kick",
        ylabel: "P_g",
        title: `g = ${g}, alpha = (${are}, ${aim})`,
      }),
    );
    parts.push(svg.polyline(frame, kick, pg, { width: 1.4 }));
    parts.push(svg.polyline(frame, kick, cls, { dash: "5 4", stroke: "#888" }));
    // legend, top-right of the panel
    const lx = frame.x0 + frame.w - 150;
    const ly = frame.y0 + 14;
    parts.push(
      `<line x1="${svg.fmt(lx)}" y1="${svg.fmt(ly)}" x2="${svg.fmt(lx + 24)}" ` +
        `y2="${svg.fmt(ly)}" stroke="#222" stroke-width="1.4"/>`,
      svg.text(lx + 30, ly + 4, "quantum", 10),
      `<line x1="${svg.fmt(lx)}" y1="${svg.fmt(ly + 14)}" x2="${svg.fmt(lx + 24)}" ` +
        `y2="${svg.fmt(ly + 14)}" stroke="#888" stroke-width="1.2" ` +
        `stroke-dasharray="5 4"/>`,
      svg.text(lx + 30, ly + 18, "classical", 10),
    );
  }
  const width = MARGIN + csvPaths.length * (PANEL_W + GAP);
  const height = 40 + PANEL_H + 60;
  return svg.document(width, height, parts.filter((s) => s !== "").join("\n"));
}

export function main(argv: string[]): number {
  return runScript(() => {
    const args = parseScriptArgs(argv, "fig34.svg");
    if (args.inputs.length < 1) {
      throw new Error("expected at least 1 compare CSV");
    }
    writeFileSync(args.out, renderFig34(args.inputs));
  });
}

if (isDirectRun(import.meta.url)) {
  process.exit(main(process.argv.slice(2)));
}
