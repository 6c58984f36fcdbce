// Bifurcation diagram: period-1 radius branches in the (r, theta) plane.
// Input: one bifurcation CSV. Branches come grouped by (family, n, sign);
// the solid family is drawn solid, the dashed family dashed.

import { writeFileSync } from "node:fs";

import { isDirectRun, parseScriptArgs, runScript } from "./args.js";
import { column, readTable, requireColumns, stringColumn } from "./csv.js";
import * as svg from "./svg.js";

const W = 560;
const H = 420;

export function renderFig1(csvPath: string): string {
  const table = readTable(csvPath);
  requireColumns(table, ["family", "n", "sign", "r", "theta"]);

  const family = stringColumn(table, "family");
  const n = stringColumn(table, "n");
  const sign = stringColumn(table, "sign");
  const r = column(table, "r");
  const theta = column(table, "theta");

  const branches = new Map<string, { xs: number[]; ys: number[]; dashed: boolean }>();
  for (let i = 0; i < r.length; i++) {
    const key = `${family[i]}|${n[i]}|${sign[i]}`;
    let b = branches.get(key);
    if (b === undefined) {
      b = { xs: [], ys: [], dashed: family[i] === "dashed" };
      branches.set(key, b);
    }
    b.xs.push(r[i]);
    b.ys.push(theta[i]);
  }

  let rmax = 0;
  let tmin = Infinity;
  let tmax = -Infinity;
  for (const v of r) rmax = Math.max(rmax, v);
  for (const v of theta) {
    tmin = Math.min(tmin, v);
    tmax = Math.max(tmax, v);
  }
  if (!Number.isFinite(tmin)) {
    // empty file: draw bare axes
    tmin = -1;
    tmax = 1;
    rmax = 1;
  }
  const pad = 0.05 * (tmax - tmin || 1);

  const frame: svg.Frame = {
    x0: 65,
    y0: 30,
    w: W - 90,
    h: H - 90,
    xmin: 0,
    xmax: rmax || 1,
    ymin: tmin - pad,
    ymax: tmax + pad,
  };

  const parts: string[] = [];
  parts.push(
    svg.axes(frame, {
      xlabel: "r",
      ylabel: "theta",
      title: "period-1 branches (solid: cos > 0; dashed: companion family)",
    }),
  );
  for (const b of branches.values()) {
    parts.push(
      svg.polyline(frame, b.xs, b.ys, b.dashed ? { dash: "6 4", stroke: "#666" } : {}),
    );
  }
  return svg.document(W, H, parts.filter((p) => p !== "").join("\n"));
}

export function main(argv: string[]): number {
  return runScript(() => {
    const args = parseScriptArgs(argv, "fig1.svg");
    if (args.inputs.length !== 1) {
      throw new Error(`expected 1 bifurcation CSV, got ${args.inputs.length}`);
    }
    writeFileSync(args.out, renderFig1(args.inputs[0]));
  });
}

if (isDirectRun(import.meta.url)) {
  process.exit(main(process.argv.slice(2)));
}
