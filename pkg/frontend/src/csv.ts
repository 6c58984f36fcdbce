// Reader for the simulator's CSV format: '#'-prefixed metadata block,
// one header row, numeric data rows. Strictly a consumer; nothing here
// recomputes dynamics.

import { readFileSync } from "node:fs";

export class ProvenanceError extends Error {}

export class SchemaError extends Error {}

export interface Table {
  path: string;
  meta: Map<string, string>;
  columns: string[];
  rows: string[][];
  errorMarker: string | null;
}

export function parseTable(text: string, path: string): Table {
  const meta = new Map<string, string>();
  const rows: string[][] = [];
  let columns: string[] | null = null;
  let errorMarker: string | null = null;

  for (const raw of text.split("\n")) {
    const line = raw.trimEnd();
    if (line === "") continue;
    if (line.startsWith("#")) {
      const body = line.replace(/^#\s*/, "");
      const sep = body.indexOf(": ");
      if (sep > 0) {
        const key = body.slice(0, sep);
        if (key === "error") errorMarker = body.slice(sep + 2);
        else meta.set(key, body.slice(sep + 2));
      }
      continue;
    }
    if (columns === null) {
      columns = line.split(",");
    } else {
      rows.push(line.split(","));
    }
  }

  if (columns === null) {
    throw new SchemaError(`${path}: no header row found`);
  }
  const hasConfig = [...meta.keys()].some((k) => k.startsWith("config."));
  if (!meta.has("command") || !hasConfig) {
    throw new ProvenanceError(
      `${path}: metadata header lacks config provenance ` +
        `(need a "# command:" line and "# config.*" lines)`,
    );
  }
  return { path, meta, columns, rows, errorMarker };
}

export function readTable(path: string): Table {
  return parseTable(readFileSync(path, "utf8"), path);
}

export function requireColumns(table: Table, needed: string[]): void {
  const missing = needed.filter((c) => !table.columns.includes(c));
  if (missing.length > 0) {
    throw new SchemaError(
      `${table.path}: missing column(s) ${missing.join(", ")}; ` +
        `file has: ${table.columns.join(", ")}`,
    );
  }
}

export function column(table: Table, name: string): number[] {
  const i = table.columns.indexOf(name);
  if (i < 0) {
    throw new SchemaError(
      `${table.path}: missing column(s) ${name}; ` +
        `file has: ${table.columns.join(", ")}`,
    );
  }
  return table.rows.map((r) => Number(r[i]));
}

export function stringColumn(table: Table, name: string): string[] {
  const i = table.columns.indexOf(name);
  if (i < 0) {
    throw new SchemaError(
      `${table.path}: missing column(s) ${name}; ` +
        `file has: ${table.columns.join(", ")}`,
    );
  }
  return table.rows.map((r) => r[i]);
}

// "6.2831853071795862" -> "6.283"; used for panel annotations
export function metaNumber(table: Table, key: string, digits = 4): string {
  const v = table.meta.get(key);
  if (v === undefined) return "?";
  const n = Number(v);
  return Number.isFinite(n) ? String(Number(n.toPrecision(digits))) : v;
}
