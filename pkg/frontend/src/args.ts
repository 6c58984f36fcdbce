// Shared script plumbing: positional CSV paths plus --out, and a runner
// that turns schema/provenance failures into a nonzero exit with the
// diagnostic on stderr.

import { parseArgs } from "node:util";
import { pathToFileURL } from "node:url";

import { ProvenanceError, SchemaError } from "./csv.js";

export interface ScriptArgs {
  inputs: string[];
  out: string;
  range?: number;
}

export function parseScriptArgs(argv: string[], defaultOut: string): ScriptArgs {
  const { values, positionals } = parseArgs({
    args: argv,
    options: {
      out: { type: "string" },
      range: { type: "string" },
    },
    allowPositionals: true,
  });
  return {
    inputs: positionals,
    out: values.out ?? defaultOut,
    range: values.range !== undefined ? Number(values.range) : undefined,
  };
}

export function runScript(body: () => void): number {
  try {
    body();
    return 0;
  } catch (err) {
    if (err instanceof SchemaError || err instanceof ProvenanceError) {
      console.error(String(err.message));
      return 1;
    }
    throw err;
  }
}

export function isDirectRun(moduleUrl: string): boolean {
  return (
    process.argv[1] !== undefined &&
    moduleUrl === pathToFileURL(process.argv[1]).href
  );
}
