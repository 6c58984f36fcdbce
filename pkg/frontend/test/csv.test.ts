import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import {
  column,
  metaNumber,
  parseTable,
  ProvenanceError,
  readTable,
  requireColumns,
  SchemaError,
  stringColumn,
} from "../src/csv";

const FIXTURE = new URL("./fixtures/compare_regular.csv", import.meta.url)
  .pathname;

describe("parseTable", () => {
  it("reads metadata, columns, and rows from a real file", () => {
    const t = readTable(FIXTURE);
    expect(t.meta.get("command")).toBe("compare");
    expect(t.meta.get("config.g")).toBe("1.2");
    expect(t.columns).toContain("p_g");
    expect(t.rows.length).toBe(21); // kicks 0..20
    expect(t.errorMarker).toBeNull();
  });

  it("refuses files without config provenance", () => {
    const text = readFileSync(FIXTURE, "utf8");
    const stripped = text
      .split("\n")
      .filter((l) => !l.startsWith("#"))
      .join("\n");
    expect(() => parseTable(stripped, "x.csv")).toThrow(ProvenanceError);
    expect(() => parseTable(stripped, "x.csv")).toThrow(/provenance/);
  });

  it("captures an error marker without treating it as data", () => {
    const text =
      "# command: quantum\n# config.g: 2\nkick,mean_n\n0,0\n" +
      "# error: truncation overflow at kick 1\n";
    const t = parseTable(text, "x.csv");
    expect(t.rows.length).toBe(1);
    expect(t.errorMarker).toMatch(/truncation overflow/);
  });

  it("rejects a file with no header", () => {
    expect(() => parseTable("# command: x\n# config.g: 1\n", "x.csv")).toThrow(
      SchemaError,
    );
  });
});

describe("columns", () => {
  it("requireColumns names every missing column and the found set", () => {
    const t = readTable(FIXTURE);
    try {
      requireColumns(t, ["kick", "nope_1", "nope_2"]);
      expect.unreachable();
    } catch (err) {
      expect(err).toBeInstanceOf(SchemaError);
      const msg = String((err as Error).message);
      expect(msg).toContain("nope_1, nope_2");
      expect(msg).toContain("kick,"); // found-columns listing
    }
  });

  it("column converts to numbers, stringColumn keeps text", () => {
    const t = readTable(FIXTURE);
    const kick = column(t, "kick");
    expect(kick[0]).toBe(0);
    expect(kick[20]).toBe(20);
    expect(stringColumn(t, "kick")[0]).toBe("0");
  });

  it("metaNumber trims stored precision", () => {
    const t = readTable(FIXTURE);
    expect(metaNumber(t, "config.theta")).toBe("6.283");
    expect(metaNumber(t, "config.g")).toBe("1.2");
    expect(metaNumber(t, "config.not_there")).toBe("?");
  });
});
