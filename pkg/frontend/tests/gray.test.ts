import { describe, expect, it } from "vitest";

import { cellInput, grayCodes, kmapLayout } from "../src/gray.js";

describe("grayCodes", () => {
  it("produces the reflected sequence", () => {
    expect(grayCodes(1)).toEqual(["0", "1"]);
    expect(grayCodes(2)).toEqual(["00", "01", "11", "10"]);
    expect(grayCodes(3)).toEqual(["000", "001", "011", "010", "110", "111", "101", "100"]);
  });

  it("adjacent labels differ in exactly one bit", () => {
    const labels = grayCodes(3);
    for (let i = 0; i + 1 < labels.length; i++) {
      let diff = 0;
      for (let b = 0; b < 3; b++) {
        if (labels[i][b] !== labels[i + 1][b]) diff += 1;
      }
      expect(diff).toBe(1);
    }
  });
});

describe("kmapLayout", () => {
  it("splits four variables evenly", () => {
    const layout = kmapLayout(4);
    expect(layout.rowVars).toEqual([1, 2]);
    expect(layout.colVars).toEqual([3, 4]);
    expect(layout.rowLabels).toEqual(["00", "01", "11", "10"]);
  });

  it("gives odd arities the extra variable to the columns", () => {
    const layout = kmapLayout(5);
    expect(layout.rowVars).toEqual([1, 2]);
    expect(layout.colVars).toEqual([3, 4, 5]);
    expect(layout.rowLabels.length).toBe(4);
    expect(layout.colLabels.length).toBe(8);
  });

  it("rejects out-of-range arities", () => {
    expect(() => kmapLayout(1)).toThrow();
    expect(() => kmapLayout(7)).toThrow();
  });

  it("builds cell inputs row-bits-first", () => {
    const layout = kmapLayout(4);
    expect(cellInput(layout, 2, 1)).toBe("1101"); // row label 11, col label 01
  });
});
