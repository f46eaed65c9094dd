import { describe, expect, it } from "vitest";

import { isValidExpr } from "../src/exprCheck.js";

describe("isValidExpr", () => {
  it("accepts server-style expressions", () => {
    for (const text of [
      "x1",
      "~x2 * x3 XOR/OR x1 + ~x4",
      "(x2 * x3 * x4 + x1 * x3 * x4) XOR/OR x1 * x2 * x4",
      "1/1 XOR/XOR ~x1 * ~x2 AND/XOR x1 * x2",
      "0/0",
      "~x1 * x2 AND/OR x1 * ~x2 + x1 AND/XOR x2",
      "x1 NAND/NOR x2",
    ]) {
      expect(isValidExpr(text), text).toBe(true);
    }
  });

  it("rejects malformed strings", () => {
    for (const text of [
      "",
      "x1 +",
      "x1 AND x2",
      "x1 AND/FOO x2",
      "1/2",
      "x1 & x2",
      "(x1 + x2",
      "x1 x2",
    ]) {
      expect(isValidExpr(text), text).toBe(false);
    }
  });
});
