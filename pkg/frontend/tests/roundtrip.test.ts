// End-to-end round trip against the real server: create a parity4/majority4
// session, drive the manual grouping flow until the server reports complete,
// then check that undo restores the previous demand set exactly.

import { ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { WorkbenchClient } from "../src/api.js";
import { isValidExpr } from "../src/exprCheck.js";
import { ApiError, DemandCell } from "../src/types.js";

const PORT = 8931;
let server: ChildProcess;
const client = new WorkbenchClient(`http://127.0.0.1:${PORT}`);

function demandKey(demand: DemandCell[]): string[] {
  return demand.map((d) => `${d.input}:${d.mode}`).sort();
}

beforeAll(async () => {
  server = spawn("python3", ["-m", "polymin", "serve", "--port", String(PORT)], {
    stdio: "ignore",
  });
  const deadline = Date.now() + 30_000;
  for (;;) {
    try {
      await client.health();
      return;
    } catch {
      if (Date.now() > deadline) {
        throw new Error("workbench server did not come up");
      }
      await new Promise((resolve) => setTimeout(resolve, 250));
    }
  }
}, 40_000);

afterAll(() => {
  server?.kill();
});

describe("manual simplification round trip", () => {
  it("completes parity4/majority4 and undoes exactly", async () => {
    const session = await client.createSession({ benchmark: "parity4/majority4" });
    expect(session.n).toBe(4);
    expect(session.complete).toBe(false);
    expect(session.cells).toHaveLength(16);
    expect(session.kmap?.row_labels).toEqual(["00", "01", "11", "10"]);

    const groupings = [
      ["-111", "1-11", "11-1"],
      ["1110"],
      ["0001", "0010", "1110"],
      ["0100", "1000"],
    ];
    let demandBeforeLast: string[] = demandKey(session.demand_remaining);
    let complete = false;
    for (const cubes of groupings) {
      const tried = await client.tryGroup(session.session_id, cubes);
      expect(tried.candidates.length).toBeGreaterThan(0);
      for (const cand of tried.candidates) {
        expect(isValidExpr(cand.expr), cand.expr).toBe(true);
      }
      const best = tried.candidates.reduce((a, b) =>
        (b.newly_covered ?? 0) > (a.newly_covered ?? 0) ? b : a,
      );
      const state = await client.accept(session.session_id, best.id!);
      expect(isValidExpr(state.expr)).toBe(true);
      if (cubes !== groupings[groupings.length - 1]) {
        demandBeforeLast = demandKey(state.demand_remaining);
      }
      complete = state.complete;
    }
    expect(complete).toBe(true);

    const undone = await client.undo(session.session_id);
    expect(undone.complete).toBe(false);
    expect(demandKey(undone.demand_remaining)).toEqual(demandBeforeLast);
  }, 30_000);

  it("rejects stale candidates with 409 so the client can re-try-group", async () => {
    const session = await client.createSession({ benchmark: "parity4/majority4" });
    const first = await client.tryGroup(session.session_id, ["-111", "1-11"]);
    const staleId = first.candidates[0].id!;
    await client.tryGroup(session.session_id, ["11-1", "111-"]);
    let status = 0;
    try {
      await client.accept(session.session_id, staleId);
    } catch (err) {
      if (err instanceof ApiError) {
        status = err.status;
      }
    }
    expect(status).toBe(409);
    // automatic recovery path: re-running try-group yields fresh ids
    const retried = await client.tryGroup(session.session_id, ["-111", "1-11"]);
    expect(retried.candidates.length).toBeGreaterThan(0);
    const state = await client.accept(session.session_id, retried.candidates[0].id!);
    expect(state.demand_remaining.length).toBeLessThan(13);
  }, 30_000);

  it("serves sound hints that map onto the grid", async () => {
    const session = await client.createSession({ benchmark: "parity4/majority4" });
    const hints = await client.hint(session.session_id);
    expect(hints.hints).toHaveLength(3);
    for (const hint of hints.hints) {
      expect(hint.newly_covered ?? 0).toBeGreaterThan(0);
      for (const cube of hint.cubes) {
        expect(cube).toMatch(/^[01-]{4}$/);
      }
    }
  }, 30_000);
});
