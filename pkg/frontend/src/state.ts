// Grid model: everything the view renders, kept apart from the DOM so the
// transition logic is unit-testable.

import { cubeCells, isSubcube, spanCube } from "./cubes.js";
import { GridLayout, kmapLayout } from "./gray.js";
import { isValidExpr } from "./exprCheck.js";
import {
  CandidatePayload,
  CellPayload,
  DemandCell,
  Mode,
  SessionPayload,
  SessionState,
} from "./types.js";

export interface CellModel {
  input: string;
  mode1: 0 | 1;
  mode2: 0 | 1;
  value: string;
  covered1: boolean; // demanded in mode 1 and already covered
  covered2: boolean;
  selected: boolean;
  grouped: boolean; // member of a staged cube
  hinted: boolean;
}

export interface GridModel {
  sessionId: string;
  n: number;
  layout: GridLayout;
  cells: Map<string, CellModel>;
  selection: Set<string>;
  stagedCubes: string[];
  candidates: CandidatePayload[];
  accepted: CandidatePayload[];
  expr: string;
  complete: boolean;
  note: string | null;
  error: string | null;
  hintedCubes: string[];
}

export function newGrid(payload: SessionPayload): GridModel {
  const layout = kmapLayout(payload.n);
  const cells = new Map<string, CellModel>();
  for (const cell of payload.cells) {
    const [m1, m2] = cell.value.split("/").map((b) => Number(b) as 0 | 1);
    cells.set(cell.input, {
      input: cell.input,
      mode1: m1,
      mode2: m2,
      value: cell.value,
      covered1: false,
      covered2: false,
      selected: false,
      grouped: false,
      hinted: false,
    });
  }
  const grid: GridModel = {
    sessionId: payload.session_id,
    n: payload.n,
    layout,
    cells,
    selection: new Set(),
    stagedCubes: [],
    candidates: [],
    accepted: [],
    expr: "",
    complete: false,
    note: null,
    error: null,
    hintedCubes: [],
  };
  applyState(grid, payload);
  return grid;
}

// Coverage shading: a demanded (cell, mode) is covered when it no longer
// appears in the server's remaining-demand list.
export function applyState(grid: GridModel, state: SessionState): void {
  const remaining = new Set(state.demand_remaining.map((d) => `${d.input}:${d.mode}`));
  for (const cell of grid.cells.values()) {
    cell.covered1 = cell.mode1 === 1 && !remaining.has(`${cell.input}:1`);
    cell.covered2 = cell.mode2 === 1 && !remaining.has(`${cell.input}:2`);
  }
  grid.accepted = state.accepted_terms;
  grid.expr = isValidExpr(state.expr) ? state.expr : "";
  if (!isValidExpr(state.expr)) {
    grid.error = "server sent an unparsable expression";
  }
  // never trust local bookkeeping for the banner
  grid.complete = state.complete === true;
}

export function toggleCell(grid: GridModel, input: string): void {
  if (grid.selection.has(input)) {
    grid.selection.delete(input);
  } else {
    grid.selection.add(input);
  }
  grid.cells.get(input)!.selected = grid.selection.has(input);
}

export function selectionIsCube(grid: GridModel): boolean {
  return grid.selection.size > 0 && isSubcube([...grid.selection]);
}

export function selectionCube(grid: GridModel): string | null {
  return selectionIsCube(grid) ? spanCube([...grid.selection]) : null;
}

// Staging a cube clears the selection; up to three cubes form a group.
export function stageSelection(grid: GridModel): boolean {
  const cube = selectionCube(grid);
  if (cube === null || grid.stagedCubes.length >= 3 || grid.stagedCubes.includes(cube)) {
    return false;
  }
  grid.stagedCubes.push(cube);
  clearSelection(grid);
  refreshGroupShading(grid);
  return true;
}

export function clearSelection(grid: GridModel): void {
  grid.selection.clear();
  for (const cell of grid.cells.values()) {
    cell.selected = false;
  }
}

export function clearStaged(grid: GridModel): void {
  grid.stagedCubes = [];
  grid.candidates = [];
  grid.note = null;
  refreshGroupShading(grid);
}

export function setHints(grid: GridModel, cubes: string[]): void {
  grid.hintedCubes = cubes;
  for (const cell of grid.cells.values()) {
    cell.hinted = cubes.some((cube) => cubeCells(cube).includes(cell.input));
  }
}

function refreshGroupShading(grid: GridModel): void {
  const grouped = new Set<string>();
  for (const cube of grid.stagedCubes) {
    for (const input of cubeCells(cube)) {
      grouped.add(input);
    }
  }
  for (const cell of grid.cells.values()) {
    cell.grouped = grouped.has(cell.input);
  }
}

export function demandSummary(grid: GridModel): { covered: number; total: number } {
  let covered = 0;
  let total = 0;
  for (const cell of grid.cells.values()) {
    total += cell.mode1 + cell.mode2;
    covered += (cell.covered1 ? 1 : 0) + (cell.covered2 ? 1 : 0);
  }
  return { covered, total };
}

export function cellAt(grid: GridModel, row: number, col: number): CellModel {
  const input = grid.layout.rowLabels[row] + grid.layout.colLabels[col];
  return grid.cells.get(input)!;
}

export function describeCandidate(c: CandidatePayload): string {
  const gates = c.gates.length > 0 ? ` via ${c.gates.join(", ")}` : "";
  const score = c.newly_covered !== undefined ? ` (+${c.newly_covered})` : "";
  return `[${c.rule}] ${c.shape}${gates}: ${c.expr}${score}`;
}

export type { CandidatePayload, CellPayload, DemandCell, Mode };
