// DOM rendering.  Each map cell is an SVG square split along the diagonal:
// the upper-left triangle shows mode-1 state, the lower-right mode-2, each
// with its own coverage shading, with the a/b text on top.

import {
  cellAt,
  demandSummary,
  describeCandidate,
  GridModel,
  selectionIsCube,
} from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const CELL = 56;

export interface ViewHooks {
  onCellToggle(input: string): void;
  onStageSelection(): void;
  onClearGroup(): void;
  onTryGroup(): void;
  onAccept(candidateId: string): void;
  onUndo(): void;
  onHint(): void;
}

function triangleColor(demanded: boolean, covered: boolean): string {
  if (!demanded) {
    return "#f4f4f4";
  }
  return covered ? "#7fc97f" : "#fddbc7";
}

export function renderGrid(root: HTMLElement, grid: GridModel, hooks: ViewHooks): void {
  root.textContent = "";
  const layout = grid.layout;
  const rows = layout.rowLabels.length;
  const cols = layout.colLabels.length;

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("width", String((cols + 1) * CELL));
  svg.setAttribute("height", String((rows + 1) * CELL));

  const axis = document.createElementNS(SVG_NS, "text");
  axis.setAttribute("x", "4");
  axis.setAttribute("y", "16");
  axis.setAttribute("class", "axis");
  axis.textContent =
    layout.rowVars.map((v) => `x${v}`).join("") +
    " \\ " +
    layout.colVars.map((v) => `x${v}`).join("");
  svg.appendChild(axis);

  for (let c = 0; c < cols; c++) {
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String((c + 1) * CELL + CELL / 2));
    label.setAttribute("y", String(CELL - 8));
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("class", "axis");
    label.textContent = layout.colLabels[c];
    svg.appendChild(label);
  }
  for (let r = 0; r < rows; r++) {
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(CELL - 8));
    label.setAttribute("y", String((r + 1) * CELL + CELL / 2 + 4));
    label.setAttribute("text-anchor", "end");
    label.setAttribute("class", "axis");
    label.textContent = layout.rowLabels[r];
    svg.appendChild(label);
  }

  for (let r = 0; r < rows; r++) {
    for (let c = 0; c < cols; c++) {
      const cell = cellAt(grid, r, c);
      const x = (c + 1) * CELL;
      const y = (r + 1) * CELL;
      const group = document.createElementNS(SVG_NS, "g");
      group.setAttribute("class", "cell");
      group.addEventListener("click", () => hooks.onCellToggle(cell.input));

      const upper = document.createElementNS(SVG_NS, "polygon");
      upper.setAttribute("points", `${x},${y} ${x + CELL},${y} ${x},${y + CELL}`);
      upper.setAttribute("fill", triangleColor(cell.mode1 === 1, cell.covered1));
      group.appendChild(upper);

      const lower = document.createElementNS(SVG_NS, "polygon");
      lower.setAttribute(
        "points",
        `${x + CELL},${y} ${x + CELL},${y + CELL} ${x},${y + CELL}`,
      );
      lower.setAttribute("fill", triangleColor(cell.mode2 === 1, cell.covered2));
      group.appendChild(lower);

      const frame = document.createElementNS(SVG_NS, "rect");
      frame.setAttribute("x", String(x));
      frame.setAttribute("y", String(y));
      frame.setAttribute("width", String(CELL));
      frame.setAttribute("height", String(CELL));
      frame.setAttribute("fill", "none");
      let cls = "frame";
      if (cell.selected) cls += " selected";
      if (cell.grouped) cls += " grouped";
      if (cell.hinted) cls += " hinted";
      frame.setAttribute("class", cls);
      group.appendChild(frame);

      const text = document.createElementNS(SVG_NS, "text");
      text.setAttribute("x", String(x + CELL / 2));
      text.setAttribute("y", String(y + CELL / 2 + 4));
      text.setAttribute("text-anchor", "middle");
      text.setAttribute("class", "value");
      text.textContent = cell.value;
      group.appendChild(text);

      svg.appendChild(group);
    }
  }
  root.appendChild(svg);
}

export function renderSidebar(root: HTMLElement, grid: GridModel, hooks: ViewHooks): void {
  root.textContent = "";

  if (grid.complete) {
    const banner = el("div", "banner", "Complete: the accepted sum reproduces the table in both modes (server verified).");
    root.appendChild(banner);
  }
  if (grid.error) {
    root.appendChild(el("div", "error", grid.error));
  }
  if (grid.note) {
    root.appendChild(el("div", "note", grid.note));
  }

  const { covered, total } = demandSummary(grid);
  root.appendChild(el("div", "progress", `coverage ${covered}/${total}`));

  const controls = el("div", "controls");
  controls.appendChild(
    button("Stage selected cells as cube", hooks.onStageSelection, !selectionReady(grid)),
  );
  controls.appendChild(
    button(`Try group (${grid.stagedCubes.length} cube${grid.stagedCubes.length === 1 ? "" : "s"})`,
      hooks.onTryGroup, grid.stagedCubes.length === 0),
  );
  controls.appendChild(button("Clear group", hooks.onClearGroup, grid.stagedCubes.length === 0));
  controls.appendChild(button("Undo", hooks.onUndo, grid.accepted.length === 0));
  controls.appendChild(button("Hint", hooks.onHint, false));
  root.appendChild(controls);

  if (grid.stagedCubes.length > 0) {
    root.appendChild(el("div", "staged", "staged: " + grid.stagedCubes.join("  ")));
  }

  if (grid.candidates.length > 0) {
    const list = el("div", "candidates");
    list.appendChild(el("h3", "", "Applicable rules"));
    for (const cand of grid.candidates) {
      const row = el("div", "candidate");
      row.appendChild(el("span", "", describeCandidate(cand)));
      if (cand.id) {
        row.appendChild(button("accept", () => hooks.onAccept(cand.id!), false));
      }
      list.appendChild(row);
    }
    root.appendChild(list);
  }

  const exprBox = el("div", "expr");
  exprBox.appendChild(el("h3", "", "Expression so far"));
  exprBox.appendChild(el("code", "", grid.expr || "(empty)"));
  root.appendChild(exprBox);

  if (grid.accepted.length > 0) {
    const acc = el("div", "accepted");
    acc.appendChild(el("h3", "", "Accepted terms"));
    for (const term of grid.accepted) {
      acc.appendChild(el("div", "", describeCandidate(term)));
    }
    root.appendChild(acc);
  }
}

function selectionReady(grid: GridModel): boolean {
  // mirrors the submit-enablement invariant: only exact subcubes stage
  return selectionIsCube(grid);
}

function el(tag: string, cls: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (cls) node.setAttribute("class", cls);
  if (text !== undefined) node.textContent = text;
  return node;
}

function button(label: string, onClick: () => void, disabled: boolean): HTMLButtonElement {
  const b = document.createElement("button");
  b.textContent = label;
  b.disabled = disabled;
  b.addEventListener("click", onClick);
  return b;
}
