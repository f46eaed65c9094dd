// Page wiring: load a function, then loop select -> try-group -> accept
// until the server reports completion.  A stale-candidate 409 triggers an
// automatic re-try-group of the same cubes.

import { WorkbenchClient } from "./api.js";
import {
  applyState,
  clearSelection,
  clearStaged,
  GridModel,
  newGrid,
  setHints,
  stageSelection,
  toggleCell,
} from "./state.js";
import { ApiError } from "./types.js";
import { renderGrid, renderSidebar, ViewHooks } from "./view.js";

const params = new URLSearchParams(window.location.search);
const client = new WorkbenchClient(params.get("api") ?? "http://127.0.0.1:8000");

let grid: GridModel | null = null;

const gridRoot = document.getElementById("grid")!;
const sidebarRoot = document.getElementById("sidebar")!;
const loadError = document.getElementById("load-error")!;

function redraw(): void {
  if (grid === null) {
    return;
  }
  renderGrid(gridRoot, grid, hooks);
  renderSidebar(sidebarRoot, grid, hooks);
}

function showError(message: string): void {
  if (grid !== null) {
    grid.error = message;
    redraw();
  } else {
    loadError.textContent = message;
  }
}

async function tryGroup(cubes: string[]): Promise<void> {
  if (grid === null) return;
  const data = await client.tryGroup(grid.sessionId, cubes);
  grid.candidates = data.candidates;
  grid.note =
    data.note ??
    (data.candidates.length === 0 ? "no rule applies to this grouping" : null);
  grid.error = null;
  redraw();
}

const hooks: ViewHooks = {
  onCellToggle(input) {
    if (grid === null) return;
    toggleCell(grid, input);
    redraw();
  },
  onStageSelection() {
    if (grid === null) return;
    if (!stageSelection(grid)) {
      grid.note = "selection is not a subcube; pick a power-of-two block";
    }
    redraw();
  },
  onClearGroup() {
    if (grid === null) return;
    clearStaged(grid);
    clearSelection(grid);
    redraw();
  },
  onTryGroup() {
    if (grid === null || grid.stagedCubes.length === 0) return;
    tryGroup(grid.stagedCubes).catch((err) => showError(String(err)));
  },
  onAccept(candidateId) {
    if (grid === null) return;
    const cubes = [...grid.stagedCubes];
    client
      .accept(grid.sessionId, candidateId)
      .then((state) => {
        if (grid === null) return;
        applyState(grid, state);
        clearStaged(grid);
        setHints(grid, []);
        redraw();
      })
      .catch((err) => {
        if (err instanceof ApiError && err.status === 409 && cubes.length > 0) {
          // stale candidate: recompute against the current state
          tryGroup(cubes).catch((inner) => showError(String(inner)));
        } else {
          showError(String(err));
        }
      });
  },
  onUndo() {
    if (grid === null) return;
    client
      .undo(grid.sessionId)
      .then((state) => {
        if (grid === null) return;
        applyState(grid, state);
        grid.candidates = [];
        redraw();
      })
      .catch((err) => showError(String(err)));
  },
  onHint() {
    if (grid === null) return;
    client
      .hint(grid.sessionId)
      .then((data) => {
        if (grid === null) return;
        setHints(grid, data.hints.flatMap((h) => h.cubes));
        grid.note =
          data.hints.length > 0
            ? "hints: " + data.hints.map((h) => h.cubes.join("+")).join("  |  ")
            : "no hint available";
        redraw();
      })
      .catch((err) => showError(String(err)));
  },
};

async function load(body: { benchmark?: string; ppla?: string }): Promise<void> {
  loadError.textContent = "";
  try {
    const payload = await client.createSession(body);
    if (payload.n > 6) {
      throw new Error("the grid renders at most 6 variables");
    }
    grid = newGrid(payload);
    redraw();
  } catch (err) {
    showError(String(err));
  }
}

document.getElementById("load-benchmark")!.addEventListener("click", () => {
  const spec = (document.getElementById("benchmark") as HTMLInputElement).value;
  load({ benchmark: spec });
});

document.getElementById("load-ppla")!.addEventListener("click", () => {
  const text = (document.getElementById("ppla") as HTMLTextAreaElement).value;
  load({ ppla: text });
});
