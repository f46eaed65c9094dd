// Reflected Gray code labels and the map layout convention shared with the
// server: rows take the first floor(n/2) variables, columns the rest.

export function grayCodes(bits: number): string[] {
  if (bits === 0) {
    return [""];
  }
  const prev = grayCodes(bits - 1);
  return [...prev.map((c) => "0" + c), ...[...prev].reverse().map((c) => "1" + c)];
}

export interface GridLayout {
  n: number;
  rowVars: number[];
  colVars: number[];
  rowLabels: string[];
  colLabels: string[];
}

export function kmapLayout(n: number): GridLayout {
  if (n < 2 || n > 6) {
    throw new Error(`map layout supports 2..6 variables, got ${n}`);
  }
  const rows = Math.floor(n / 2);
  const cols = n - rows;
  return {
    n,
    rowVars: Array.from({ length: rows }, (_, i) => i + 1),
    colVars: Array.from({ length: cols }, (_, i) => rows + i + 1),
    rowLabels: grayCodes(rows),
    colLabels: grayCodes(cols),
  };
}

// Assignment bits of the cell at (row, col): row label bits are the leading
// (x1-first) part of the input string.
export function cellInput(layout: GridLayout, row: number, col: number): string {
  return layout.rowLabels[row] + layout.colLabels[col];
}
