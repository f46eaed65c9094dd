// Client-side cube handling: a selected cell set may be submitted as a
// group only when it is exactly a subcube, checked by mask closure (the
// span of the selection must have the same size as the selection).

export function spanCube(inputs: string[]): string | null {
  if (inputs.length === 0) {
    return null;
  }
  const n = inputs[0].length;
  const chars = inputs[0].split("");
  for (const input of inputs.slice(1)) {
    if (input.length !== n) {
      return null;
    }
    for (let i = 0; i < n; i++) {
      if (input[i] !== chars[i]) {
        chars[i] = "-";
      }
    }
  }
  return chars.join("");
}

export function cubeSize(cube: string): number {
  let free = 0;
  for (const ch of cube) {
    if (ch === "-") {
      free += 1;
    }
  }
  return 1 << free;
}

export function isSubcube(inputs: string[]): boolean {
  const unique = new Set(inputs);
  if (unique.size !== inputs.length) {
    return false;
  }
  const span = spanCube(inputs);
  return span !== null && cubeSize(span) === inputs.length;
}

export function cubeCovers(cube: string, input: string): boolean {
  if (cube.length !== input.length) {
    return false;
  }
  for (let i = 0; i < cube.length; i++) {
    if (cube[i] !== "-" && cube[i] !== input[i]) {
      return false;
    }
  }
  return true;
}

export function cubeCells(cube: string): string[] {
  const out: string[] = [];
  const free: number[] = [];
  const base = cube.split("");
  for (let i = 0; i < base.length; i++) {
    if (base[i] === "-") {
      free.push(i);
    }
  }
  for (let combo = 0; combo < 1 << free.length; combo++) {
    const cell = [...base];
    for (let j = 0; j < free.length; j++) {
      cell[free[j]] = (combo >> (free.length - 1 - j)) & 1 ? "1" : "0";
    }
    out.push(cell.join(""));
  }
  return out.sort();
}
