"""ASCII rendering of dual-mode Karnaugh maps.

Rows carry the first floor(n/2) variables and columns the rest, both in
reflected Gray order (00, 01, 11, 10), so adjacent cells differ in one
variable.  Each cell prints its paired value, e.g. `1/0`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyfunc import ArityError, PolyFunction


def gray_codes(bits: int) -> list[str]:
    if bits == 0:
        return [""]
    prev = gray_codes(bits - 1)
    return ["0" + c for c in prev] + ["1" + c for c in reversed(prev)]


@dataclass(frozen=True)
class KmapLayout:
    n: int
    row_vars: tuple[int, ...]
    col_vars: tuple[int, ...]
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]

    def cell_index(self, row: int, col: int) -> int:
        # Row variables are the leading index bits.
        bits = self.row_labels[row] + self.col_labels[col]
        return int(bits, 2)


def kmap_layout(n: int) -> KmapLayout:
    if not 2 <= n <= 6:
        raise ArityError(f"K-map rendering supports arities 2..6, got {n}")
    rows = n // 2
    cols = n - rows
    return KmapLayout(
        n=n,
        row_vars=tuple(range(1, rows + 1)),
        col_vars=tuple(range(rows + 1, n + 1)),
        row_labels=tuple(gray_codes(rows)),
        col_labels=tuple(gray_codes(cols)),
    )


def render_kmap(f: PolyFunction) -> str:
    layout = kmap_layout(f.n)
    row_name = "".join(f"x{v}" for v in layout.row_vars)
    col_name = "".join(f"x{v}" for v in layout.col_vars)
    cell_w = 3  # "a/b"
    margin = len(row_name) + 1 + len(layout.row_labels[0]) + 2

    lines = [" " * margin + col_name]
    lines.append(" " * margin + " ".join(lbl.center(cell_w) for lbl in layout.col_labels))
    for r, rlbl in enumerate(layout.row_labels):
        prefix = row_name if r == 0 else " " * len(row_name)
        cells = " ".join(
            str(f.value_at(layout.cell_index(r, c))) for c in range(len(layout.col_labels))
        )
        lines.append(f"{prefix} {rlbl}  {cells}")
    return "\n".join(line.rstrip() for line in lines) + "\n"
