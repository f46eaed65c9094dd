"""Cost-comparison reporting: delimited table on stdout and in a file, plus
rendered K-map and cost-chart figures.

Each input function is minimized and compared against the per-mode SOP
baselines and the mode-multiplexed composition; no ordering between the
methods is asserted, the table is for inspection.
"""

from __future__ import annotations

import csv
import io
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .benchmarks import gen_benchmark
from .kmap import kmap_layout
from .minimizer import CostReport, baseline_mux, baseline_sop, minimize
from .polyfunc import PolyExpr, PolyFunction, expr_size
from .ppla import parse_ppla

_VALUE_COLORS = {
    "0/0": "#f5f5f5",
    "1/0": "#aec6e8",
    "0/1": "#f8c471",
    "1/1": "#82c99a",
}


def _rows_for(name: str, f: PolyFunction) -> list[dict]:
    methods: list[tuple[str, PolyExpr]] = []
    cover = minimize(f)
    methods.append(("minimize", cover.expr))
    methods.append(("sop_mode1", baseline_sop(f, 1)))
    methods.append(("sop_mode2", baseline_sop(f, 2)))
    methods.append(("mux", baseline_mux(f)))
    rows = []
    for method, expr in methods:
        cost = CostReport.from_expr(expr)
        rows.append(
            {
                "name": name,
                "method": method,
                "literals": cost.literal_count,
                "gates": cost.gate_count,
                "poly_gates": cost.poly_gate_count,
                "depth": cost.depth,
                "size": expr_size(expr),
            }
        )
    return rows


def render_kmap_figure(f: PolyFunction, title: str, path: Path) -> None:
    layout = kmap_layout(f.n)
    n_rows = len(layout.row_labels)
    n_cols = len(layout.col_labels)
    fig, ax = plt.subplots(figsize=(1.0 * n_cols + 1.2, 0.8 * n_rows + 1.2))
    for r in range(n_rows):
        for c in range(n_cols):
            value = str(f.value_at(layout.cell_index(r, c)))
            ax.add_patch(
                plt.Rectangle(
                    (c, n_rows - 1 - r),
                    1,
                    1,
                    facecolor=_VALUE_COLORS[value],
                    edgecolor="black",
                )
            )
            ax.text(c + 0.5, n_rows - 1 - r + 0.5, value, ha="center", va="center")
    ax.set_xlim(0, n_cols)
    ax.set_ylim(0, n_rows)
    ax.set_xticks([c + 0.5 for c in range(n_cols)])
    ax.set_xticklabels(layout.col_labels)
    ax.set_yticks([n_rows - 1 - r + 0.5 for r in range(n_rows)])
    ax.set_yticklabels(layout.row_labels)
    ax.set_xlabel("".join(f"x{v}" for v in layout.col_vars))
    ax.set_ylabel("".join(f"x{v}" for v in layout.row_vars))
    ax.set_title(title)
    ax.set_aspect("equal")
    ax.tick_params(length=0)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_cost_figure(rows: list[dict], path: Path) -> None:
    names = sorted({r["name"] for r in rows})
    methods = ["minimize", "mux"]
    width = 0.35
    fig, ax = plt.subplots(figsize=(1.8 * max(len(names), 2) + 2, 4))
    for mi, method in enumerate(methods):
        values = [
            next(r["size"] for r in rows if r["name"] == name and r["method"] == method)
            for name in names
        ]
        positions = [i + (mi - 0.5) * width for i in range(len(names))]
        ax.bar(positions, values, width, label=method)
    ax.set_xticks(range(len(names)))
    ax.set_xticklabels(names, rotation=15, ha="right")
    ax.set_ylabel("expression nodes")
    ax.set_title("minimize vs mode-multiplexed baseline")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _safe_name(name: str) -> str:
    return "".join(ch if ch.isalnum() else "_" for ch in name)


def run_report(
    specs: list[str],
    ppla_paths: list[str],
    outdir: Path,
    delimiter: str = ",",
) -> list[dict]:
    functions: list[tuple[str, PolyFunction]] = []
    for spec in specs:
        functions.append((spec, gen_benchmark(spec)))
    for path in ppla_paths:
        text = Path(path).read_text()
        functions.append((Path(path).stem, parse_ppla(text).to_function()))
    if not functions:
        raise ValueError("nothing to report: no benchmarks and no input files")

    outdir.mkdir(parents=True, exist_ok=True)
    rows: list[dict] = []
    for name, f in functions:
        rows.extend(_rows_for(name, f))
        if 2 <= f.n <= 6:
            render_kmap_figure(f, name, outdir / f"kmap_{_safe_name(name)}.png")

    fieldnames = ["name", "method", "literals", "gates", "poly_gates", "depth", "size"]
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=fieldnames, delimiter=delimiter)
    writer.writeheader()
    writer.writerows(rows)
    table = buffer.getvalue()
    sys.stdout.write(table)
    ext = "tsv" if delimiter == "\t" else "csv"
    (outdir / f"costs.{ext}").write_text(table)
    render_cost_figure(rows, outdir / "costs.png")
    return rows
