"""Figure data (rows) and their matplotlib renderings.

Every figure is first a list of rows; the CSV is the primary artefact and the
PNG is drawn from exactly those rows.
"""

from __future__ import annotations

import csv
import io
import math
from pathlib import Path

from .beatty import BeattyParams, ft_magnitude, transform_numeric
from .modarith import nicf, nicf_product

FIGURES = (1, 2, 3, 4, 5)

COLUMNS = {
    1: ["j", "re", "im"],
    2: ["q", "p", "x", "abs"],
    3: ["q", "p", "x", "abs"],
    4: ["q", "p", "x", "abs"],
    5: ["q", "p", "x", "nicf_product"],
}


def fmt(x) -> str:
    """12 significant digits for floats, plain ints otherwise."""
    if isinstance(x, float):
        s = f"{x:.12g}"
        return "0" if s == "-0" else s
    return str(x)


def _coprime_pairs(q_lo: int, q_hi: int, p_hi_factor: int = 1):
    for q in range(q_lo, q_hi + 1):
        for p in range(1, p_hi_factor * q):
            if math.gcd(p, q) == 1:
                yield q, p


def figure_rows(fig: int) -> list[list]:
    if fig == 1:
        b = BeattyParams(24, 121, 0)
        rows = []
        for j in range(1, 121):
            z = transform_numeric(b, j)
            rows.append([j, z.real, z.imag])
        return rows
    if fig == 2:
        return [[q, p, p / q, ft_magnitude(BeattyParams(p, q), 1)]
                for q, p in _coprime_pairs(2, 75, 3)]
    if fig == 3:
        return [[q, p, p / q, ft_magnitude(BeattyParams(p, q), 1)]
                for q, p in _coprime_pairs(2, 100)]
    if fig == 4:
        return [[q, p, p / q, ft_magnitude(BeattyParams(p, q), 2)]
                for q, p in _coprime_pairs(3, 100)]
    if fig == 5:
        return [[q, p, p / q, nicf_product(nicf(p, q))]
                for q, p in _coprime_pairs(2, 100)]
    raise ValueError(f"unknown figure {fig}; expected one of {FIGURES}")


def rows_to_csv(fig: int, rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS[fig])
    for row in rows:
        w.writerow([fmt(x) for x in row])
    return buf.getvalue()


def render(fig: int, rows: list[list], path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    if fig == 1:
        f, (top, bottom) = plt.subplots(2, 1, figsize=(4, 8))
        for ax, subset in ((top, rows), (bottom, _closest_to_one(rows, 30))):
            ax.scatter([r[1] for r in subset], [r[2] for r in subset], s=6, color="k")
            for j, re, im in subset:
                ax.annotate(str(j), (re, im), fontsize=5, xytext=(2, 2), textcoords="offset points")
            ax.set_aspect("equal", adjustable="datalim")
            ax.axhline(0, lw=0.3, color="0.6")
            ax.axvline(0, lw=0.3, color="0.6")
        top.set_title("B(24,121) transform, 1 <= j <= 120", fontsize=8)
    else:
        f, ax = plt.subplots(figsize=(7.5, 2.5))
        ax.scatter([r[2] for r in rows], [r[3] for r in rows], s=0.8, color="k", linewidths=0)
        ax.set_xlabel("p/q")
        ax.set_ylabel({2: "|B(1)|", 3: "|B(1)|", 4: "|B(2)|", 5: "prod |a_i|"}[fig])
        if fig == 5:
            ax.set_yscale("log")
    f.tight_layout()
    f.savefig(path, dpi=200)
    plt.close(f)


def _closest_to_one(rows, k):
    return sorted(rows, key=lambda r: abs(complex(r[1], r[2]) - 1))[:k]


def write_figure(fig: int, out_dir: Path, plot: bool = True) -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = figure_rows(fig)
    csv_path = out_dir / f"fig{fig}.csv"
    csv_path.write_text(rows_to_csv(fig, rows))
    paths = [csv_path]
    if plot:
        png = out_dir / f"fig{fig}.png"
        render(fig, rows, png)
        paths.append(png)
    return paths
