import csv
import io
import math

import pytest

from beattyq.figures import COLUMNS, figure_rows, fmt, rows_to_csv, write_figure
from oracles import dft_numeric


def test_fmt():
    assert fmt(1) == "1"
    assert fmt(-0.0) == "0"
    assert fmt(1 / 3) == "0.333333333333"


def test_fig1_rows():
    rows = figure_rows(1)
    assert [r[0] for r in rows] == list(range(1, 121))
    for j, re, im in rows[::17]:
        z = dft_numeric(24, 121, 0, j)
        assert abs(complex(re, im) - z) < 1e-9


@pytest.mark.parametrize("fig,q_lo,q_hi,j", [(2, 2, 75, 1), (3, 2, 100, 1), (4, 3, 100, 2)])
def test_magnitude_figures(fig, q_lo, q_hi, j):
    rows = figure_rows(fig)
    assert min(r[0] for r in rows) == q_lo and max(r[0] for r in rows) == q_hi
    assert all(math.gcd(p, q) == 1 for q, p, _, _ in rows)
    for q, p, x, v in rows[::97]:
        assert x == p / q
        assert abs(v - abs(dft_numeric(p, q, 0, j))) < 1e-9
    assert all(0 <= r[3] <= r[0] for r in rows)


def test_fig2_density_range():
    assert max(r[2] for r in figure_rows(2)) < 3


def test_fig5_products():
    rows = figure_rows(5)
    row = next(r for r in rows if r[:2] == [7, 3])
    assert row[3] == 6


def test_unknown_figure():
    with pytest.raises(ValueError):
        figure_rows(6)


def test_csv_and_png(tmp_path):
    paths = write_figure(3, tmp_path)
    assert [p.name for p in paths] == ["fig3.csv", "fig3.png"]
    text = paths[0].read_text()
    assert text == rows_to_csv(3, figure_rows(3))
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == COLUMNS[3]
    assert paths[1].read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    assert write_figure(1, tmp_path, plot=False) == [tmp_path / "fig1.csv"]
