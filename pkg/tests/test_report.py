import numpy as np

from percyc import Filtration, barcode_h1
from percyc.report import bar_color, plot_barcode, rank_by_persistence


def test_rank_by_persistence_infinite_first(square_boundary, triangle):
    assert rank_by_persistence(square_boundary, barcode_h1(square_boundary)) == [0]
    assert rank_by_persistence(triangle, barcode_h1(triangle)) == [0]


def test_rank_prefers_longer_bars():
    from percyc import Cell

    # two independent triangles; fill one immediately, the other much later
    f = Filtration(
        (
            Cell(1, 0), Cell(2, 0), Cell(3, 0), Cell(4, 0), Cell(5, 0), Cell(6, 0),
            Cell(7, 1, (1, 2)), Cell(8, 1, (2, 3)), Cell(9, 1, (1, 3)),
            Cell(10, 1, (4, 5)), Cell(11, 1, (5, 6)), Cell(12, 1, (4, 6)),
            Cell(13, 2, (7, 8, 9)),
        ),
        values=(0, 0, 0, 0, 0, 0, 1, 1, 2, 1, 1, 3, 9),
    )
    bc = barcode_h1(f)
    order = rank_by_persistence(f, bc)
    assert [bc[k].birth for k in order] == [12, 9]  # infinite bar outranks [2,9)


def test_bar_colors_cycle():
    assert bar_color(0) != bar_color(1)
    assert bar_color(0) == bar_color(10)


def test_plot_handles_empty_and_nonempty(tmp_path, triangle):
    empty = Filtration(())
    plot_barcode(empty, barcode_h1(empty), tmp_path / "empty.png")
    plot_barcode(triangle, barcode_h1(triangle), tmp_path / "tri.png")
    assert (tmp_path / "empty.png").stat().st_size > 0
    assert (tmp_path / "tri.png").stat().st_size > 0
