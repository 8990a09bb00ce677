"""Figure rendering: barcode plots and cycle overlays, written to files.

Colors are assigned per bar rank (most persistent first) from a fixed
palette, and a bar's overlay reuses its bar color.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from . import serialize
from .builders import GrayImage, cubical_vertex_pixels
from .filtration import Filtration
from .persistence import Barcode

PALETTE = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#17becf", "#e377c2", "#8c564b", "#bcbd22", "#7f7f7f",
]


def bar_color(rank: int) -> str:
    return PALETTE[rank % len(PALETTE)]


def rank_by_persistence(f: Filtration, barcode: Barcode) -> list[int]:
    """Interval indices sorted most persistent first (ties: earlier birth)."""
    keys = []
    for k, iv in enumerate(barcode):
        pers = serialize.persistence_of(f, iv)
        keys.append((-pers, f.value(iv.birth), iv.birth, k))
    keys.sort()
    return [k for *_, k in keys]


def plot_barcode(f: Filtration, barcode: Barcode, path: str | Path,
                 highlight: dict[int, str] | None = None) -> None:
    """Horizontal bar per interval, most persistent on top.

    Infinite bars run to the right edge and end in an arrow marker.
    """
    order = rank_by_persistence(f, barcode)
    fig, ax = plt.subplots(figsize=(7, max(1.5, 0.28 * len(order) + 1)))
    births = [f.value(iv.birth) for iv in barcode]
    deaths = [f.value(iv.death) for iv in barcode if iv.death is not None]
    lo = min(births, default=0.0)
    hi = max(deaths + births, default=1.0)
    span = (hi - lo) or 1.0
    x_inf = hi + 0.12 * span
    for row, k in enumerate(order):
        iv = barcode[k]
        y = len(order) - row
        color = (highlight or {}).get(k) or bar_color(row)
        b = f.value(iv.birth)
        if iv.death is None:
            ax.hlines(y, b, x_inf, color=color, lw=3)
            ax.plot([x_inf], [y], marker=">", color=color, ms=6)
        else:
            ax.hlines(y, b, f.value(iv.death), color=color, lw=3)
    ax.set_xlim(lo - 0.04 * span, x_inf + 0.06 * span)
    ax.set_ylim(0, len(order) + 1)
    ax.set_yticks([])
    ax.set_xlabel("filtration value" if f.values is not None else "filtration index")
    ax.set_title(f"H1 barcode ({len(order)} bars)")
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)


def plot_cycles_points(points: np.ndarray, cycle_records: list[dict],
                       colors: list[str], path: str | Path) -> None:
    """3D scatter with each cycle's edges drawn as colored segments."""
    fig = plt.figure(figsize=(7, 7))
    ax = fig.add_subplot(projection="3d")
    ax.scatter(points[:, 0], points[:, 1], points[:, 2], s=4, c="#b0b0b0", depthshade=False)
    for rec, color in zip(cycle_records, colors):
        for u, v in rec["edges"]:
            seg = points[[u - 1, v - 1]]
            ax.plot(seg[:, 0], seg[:, 1], seg[:, 2], color=color, lw=2)
    ax.set_title(f"{len(cycle_records)} persistent 1-cycles")
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)


def plot_cycles_image(img: GrayImage, f: Filtration, cycle_records: list[dict],
                      colors: list[str], path: str | Path) -> None:
    """Grayscale raster with cycle edges drawn between pixel centers."""
    vertex_ids = [c.id for c in f.cells if c.dim == 0]
    pos = dict(zip(vertex_ids, cubical_vertex_pixels(img)))
    fig, ax = plt.subplots(figsize=(7, 7))
    ax.imshow(img.values, cmap="gray", vmin=0, vmax=255, interpolation="nearest")
    for rec, color in zip(cycle_records, colors):
        for u, v in rec["edges"]:
            (r1, c1), (r2, c2) = pos[u], pos[v]
            ax.plot([c1, c2], [r1, r2], color=color, lw=2)
    ax.set_title(f"{len(cycle_records)} persistent 1-cycles")
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)
