"""Shared fixtures: small hand-built filtrations and seeded random corpora."""

from __future__ import annotations

import numpy as np
import pytest

from percyc import (
    Cell,
    Filtration,
    PointCloud,
    build_rips,
)
from percyc.builders import euclidean_threshold_for_percentile


def make_triangle() -> Filtration:
    """3 vertices, 3 edges, 1 triangle; single bar [6, 7)."""
    return Filtration((
        Cell(1, 0), Cell(2, 0), Cell(3, 0),
        Cell(4, 1, (1, 2)), Cell(5, 1, (2, 3)), Cell(6, 1, (1, 3)),
        Cell(7, 2, (4, 5, 6)),
    ))


def make_square_boundary() -> Filtration:
    """4 vertices, 4 edges, no 2-cells; single essential bar [8, inf)."""
    return Filtration((
        Cell(1, 0), Cell(2, 0), Cell(3, 0), Cell(4, 0),
        Cell(5, 1, (1, 2)), Cell(6, 1, (2, 3)), Cell(7, 1, (3, 4)), Cell(8, 1, (1, 4)),
    ))


def make_theta() -> Filtration:
    """Two junction vertices joined by three paths of weights 1, 2 and 3."""
    return Filtration((
        Cell(1, 0), Cell(2, 0), Cell(3, 0), Cell(4, 0),
        Cell(5, 1, (1, 2), 1.0),
        Cell(6, 1, (1, 3), 1.0), Cell(7, 1, (2, 3), 1.0),
        Cell(8, 1, (1, 4), 1.5), Cell(9, 1, (2, 4), 1.5),
    ))


def make_wedge() -> Filtration:
    """Two triangles sharing vertex 1; a hexagonal 2-cell fills their sum.

    The killer's class decomposes only as both shortest cycles together,
    so its persistent cycle has |G| = 2.
    """
    return Filtration((
        Cell(1, 0), Cell(2, 0), Cell(3, 0), Cell(4, 0), Cell(5, 0),
        Cell(6, 1, (1, 2)), Cell(7, 1, (1, 3)), Cell(8, 1, (1, 4)), Cell(9, 1, (1, 5)),
        Cell(10, 1, (2, 3)), Cell(11, 1, (4, 5)),
        Cell(12, 2, (6, 7, 8, 9, 10, 11)),
    ))


def make_annulus() -> Filtration:
    """Two concentric triangle rings, fully triangulated; the hole survives."""
    return Filtration((
        Cell(1, 0), Cell(2, 0), Cell(3, 0), Cell(4, 0), Cell(5, 0), Cell(6, 0),
        Cell(7, 1, (1, 2)), Cell(8, 1, (2, 3)), Cell(9, 1, (1, 3)),
        Cell(10, 1, (4, 5)), Cell(11, 1, (5, 6)), Cell(12, 1, (4, 6)),
        Cell(13, 1, (1, 4)), Cell(14, 1, (2, 5)), Cell(15, 1, (3, 6)),
        Cell(16, 1, (1, 5)), Cell(17, 1, (2, 6)), Cell(18, 1, (3, 4)),
        Cell(19, 2, (7, 14, 16)),
        Cell(20, 2, (10, 13, 16)),
        Cell(21, 2, (8, 15, 17)),
        Cell(22, 2, (11, 14, 17)),
        Cell(23, 2, (9, 13, 18)),
        Cell(24, 2, (12, 15, 18)),
    ))


@pytest.fixture
def triangle() -> Filtration:
    return make_triangle()


@pytest.fixture
def square_boundary() -> Filtration:
    return make_square_boundary()


@pytest.fixture
def theta() -> Filtration:
    return make_theta()


@pytest.fixture
def wedge() -> Filtration:
    return make_wedge()


@pytest.fixture
def annulus() -> Filtration:
    return make_annulus()


def random_rips(seed: int, n_lo: int = 12, n_hi: int = 20, max_cells: int = 400) -> Filtration:
    """Seeded Rips filtration with threshold spanning sparse to dense."""
    rng = np.random.default_rng(seed)
    n = int(rng.integers(n_lo, n_hi + 1))
    pts = PointCloud(rng.uniform(0.0, 1.0, size=(n, 3)))
    pct = float(rng.uniform(15.0, 90.0))
    while True:
        t = euclidean_threshold_for_percentile(pts, pct)
        f = build_rips(pts, t)
        if len(f) <= max_cells or pct <= 5.0:
            return f
        pct *= 0.8


def random_small_rips(seed: int, max_edges: int = 25) -> Filtration:
    """Seeded small Rips instance within the brute-force oracle's reach."""
    rng = np.random.default_rng(seed)
    n = int(rng.integers(5, 9))
    dim = int(rng.integers(2, 4))
    coords = rng.uniform(0.0, 1.0, size=(n, 3))
    if dim == 2:
        coords[:, 2] = 0.0
    pts = PointCloud(coords)
    pct = float(rng.uniform(40.0, 95.0))
    while True:
        t = euclidean_threshold_for_percentile(pts, pct)
        f = build_rips(pts, t)
        if f.dim_counts[1] <= max_edges or pct <= 5.0:
            return f
        pct *= 0.8
