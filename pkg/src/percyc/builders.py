"""Filtration builders: Rips from point clouds, lower-star from images,
and the explicit filtration / point / PGM file formats."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .filtration import Cell, Filtration


class ParseError(ValueError):
    """Input file rejected; carries the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass(frozen=True)
class PointCloud:
    points: np.ndarray  # (n, 3) float64

    def __post_init__(self) -> None:
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 3:
            raise ValueError(f"expected an (n, 3) array, got shape {pts.shape}")
        if pts.shape[0] < 1:
            raise ValueError("point cloud is empty")
        if not np.all(np.isfinite(pts)):
            raise ValueError("point cloud contains non-finite coordinates")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return self.points.shape[0]


@dataclass(frozen=True)
class GrayImage:
    width: int
    height: int
    values: np.ndarray  # (height, width) uint8, row-major

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ValueError("image dimensions must be positive")
        vals = np.asarray(self.values)
        if vals.size != self.width * self.height:
            raise ValueError(f"expected {self.width * self.height} pixel values, got {vals.size}")
        vals = vals.reshape(self.height, self.width)
        if vals.min() < 0 or vals.max() > 255:
            raise ValueError("pixel values must lie in [0, 255]")
        object.__setattr__(self, "values", vals.astype(np.uint8))

    def pixel(self, row: int, col: int) -> int:
        return int(self.values[row, col])


def build_rips(pc: PointCloud, threshold: float) -> Filtration:
    """Rips filtration up to dimension 2.

    All vertices enter at value 0; an edge enters at its Euclidean length
    when that is <= threshold; a triangle enters at its longest edge.
    Ties break by (dimension, lexicographic vertex ids) so the output is
    reproducible across runs.
    """
    if not (threshold >= 0.0):
        raise ValueError(f"threshold must be non-negative, got {threshold}")
    pts = pc.points
    n = pc.n
    diff = pts[:, None, :] - pts[None, :, :]
    dist = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
    adj = dist <= threshold
    np.fill_diagonal(adj, False)

    iu, ju = np.triu_indices(n, k=1)
    keep = adj[iu, ju]
    edge_pairs = list(zip(iu[keep].tolist(), ju[keep].tolist()))
    edge_len = {
        (i, j): float(dist[i, j]) for i, j in edge_pairs
    }

    triangles: list[tuple[int, int, int]] = []
    for i, j in edge_pairs:
        common = np.nonzero(adj[i] & adj[j])[0]
        for k in common[common > j].tolist():
            triangles.append((i, j, k))

    entries: list[tuple[float, int, tuple[int, ...]]] = []
    for i, j in edge_pairs:
        entries.append((edge_len[(i, j)], 1, (i, j)))
    for i, j, k in triangles:
        v = max(edge_len[(i, j)], edge_len[(i, k)], edge_len[(j, k)])
        entries.append((v, 2, (i, j, k)))
    entries.sort()

    cells: list[Cell] = []
    values: list[float] = []
    for i in range(n):
        cells.append(Cell(id=i + 1, dim=0))
        values.append(0.0)
    edge_cell: dict[tuple[int, int], int] = {}
    next_id = n + 1
    for value, dim, verts in entries:
        if dim == 1:
            i, j = verts
            cells.append(Cell(id=next_id, dim=1, boundary=(i + 1, j + 1), weight=value))
            edge_cell[(i, j)] = next_id
        else:
            i, j, k = verts
            eids = sorted((edge_cell[(i, j)], edge_cell[(i, k)], edge_cell[(j, k)]))
            cells.append(Cell(id=next_id, dim=2, boundary=tuple(eids)))
        values.append(value)
        next_id += 1
    return Filtration(tuple(cells), tuple(values))


def build_lower_star_cubical(img: GrayImage) -> Filtration:
    """Lower-star filtration of the pixel grid.

    One vertex per pixel, 4-neighbour edges, and a square per 2x2 block;
    every cell enters at the max value over its pixels.  Order within a
    level is by dimension, then raster position of the cell's top-left
    anchor (horizontal edge before vertical at the same anchor).  Edges
    all weigh 1: cubical cycle length is counted in edges.
    """
    w, h = img.width, img.height
    vals = img.values

    # entry: (value, dim, anchor raster index, orientation tag)
    entries: list[tuple[int, int, int, int]] = []
    for r in range(h):
        for c in range(w):
            entries.append((int(vals[r, c]), 0, r * w + c, 0))
    for r in range(h):
        for c in range(w - 1):
            entries.append((max(int(vals[r, c]), int(vals[r, c + 1])), 1, r * w + c, 0))
    for r in range(h - 1):
        for c in range(w):
            entries.append((max(int(vals[r, c]), int(vals[r + 1, c])), 1, r * w + c, 1))
    for r in range(h - 1):
        for c in range(w - 1):
            v = max(int(vals[r, c]), int(vals[r, c + 1]), int(vals[r + 1, c]), int(vals[r + 1, c + 1]))
            entries.append((v, 2, r * w + c, 0))
    entries.sort()

    vertex_cell: dict[int, int] = {}
    hedge_cell: dict[int, int] = {}
    vedge_cell: dict[int, int] = {}
    cells: list[Cell] = []
    values: list[float] = []
    for value, dim, anchor, orient in entries:
        cid = len(cells) + 1
        if dim == 0:
            vertex_cell[anchor] = cid
            cells.append(Cell(id=cid, dim=0))
        elif dim == 1:
            if orient == 0:
                u, v = vertex_cell[anchor], vertex_cell[anchor + 1]
                hedge_cell[anchor] = cid
            else:
                u, v = vertex_cell[anchor], vertex_cell[anchor + w]
                vedge_cell[anchor] = cid
            cells.append(Cell(id=cid, dim=1, boundary=(u, v), weight=1.0))
        else:
            eids = (
                hedge_cell[anchor],
                hedge_cell[anchor + w],
                vedge_cell[anchor],
                vedge_cell[anchor + 1],
            )
            cells.append(Cell(id=cid, dim=2, boundary=tuple(sorted(eids))))
        values.append(float(value))
    return Filtration(tuple(cells), tuple(values))


def cubical_vertex_pixels(img: GrayImage) -> list[tuple[int, int]]:
    """(row, col) of each vertex cell, in cell-id order.

    Mirrors the sort used by build_lower_star_cubical, so entry k matches
    the k-th dimension-0 cell of the built filtration.
    """
    w, h = img.width, img.height
    order = sorted(
        ((int(img.values[r, c]), r * w + c) for r in range(h) for c in range(w))
    )
    return [(anchor // w, anchor % w) for _, anchor in order]


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_filtration_file(text: str) -> Filtration:
    """Explicit filtration format: one cell per line.

    ``v`` | ``e <vid> <vid> [weight]`` | ``f <eid> <eid> <eid> [<eid>]``;
    ids refer to earlier lines, counting cell lines from 1.  ``#`` starts
    a comment.  Raises ParseError on bad syntax or a malformed complex.
    """
    cells: list[Cell] = []
    line_of_cell: list[int] = []
    for lineno, line in _content_lines(text):
        parts = line.split()
        kind = parts[0]
        cid = len(cells) + 1
        try:
            if kind == "v":
                if len(parts) != 1:
                    raise ValueError("vertex line takes no arguments")
                cells.append(Cell(id=cid, dim=0))
            elif kind == "e":
                if len(parts) not in (3, 4):
                    raise ValueError("edge line needs 2 vertex ids and an optional weight")
                u, v = int(parts[1]), int(parts[2])
                weight = float(parts[3]) if len(parts) == 4 else 1.0
                cells.append(Cell(id=cid, dim=1, boundary=(u, v), weight=weight))
            elif kind == "f":
                if len(parts) not in (4, 5):
                    raise ValueError("2-cell line needs 3 or 4 edge ids")
                eids = tuple(int(p) for p in parts[1:])
                cells.append(Cell(id=cid, dim=2, boundary=eids))
            else:
                raise ValueError(f"unknown cell kind {kind!r}")
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
        line_of_cell.append(lineno)

    from .filtration import validate_filtration

    f = Filtration(tuple(cells))
    violations = validate_filtration(f)
    if violations:
        v = violations[0]
        raise ParseError(line_of_cell[v.cell_id - 1], f"cell {v.cell_id}: {v.message}")
    return f


def parse_points(text: str) -> PointCloud:
    """Point file: one ``x y z`` triple per line, ``#`` comments allowed."""
    rows: list[tuple[float, float, float]] = []
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(lineno, f"expected 3 coordinates, got {len(parts)}")
        try:
            rows.append(tuple(float(p) for p in parts))
        except ValueError:
            raise ParseError(lineno, f"bad coordinate in {line!r}") from None
    if not rows:
        raise ParseError(1, "point file is empty")
    return PointCloud(np.array(rows, dtype=float))


def parse_pgm(text: str) -> GrayImage:
    """Plain (P2) PGM, 8-bit."""
    tokens: list[str] = []
    token_line: list[int] = []
    for lineno, line in _content_lines(text):
        for tok in line.split():
            tokens.append(tok)
            token_line.append(lineno)
    if not tokens:
        raise ParseError(1, "empty PGM")
    if tokens[0] != "P2":
        raise ParseError(token_line[0], f"expected magic 'P2', got {tokens[0]!r}")
    if len(tokens) < 4:
        raise ParseError(token_line[-1], "truncated PGM header")
    try:
        w, h, maxval = int(tokens[1]), int(tokens[2]), int(tokens[3])
    except ValueError:
        raise ParseError(token_line[1], "bad PGM header") from None
    if w < 1 or h < 1:
        raise ParseError(token_line[1], f"bad dimensions {w}x{h}")
    if not 0 < maxval <= 255:
        raise ParseError(token_line[3], f"maxval {maxval} unsupported (8-bit only)")
    data = tokens[4:]
    if len(data) != w * h:
        raise ParseError(token_line[-1], f"expected {w * h} pixels, got {len(data)}")
    try:
        pixels = [int(t) for t in data]
    except ValueError:
        raise ParseError(token_line[-1], "non-integer pixel value") from None
    if any(p < 0 or p > maxval for p in pixels):
        raise ParseError(token_line[-1], "pixel value out of range")
    return GrayImage(width=w, height=h, values=np.array(pixels, dtype=np.uint8).reshape(h, w))


def write_pgm(img: GrayImage) -> str:
    lines = ["P2", f"{img.width} {img.height}", "255"]
    for r in range(img.height):
        lines.append(" ".join(str(int(v)) for v in img.values[r]))
    return "\n".join(lines) + "\n"


def euclidean_threshold_for_percentile(pc: PointCloud, pct: float) -> float:
    """Distance percentile helper, handy for choosing Rips thresholds."""
    pts = pc.points
    diff = pts[:, None, :] - pts[None, :, :]
    dist = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
    iu, ju = np.triu_indices(pc.n, k=1)
    if iu.size == 0:
        return 0.0
    return float(np.percentile(dist[iu, ju], pct))
