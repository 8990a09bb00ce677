"""Cells, filtrations, chains and intervals.

A filtration is a sequence of cells, one added at a time, such that every
cell is preceded by its boundary faces.  Cell ids are 1-based positions in
that sequence; the empty complex sits at index 0.  Only dimensions 0..2 are
supported: persistent 1-cycles never need anything higher.
"""

from __future__ import annotations

import math
import weakref
from dataclasses import dataclass
from typing import Iterator

INF = math.inf


@dataclass(frozen=True)
class Cell:
    """One vertex, edge or 2-cell of a filtration.

    ``boundary`` lists ids of faces of dimension ``dim - 1``: empty for a
    vertex, the two endpoint vertices for an edge, and the bounding edge
    loop (3 edges for a triangle, 4 for a square) for a 2-cell.  ``weight``
    is only meaningful on edges; it defaults to 1.
    """

    id: int
    dim: int
    boundary: tuple[int, ...] = ()
    weight: float = 1.0


@dataclass(frozen=True)
class Chain:
    """A Z2 chain: a set of cell ids of one dimension.

    Addition is symmetric difference, so every chain is its own inverse.
    """

    dim: int
    cells: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        if not isinstance(self.cells, frozenset):
            object.__setattr__(self, "cells", frozenset(self.cells))

    def __add__(self, other: "Chain") -> "Chain":
        if self.dim != other.dim:
            raise ValueError(f"cannot add chains of dim {self.dim} and {other.dim}")
        return Chain(self.dim, self.cells ^ other.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell_id: int) -> bool:
        return cell_id in self.cells

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.cells))

    def __bool__(self) -> bool:
        return bool(self.cells)

    def ids(self) -> tuple[int, ...]:
        return tuple(sorted(self.cells))


@dataclass(frozen=True)
class Interval:
    """A barcode bar [birth, death); ``death is None`` encodes +infinity."""

    birth: int
    death: int | None = None

    @property
    def finite(self) -> bool:
        return self.death is not None

    def __str__(self) -> str:
        d = "inf" if self.death is None else str(self.death)
        return f"[{self.birth},{d})"

    def contains_index(self, i: int) -> bool:
        return self.birth <= i and (self.death is None or i < self.death)


@dataclass(frozen=True, eq=False)
class Filtration:
    """An immutable filtration: cell i sits at ``cells[i-1]``.

    ``values`` optionally carries a per-cell filtration value (Rips edge
    lengths, image grey levels); index-only filtrations leave it None.
    """

    cells: tuple[Cell, ...]
    values: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.cells, tuple):
            object.__setattr__(self, "cells", tuple(self.cells))
        if self.values is not None and not isinstance(self.values, tuple):
            object.__setattr__(self, "values", tuple(self.values))

    @property
    def m(self) -> int:
        return len(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def cell(self, cell_id: int) -> Cell:
        if not 1 <= cell_id <= len(self.cells):
            raise KeyError(f"no cell with id {cell_id}")
        return self.cells[cell_id - 1]

    def value(self, cell_id: int) -> float:
        """Filtration value of a cell; falls back to its index."""
        if self.values is None:
            return float(cell_id)
        return self.values[cell_id - 1]

    @property
    def dim_counts(self) -> tuple[int, int, int]:
        counts = [0, 0, 0]
        for c in self.cells:
            if 0 <= c.dim <= 2:
                counts[c.dim] += 1
        return tuple(counts)


@dataclass(frozen=True)
class Violation:
    cell_id: int
    message: str

    def __str__(self) -> str:
        return f"cell {self.cell_id}: {self.message}"


def validate_filtration(f: Filtration) -> list[Violation]:
    """Check every structural invariant; an empty list means the filtration is valid.

    Violations are data, not exceptions: callers decide whether to fail.
    """
    out: list[Violation] = []
    m = len(f.cells)
    for idx, c in enumerate(f.cells, start=1):
        if c.id != idx:
            out.append(Violation(idx, f"id {c.id} out of sequence (expected {idx})"))
            continue
        if c.dim not in (0, 1, 2):
            out.append(Violation(idx, f"unsupported dimension {c.dim}"))
            continue
        if not (c.weight >= 0.0 and math.isfinite(c.weight)):
            out.append(Violation(idx, f"weight {c.weight} is not a finite non-negative real"))
        bad_face = False
        for b in c.boundary:
            if not 1 <= b <= m:
                out.append(Violation(idx, f"boundary id {b} out of range"))
                bad_face = True
            elif b >= idx:
                out.append(Violation(idx, f"face after coface at cell {idx} (face {b})"))
                bad_face = True
            elif f.cells[b - 1].dim != c.dim - 1:
                out.append(Violation(idx, f"boundary id {b} has dimension {f.cells[b - 1].dim}, expected {c.dim - 1}"))
                bad_face = True
        if bad_face:
            continue
        if len(set(c.boundary)) != len(c.boundary):
            out.append(Violation(idx, "duplicate boundary faces"))
            continue
        if c.dim == 0:
            if c.boundary:
                out.append(Violation(idx, "vertex with non-empty boundary"))
        elif c.dim == 1:
            if len(c.boundary) != 2:
                out.append(Violation(idx, f"edge with {len(c.boundary)} boundary vertices, expected 2"))
            elif c.boundary[0] == c.boundary[1]:
                out.append(Violation(idx, "edge endpoints are not distinct"))
        else:
            if len(c.boundary) < 3:
                out.append(Violation(idx, f"2-cell with {len(c.boundary)} boundary edges, expected >= 3"))
            else:
                incidence: dict[int, int] = {}
                for e in c.boundary:
                    for v in f.cells[e - 1].boundary:
                        incidence[v] = incidence.get(v, 0) + 1
                if any(k % 2 for k in incidence.values()):
                    out.append(Violation(idx, "open boundary: edge loop does not close"))
    return out


def boundary(f: Filtration, cell_id: int) -> Chain:
    """The Z2 boundary of one cell, as a chain one dimension down."""
    c = f.cell(cell_id)
    return Chain(c.dim - 1, frozenset(c.boundary))


def chain_boundary(f: Filtration, chain: Chain) -> Chain:
    """Boundary of a chain; duplicate faces cancel over Z2."""
    acc: set[int] = set()
    for cid in chain.cells:
        acc ^= set(f.cell(cid).boundary)
    return Chain(chain.dim - 1, frozenset(acc))


def chain_weight(f: Filtration, chain: Chain) -> float:
    return sum(f.cell(cid).weight for cid in chain.cells)


class SkeletonView:
    """Read-only view of the 1-skeleton of a prefix complex K_i.

    Backed by the filtration's full adjacency (built once, cached); the
    view filters by edge id, so constructing one is O(1).
    """

    def __init__(self, f: Filtration, i: int):
        if not 0 <= i <= len(f):
            raise ValueError(f"prefix index {i} out of range 0..{len(f)}")
        self.filtration = f
        self.index = i
        self._adj = _full_adjacency(f)

    def vertices(self) -> list[int]:
        return [c.id for c in self.filtration.cells[: self.index] if c.dim == 0]

    def edges(self) -> list[int]:
        return [c.id for c in self.filtration.cells[: self.index] if c.dim == 1]

    def neighbors(self, v: int) -> Iterator[tuple[int, int, float]]:
        """Yield (neighbor vertex, edge id, weight) for edges with id <= the prefix index."""
        for u, eid, w in self._adj.get(v, ()):
            if eid > self.index:
                break
            yield u, eid, w

    def degree(self, v: int) -> int:
        return sum(1 for _ in self.neighbors(v))


_ADJACENCY_CACHE: "weakref.WeakKeyDictionary[Filtration, dict]" = weakref.WeakKeyDictionary()


def _full_adjacency(f: Filtration) -> dict[int, list[tuple[int, int, float]]]:
    adj = _ADJACENCY_CACHE.get(f)
    if adj is not None:
        return adj
    adj = {}
    for c in f.cells:
        if c.dim == 0:
            adj.setdefault(c.id, [])
        elif c.dim == 1:
            u, v = c.boundary
            adj.setdefault(u, []).append((v, c.id, c.weight))
            adj.setdefault(v, []).append((u, c.id, c.weight))
    # filtration order means each vertex's list is already sorted by edge id
    _ADJACENCY_CACHE[f] = adj
    return adj


def one_skeleton_at(f: Filtration, i: int) -> SkeletonView:
    """Graph view of vertices and edges with id <= i."""
    return SkeletonView(f, i)
