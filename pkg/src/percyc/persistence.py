"""H1 persistence pairing, barcodes, and homology-coordinate queries.

The pairing comes from left-to-right column reduction of the edge/2-cell
boundary matrix.  Columns are big-int bitmasks over edge ranks: XOR is the
Z2 column addition and ``bit_length`` finds the lowest (latest) entry, so
the whole reduction runs on machine words.

Because columns are only ever added leftwards, a single full reduction
also answers every prefix question: the reduced columns owned by 2-cells
with id <= d span exactly the 1-boundaries of K_d.  That is what the
coordinate queries and the cycle algorithms lean on.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from typing import Iterator, Mapping

from .filtration import Chain, Filtration, Interval, Violation, validate_filtration

POSITIVE = "positive"
NEGATIVE = "negative"
NEITHER = "neither"


class InvalidFiltrationError(ValueError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        head = "; ".join(str(v) for v in violations[:3])
        more = "" if len(violations) <= 3 else f" (+{len(violations) - 3} more)"
        super().__init__(f"invalid filtration: {head}{more}")


@dataclass(frozen=True)
class Pairing:
    """Output of the H1 reduction: who kills whom.

    ``pairs`` maps each paired positive edge to the 2-cell that kills its
    class; ``essential`` holds positive edges whose class never dies.
    """

    pairs: Mapping[int, int]
    essential: frozenset[int]
    positive_edges: frozenset[int]
    negative_cells: frozenset[int]

    def positivity(self, cell_id: int) -> str:
        """Trichotomy of a cell's effect on H1: creates, kills, or neither."""
        if cell_id in self.positive_edges:
            return POSITIVE
        if cell_id in self.negative_cells:
            return NEGATIVE
        return NEITHER

    def death_of(self, edge_id: int) -> int | None:
        """Death index of the class born at a positive edge (None = never)."""
        return self.pairs.get(edge_id)


@dataclass(frozen=True)
class Barcode:
    intervals: tuple[Interval, ...]

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __getitem__(self, k: int) -> Interval:
        return self.intervals[k]

    def index_of(self, interval: Interval) -> int:
        try:
            return self.intervals.index(interval)
        except ValueError:
            raise KeyError(f"interval {interval} not in barcode") from None

    def __contains__(self, interval: Interval) -> bool:
        return interval in self.intervals


class _Reduction:
    """Per-filtration reduction snapshot; immutable once built."""

    __slots__ = (
        "_filtration_ref",
        "edge_ids",
        "edge_rank",
        "positive_edges",
        "positive_set",
        "pairs",
        "killer_of",
        "pivot_col",
        "pivot_owner",
        "forest_adj",
        "_fundamental_cache",
        "__weakref__",
    )

    def __init__(self, f: Filtration):
        violations = validate_filtration(f)
        if violations:
            raise InvalidFiltrationError(violations)
        # weak, so cache entries keyed by the filtration stay collectable
        self._filtration_ref = weakref.ref(f)
        self.edge_ids: list[int] = []
        self.edge_rank: dict[int, int] = {}
        self.positive_edges: list[int] = []
        self.pairs: dict[int, int] = {}
        self.killer_of: dict[int, int] = {}
        self.pivot_col: dict[int, int] = {}
        self.pivot_owner: dict[int, int] = {}
        self.forest_adj: dict[int, list[tuple[int, int]]] = {}
        self._fundamental_cache: dict[int, int] = {}

        parent: dict[int, int] = {}

        def find(x: int) -> int:
            root = x
            while parent[root] != root:
                root = parent[root]
            while parent[x] != root:
                parent[x], x = root, parent[x]
            return root

        for c in f.cells:
            if c.dim == 0:
                parent[c.id] = c.id
                self.forest_adj[c.id] = []
            elif c.dim == 1:
                self.edge_rank[c.id] = len(self.edge_ids)
                self.edge_ids.append(c.id)
                u, v = c.boundary
                ru, rv = find(u), find(v)
                if ru == rv:
                    self.positive_edges.append(c.id)
                else:
                    parent[ru] = rv
                    self.forest_adj[u].append((v, c.id))
                    self.forest_adj[v].append((u, c.id))
            else:
                col = 0
                for e in c.boundary:
                    col ^= 1 << self.edge_rank[e]
                while col:
                    low = col.bit_length() - 1
                    piv = self.pivot_col.get(low)
                    if piv is None:
                        self.pivot_col[low] = col
                        self.pivot_owner[low] = c.id
                        birth_edge = self.edge_ids[low]
                        self.pairs[birth_edge] = c.id
                        self.killer_of[c.id] = birth_edge
                        break
                    col ^= piv
        self.positive_set = frozenset(self.positive_edges)

    @property
    def filtration(self) -> Filtration:
        f = self._filtration_ref()
        if f is None:
            raise RuntimeError("filtration was garbage-collected")
        return f

    # -- mask helpers ----------------------------------------------------

    def mask_of_ids(self, ids) -> int:
        m = 0
        for e in ids:
            m ^= 1 << self.edge_rank[e]
        return m

    def ids_of_mask(self, mask: int) -> tuple[int, ...]:
        out = []
        while mask:
            low = mask.bit_length() - 1
            out.append(self.edge_ids[low])
            mask ^= 1 << low
        out.reverse()
        return tuple(out)

    def residual(self, mask: int, d: int) -> int:
        """Canonical representative of ``mask`` modulo 1-boundaries of K_d.

        Clears, from the top bit down, every position owned by a pivot
        whose 2-cell entered by index d.  Two cycles are homologous in K_d
        iff their residuals agree; a cycle bounds iff its residual is 0.
        """
        out = 0
        while mask:
            low = mask.bit_length() - 1
            piv = self.pivot_col.get(low)
            if piv is not None and self.pivot_owner[low] <= d:
                mask ^= piv
            else:
                bit = 1 << low
                out |= bit
                mask ^= bit
        return out

    def bounds(self, mask: int, d: int) -> bool:
        """True iff the cycle is a 1-boundary in K_d (early-exit residual)."""
        while mask:
            low = mask.bit_length() - 1
            piv = self.pivot_col.get(low)
            if piv is None or self.pivot_owner[low] > d:
                return False
            mask ^= piv
        return True

    def fundamental_cycle(self, edge_id: int) -> int:
        """Cycle created by a positive edge: the edge plus its forest path.

        The forest consists of the component-merging edges, so the path
        between the endpoints uses only edges older than ``edge_id``.
        """
        cached = self._fundamental_cache.get(edge_id)
        if cached is not None:
            return cached
        cell = self.filtration.cell(edge_id)
        u, v = cell.boundary
        prev: dict[int, tuple[int, int]] = {u: (0, 0)}
        queue = [u]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            if x == v:
                break
            for y, eid in self.forest_adj[x]:
                if eid < edge_id and y not in prev:
                    prev[y] = (x, eid)
                    queue.append(y)
        if v not in prev:
            raise RuntimeError(f"endpoints of positive edge {edge_id} are disconnected")
        mask = 1 << self.edge_rank[edge_id]
        x = v
        while x != u:
            x, eid = prev[x]
            mask ^= 1 << self.edge_rank[eid]
        self._fundamental_cache[edge_id] = mask
        return mask

    def is_cycle_mask(self, mask: int) -> bool:
        incidence: dict[int, int] = {}
        for e in self.ids_of_mask(mask):
            for vtx in self.filtration.cell(e).boundary:
                incidence[vtx] = incidence.get(vtx, 0) + 1
        return all(k % 2 == 0 for k in incidence.values())


_REDUCTIONS: "weakref.WeakKeyDictionary[Filtration, _Reduction]" = weakref.WeakKeyDictionary()


def get_reduction(f: Filtration) -> _Reduction:
    red = _REDUCTIONS.get(f)
    if red is None:
        red = _Reduction(f)
        _REDUCTIONS[f] = red
    return red


def compute_pairs(f: Filtration) -> Pairing:
    """The unique H1 pairing of a filtration.

    Raises InvalidFiltrationError if the filtration is malformed.
    """
    red = get_reduction(f)
    essential = frozenset(e for e in red.positive_edges if e not in red.pairs)
    return Pairing(
        pairs=dict(red.pairs),
        essential=essential,
        positive_edges=red.positive_set,
        negative_cells=frozenset(red.killer_of),
    )


def barcode_h1(f: Filtration) -> Barcode:
    """All H1 intervals, sorted by birth index."""
    red = get_reduction(f)
    intervals = [Interval(b, red.pairs.get(b)) for b in red.positive_edges]
    intervals.sort(key=lambda iv: iv.birth)
    return Barcode(tuple(intervals))


class CoordinateVector:
    """Coordinates of a 1-cycle's class in H1(K_d).

    Internally this is the cycle's canonical residual modulo boundaries;
    the expansion over the positive-edge basis is materialised lazily,
    since most callers only need the zero test.
    """

    __slots__ = ("d", "_residual", "_red", "_support")

    def __init__(self, d: int, residual: int, red: _Reduction):
        self.d = d
        self._residual = residual
        self._red = red
        self._support: tuple[int, ...] | None = None

    @property
    def is_zero(self) -> bool:
        return self._residual == 0

    @property
    def support(self) -> tuple[int, ...]:
        """Positive-edge ids with coefficient 1, ascending.

        Peels the residual against the echelon family made of the basis
        cycles of unpaired positive edges; the top bit of a cycle is
        always a positive edge, so each step strictly lowers the top.
        """
        if self._support is None:
            coords: list[int] = []
            r = self._residual
            while r:
                low = r.bit_length() - 1
                e = self._red.edge_ids[low]
                coords.append(e)
                r ^= self._red.fundamental_cycle(e)
                r = self._red.residual(r, self.d)
            coords.reverse()
            self._support = tuple(coords)
        return self._support

    def __add__(self, other: "CoordinateVector") -> "CoordinateVector":
        if self.d != other.d or self._red is not other._red:
            raise ValueError("coordinate vectors from different snapshots")
        return CoordinateVector(self.d, self._residual ^ other._residual, self._red)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoordinateVector):
            return NotImplemented
        return self.d == other.d and self._residual == other._residual

    def __hash__(self) -> int:
        return hash((self.d, self._residual))

    def __repr__(self) -> str:
        kind = "0" if self.is_zero else f"support={self.support}"
        return f"<CoordinateVector d={self.d} {kind}>"


def homology_coordinates(f: Filtration, d: int, z: Chain) -> CoordinateVector:
    """Class coordinates of the 1-cycle ``z`` in H1(K_d).

    The vector is zero exactly when ``z`` bounds in K_d, and the map is
    linear over Z2.  Raises ValueError if ``z`` is not a 1-cycle supported
    in K_d.
    """
    red = get_reduction(f)
    if z.dim != 1:
        raise ValueError(f"expected a 1-chain, got dimension {z.dim}")
    if not 0 <= d <= len(f):
        raise ValueError(f"prefix index {d} out of range")
    for e in z.cells:
        if e > d:
            raise ValueError(f"chain support exceeds K_{d} (cell {e})")
        if f.cell(e).dim != 1:
            raise ValueError(f"chain contains non-edge cell {e}")
    mask = red.mask_of_ids(z.cells)
    if not red.is_cycle_mask(mask):
        raise ValueError("chain is not a cycle")
    return CoordinateVector(d, red.residual(mask, d), red)
