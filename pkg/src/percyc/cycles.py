"""Persistent 1-cycles: shortest cycles at birth edges, the full
persistent 1-basis, the single-interval fast path, a verifier for the
defining conditions, and an exhaustive test oracle.

A persistent 1-cycle for a finite bar [b, d) is a 1-cycle that contains
the birth edge, lives in K_b, is not yet a boundary in K_{d-1}, and
becomes one in K_d.  The cycles built here are sums of shortest cycles,
one per contributing birth index g in a set G with max(G) = b.
"""

from __future__ import annotations

import heapq
import weakref
from dataclasses import dataclass

from .filtration import Chain, Filtration, Interval, chain_weight, one_skeleton_at
from .persistence import (
    _Reduction,
    barcode_h1,
    get_reduction,
    homology_coordinates,
)


@dataclass(frozen=True)
class PersistentCycle:
    """A barcode interval together with its representative cycle.

    ``G`` holds the birth indices of the component shortest cycles;
    ``chain`` is their Z2 sum and ``components`` the individual cycles,
    aligned with ``G``.
    """

    interval: Interval
    G: tuple[int, ...]
    chain: Chain
    components: tuple[Chain, ...]

    @property
    def g_star(self) -> int:
        return self.G[-1]


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.accepted


REASON_NOT_IN_BARCODE = "interval not in barcode"
REASON_NOT_A_CYCLE = "not a cycle"
REASON_NOT_IN_KB = "not contained in K_b"
REASON_MISSING_BIRTH_EDGE = "does not contain the birth edge"
REASON_ALREADY_BOUNDARY = "already a boundary in K_{d-1}"
REASON_NEVER_BOUNDARY = "not a boundary in K_d"


def shortest_cycle_at(f: Filtration, i: int) -> Chain:
    """Shortest cycle through a positive edge at the moment it appears.

    Runs Dijkstra between the edge's endpoints on the 1-skeleton of
    K_{i-1} and closes the path with the edge itself.  Ties are broken
    toward smaller vertex ids (and then smaller edge ids), so the result
    is deterministic even on graphs full of equal-length paths.
    """
    cell = f.cell(i)
    if cell.dim != 1:
        raise ValueError(f"cell {i} is not an edge")
    red = get_reduction(f)
    if i not in red.positive_set:
        raise ValueError(f"edge {i} is not positive")
    cached = _shortest_cache(f).get(i)
    if cached is not None:
        return cached

    u, v = cell.boundary
    source, target = (u, v) if u <= v else (v, u)
    skeleton = one_skeleton_at(f, i - 1)

    dist: dict[int, float] = {source: 0.0}
    pred: dict[int, tuple[int, int]] = {}
    done: set[int] = set()
    heap: list[tuple[float, int]] = [(0.0, source)]
    while heap:
        d_x, x = heapq.heappop(heap)
        if x in done:
            continue
        done.add(x)
        if x == target:
            break
        for y, eid, w in skeleton.neighbors(x):
            if y in done:
                continue
            nd = d_x + w
            old = dist.get(y)
            if old is None or nd < old:
                dist[y] = nd
                pred[y] = (x, eid)
                heapq.heappush(heap, (nd, y))
            elif nd == old and (x, eid) < pred[y]:
                pred[y] = (x, eid)
    if target not in done:
        raise RuntimeError(
            f"endpoints of positive edge {i} are disconnected in K_{i - 1}"
        )

    edges = {i}
    x = target
    while x != source:
        x, eid = pred[x]
        edges.add(eid)
    chain = Chain(1, frozenset(edges))
    _shortest_cache(f)[i] = chain
    return chain


_SHORTEST: "weakref.WeakKeyDictionary[Filtration, dict[int, Chain]]" = weakref.WeakKeyDictionary()


def _shortest_cache(f: Filtration) -> dict[int, Chain]:
    cache = _SHORTEST.get(f)
    if cache is None:
        cache = {}
        _SHORTEST[f] = cache
    return cache


def _solve_components(
    red: _Reduction,
    d: int,
    b: int,
    candidates: list[int],
    cycle_mask,
) -> list[int]:
    """Deterministic choice of G: birth indices whose classes sum to zero in K_d.

    Inserts candidate residuals in increasing birth order into a GF(2)
    echelon basis, dropping dependent ones, then expresses the birth
    cycle's class over the survivors.  The selected set is therefore
    independent, which forces the minimality property: no proper
    non-empty subset of G can itself sum to a boundary.
    """
    r_b = red.residual(cycle_mask(b), d)
    if r_b == 0:
        return [b]
    echelon: dict[int, tuple[int, int]] = {}  # top bit -> (vector, combo mask)
    order: list[int] = []
    for g in candidates:
        # dependent candidates reduce to zero and are dropped; keeping the
        # echelon independent is what makes the expression below unique
        vec = red.residual(cycle_mask(g), d)
        combo = 1 << len(order)
        while vec:
            top = vec.bit_length() - 1
            hit = echelon.get(top)
            if hit is None:
                echelon[top] = (vec, combo)
                order.append(g)
                break
            vec ^= hit[0]
            combo ^= hit[1]
    combo_b = 0
    while r_b:
        top = r_b.bit_length() - 1
        hit = echelon.get(top)
        if hit is None:
            raise RuntimeError(
                f"no combination of candidate cycles kills the class born at {b} by {d}"
            )
        r_b ^= hit[0]
        combo_b ^= hit[1]
    G = [order[k] for k in range(len(order)) if combo_b >> k & 1]
    G.append(b)
    G.sort()
    return G


def _assemble(f: Filtration, interval: Interval, G: list[int]) -> PersistentCycle:
    components = tuple(shortest_cycle_at(f, g) for g in G)
    chain = Chain(1)
    for comp in components:
        chain = chain + comp
    return PersistentCycle(interval=interval, G=tuple(G), chain=chain, components=components)


def persistent_basis_all(f: Filtration) -> list[PersistentCycle]:
    """One persistent cycle per barcode interval, maintained incrementally.

    Walks the filtration once: positive edges contribute their shortest
    cycle to a live basis; each negative 2-cell removes the dying basis
    element and emits the interval's cycle as a sum over G.
    """
    red = get_reduction(f)
    cycle_mask = _cycle_mask_fn(f, red)
    basis: dict[int, None] = {}
    out: list[PersistentCycle] = []
    for cell in f.cells:
        if cell.dim == 1 and cell.id in red.positive_set:
            shortest_cycle_at(f, cell.id)  # warm the cache in filtration order
            basis[cell.id] = None
        elif cell.dim == 2 and cell.id in red.killer_of:
            d = cell.id
            b = red.killer_of[d]
            candidates = [g for g in basis if g < b]
            G = _solve_components(red, d, b, candidates, cycle_mask)
            out.append(_assemble(f, Interval(b, d), G))
            del basis[b]
    for b in basis:
        out.append(_assemble(f, Interval(b, None), [b]))
    out.sort(key=lambda pc: pc.interval.birth)
    return out


def persistent_cycle_for(f: Filtration, interval: Interval) -> PersistentCycle:
    """Persistent cycle for one interval without touching the others.

    Only shortest cycles at births whose bars contain [b, d) can take
    part in the sum, so just those are computed: positive edges at or
    before the birth that stay unpaired until at least the death.
    """
    red = get_reduction(f)
    b, d = interval.birth, interval.death
    if b not in red.positive_set:
        raise KeyError(f"interval {interval} not in barcode")
    if red.pairs.get(b) != d:
        raise KeyError(f"interval {interval} not in barcode")
    if d is None:
        return _assemble(f, interval, [b])
    cycle_mask = _cycle_mask_fn(f, red)
    candidates = [
        g
        for g in red.positive_edges
        if g < b and (g not in red.pairs or red.pairs[g] >= d)
    ]
    G = _solve_components(red, d, b, candidates, cycle_mask)
    return _assemble(f, interval, G)


def _cycle_mask_fn(f: Filtration, red: _Reduction):
    def cycle_mask(g: int) -> int:
        return red.mask_of_ids(shortest_cycle_at(f, g).cells)

    return cycle_mask


def verify_persistent_cycle(f: Filtration, interval: Interval, z: Chain) -> Verdict:
    """Check the defining conditions of a persistent 1-cycle, clause by clause.

    Rejection names the first clause that fails: the chain must be a
    cycle inside K_b containing the birth edge, and for finite bars must
    still be non-bounding in K_{d-1} yet bound in K_d.
    """
    red = get_reduction(f)
    b, d = interval.birth, interval.death
    if b not in red.positive_set or red.pairs.get(b) != d:
        return Verdict(False, REASON_NOT_IN_BARCODE)
    if z.dim != 1:
        return Verdict(False, REASON_NOT_A_CYCLE)
    for e in z.cells:
        if not 1 <= e <= len(f) or f.cell(e).dim != 1:
            return Verdict(False, REASON_NOT_A_CYCLE)
    if not red.is_cycle_mask(red.mask_of_ids(z.cells)):
        return Verdict(False, REASON_NOT_A_CYCLE)
    if any(e > b for e in z.cells):
        return Verdict(False, REASON_NOT_IN_KB)
    if b not in z.cells:
        return Verdict(False, REASON_MISSING_BIRTH_EDGE)
    if d is not None:
        if homology_coordinates(f, d - 1, z).is_zero:
            return Verdict(False, REASON_ALREADY_BOUNDARY)
        if not homology_coordinates(f, d, z).is_zero:
            return Verdict(False, REASON_NEVER_BOUNDARY)
    return Verdict(True)


MAX_ORACLE_EDGES = 25
MAX_ORACLE_RANK = 20


def brute_force_minimal_cycle(
    f: Filtration, interval: Interval, budget: int | None = None
) -> Chain | None:
    """Exhaustive minimal persistent cycle, for testing only.

    Enumerates the whole cycle space of K_b through the fundamental
    cycles of positive edges (every candidate automatically satisfies
    the cycle clause; non-cycles can never qualify), keeps those meeting
    the death conditions, and returns the minimum by (weight, edge
    count, edge ids).  Exponential in the number of positive edges; the
    instance size is capped and the winner is re-checked through
    verify_persistent_cycle.
    """
    red = get_reduction(f)
    b, d = interval.birth, interval.death
    if b not in red.positive_set or red.pairs.get(b) != d:
        raise KeyError(f"interval {interval} not in barcode")
    n_edges = len(red.edge_ids)
    if n_edges > MAX_ORACLE_EDGES:
        raise ValueError(f"instance too large: {n_edges} edges > {MAX_ORACLE_EDGES}")
    generators = [g for g in red.positive_edges if g < b]
    if len(generators) + 1 > MAX_ORACLE_RANK:
        raise ValueError(
            f"instance too large: cycle space rank {len(generators) + 1} > {MAX_ORACLE_RANK}"
        )

    weights = [f.cell(e).weight for e in red.edge_ids]

    def mask_stats(mask: int) -> tuple[float, int]:
        wsum, count, m = 0.0, 0, mask
        while m:
            low = m.bit_length() - 1
            wsum += weights[low]
            count += 1
            m ^= 1 << low
        return wsum, count

    def qualifies(mask: int) -> bool:
        if d is None:
            return True
        return (not red.bounds(mask, d - 1)) and red.bounds(mask, d)

    gen_masks = [red.fundamental_cycle(g) for g in generators]
    acc = red.fundamental_cycle(b)  # every candidate contains the birth edge
    best: tuple[float, int, tuple[int, ...]] | None = None
    best_mask = 0

    def consider(mask: int) -> None:
        nonlocal best, best_mask
        w, count = mask_stats(mask)
        if budget is not None and count > budget:
            return
        if best is not None and (w, count) > best[:2]:
            return
        if not qualifies(mask):
            return
        key = (w, count, red.ids_of_mask(mask))
        if best is None or key < best:
            best = key
            best_mask = mask

    consider(acc)
    for step in range(1, 1 << len(gen_masks)):
        flip = (step & -step).bit_length() - 1
        acc ^= gen_masks[flip]
        consider(acc)

    if best is None:
        return None
    chain = Chain(1, frozenset(red.ids_of_mask(best_mask)))
    verdict = verify_persistent_cycle(f, interval, chain)
    if not verdict:
        raise RuntimeError(f"oracle produced an invalid cycle: {verdict.reason}")
    return chain


def cycle_weight(f: Filtration, chain: Chain) -> float:
    """Total edge weight of a 1-chain."""
    return chain_weight(f, chain)
