"""JSON views of barcodes and persistent cycles.

Death = null encodes an infinite bar.  Cycle edges are reported both as
vertex-id pairs (so a client can draw them without the filtration) and
as the underlying edge cell ids.
"""

from __future__ import annotations

import json
from typing import Any

from .cycles import PersistentCycle, cycle_weight
from .filtration import Filtration, Interval
from .persistence import Barcode


def interval_record(f: Filtration, barcode: Barcode, k: int) -> dict[str, Any]:
    iv = barcode[k]
    rec: dict[str, Any] = {
        "id": k,
        "birth": iv.birth,
        "death": iv.death,
        "birth_value": f.value(iv.birth),
        "death_value": None if iv.death is None else f.value(iv.death),
    }
    return rec


def barcode_document(f: Filtration, barcode: Barcode) -> dict[str, Any]:
    return {"intervals": [interval_record(f, barcode, k) for k in range(len(barcode))]}


def cycle_record(f: Filtration, barcode: Barcode, pc: PersistentCycle) -> dict[str, Any]:
    cell_ids = pc.chain.ids()
    edges = [list(f.cell(e).boundary) for e in cell_ids]
    return {
        "interval_id": barcode.index_of(pc.interval),
        "G": list(pc.G),
        "edges": edges,
        "cell_ids": list(cell_ids),
        "weight": cycle_weight(f, pc.chain),
        "components": len(pc.components),
    }


def cycles_document(f: Filtration, barcode: Barcode, cycles: list[PersistentCycle]) -> dict[str, Any]:
    return {"cycles": [cycle_record(f, barcode, pc) for pc in cycles]}


def dumps(doc: Any) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def parse_barcode_document(text: str) -> list[Interval]:
    doc = json.loads(text)
    return [Interval(rec["birth"], rec["death"]) for rec in doc["intervals"]]


def persistence_of(f: Filtration, iv: Interval) -> float:
    """Bar length in value terms where values exist, else in index terms."""
    if iv.death is None:
        return float("inf")
    return f.value(iv.death) - f.value(iv.birth)
