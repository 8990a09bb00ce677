"""HTTP API serving a dataset's barcode and on-demand persistent cycles.

Startup loads one dataset and precomputes its barcode; request handlers
only read that state.  Cycle computation is keyed by interval index and
deduplicated: concurrent requests for the same bar compute once and all
receive the identical rendered body.
"""

from __future__ import annotations

import base64
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np
from fastapi import FastAPI
from fastapi.responses import HTMLResponse, Response
from fastapi.staticfiles import StaticFiles

from . import serialize
from .builders import (
    GrayImage,
    build_lower_star_cubical,
    build_rips,
    cubical_vertex_pixels,
    parse_filtration_file,
    parse_pgm,
    parse_points,
    write_pgm,
)
from .cycles import persistent_cycle_for, verify_persistent_cycle
from .filtration import Filtration
from .persistence import Barcode, barcode_h1


class SingleFlight:
    """Keyed once-only computation with per-key locking."""

    def __init__(self) -> None:
        self._mutex = threading.Lock()
        self._locks: dict[object, threading.Lock] = {}
        self._results: dict[object, object] = {}
        self.computed = 0  # observable in tests

    def get(self, key, compute: Callable[[], object]):
        with self._mutex:
            if key in self._results:
                return self._results[key]
            lock = self._locks.setdefault(key, threading.Lock())
        with lock:
            with self._mutex:
                if key in self._results:
                    return self._results[key]
            value = compute()
            with self._mutex:
                self._results[key] = value
                self._locks.pop(key, None)
                self.computed += 1
            return value


@dataclass
class Dataset:
    kind: str  # points | image | filtration
    name: str
    filtration: Filtration
    barcode: Barcode
    points: np.ndarray | None = None
    image: GrayImage | None = None
    _cycles: SingleFlight = field(default_factory=SingleFlight)

    def cycle_body(self, k: int) -> str:
        """Rendered JSON body for interval k; computed and verified once."""

        def compute() -> str:
            interval = self.barcode[k]
            pc = persistent_cycle_for(self.filtration, interval)
            verdict = verify_persistent_cycle(self.filtration, interval, pc.chain)
            if not verdict:
                raise RuntimeError(f"emitted cycle failed verification: {verdict.reason}")
            return serialize.dumps(serialize.cycle_record(self.filtration, self.barcode, pc))

        return self._cycles.get(k, compute)

    def meta(self) -> dict:
        n0, n1, n2 = self.filtration.dim_counts
        doc = {
            "kind": self.kind,
            "name": self.name,
            "cells": {"vertices": n0, "edges": n1, "two_cells": n2, "total": len(self.filtration)},
            "intervals": len(self.barcode),
            "persistence_mode": "index" if self.filtration.values is None else "value",
        }
        if self.points is not None:
            doc["bbox"] = {
                "min": [float(x) for x in self.points.min(axis=0)],
                "max": [float(x) for x in self.points.max(axis=0)],
            }
        if self.image is not None:
            doc["width"] = self.image.width
            doc["height"] = self.image.height
        return doc

    def geometry(self) -> dict:
        if self.kind == "points":
            return {"kind": "points", "points": [[float(c) for c in row] for row in self.points]}
        if self.kind == "image":
            pgm = write_pgm(self.image).encode("ascii")
            vertex_ids = [c.id for c in self.filtration.cells if c.dim == 0]
            pixels = cubical_vertex_pixels(self.image)
            return {
                "kind": "image",
                "width": self.image.width,
                "height": self.image.height,
                "pgm_base64": base64.b64encode(pgm).decode("ascii"),
                "vertex_pixels": {str(vid): [r, c] for vid, (r, c) in zip(vertex_ids, pixels)},
            }
        return {"kind": "filtration", "vertices": self.filtration.dim_counts[0]}


def load_dataset(kind: str, path: str | Path, threshold: float | None = None) -> Dataset:
    """Read an input file and precompute its filtration and barcode."""
    path = Path(path)
    text = path.read_text()
    if kind == "points":
        if threshold is None:
            raise ValueError("a Rips threshold is required for point inputs")
        pc = parse_points(text)
        f = build_rips(pc, threshold)
        return Dataset(kind, path.name, f, barcode_h1(f), points=pc.points)
    if kind == "image":
        img = parse_pgm(text)
        f = build_lower_star_cubical(img)
        return Dataset(kind, path.name, f, barcode_h1(f), image=img)
    if kind == "filtration":
        f = parse_filtration_file(text)
        return Dataset(kind, path.name, f, barcode_h1(f))
    raise ValueError(f"unknown input kind {kind!r}")


_FALLBACK_PAGE = """<!doctype html>
<html><head><title>percyc</title></head>
<body>
<h1>percyc API</h1>
<p>The browser UI is not built. Endpoints:
<a href="/api/meta">/api/meta</a>,
<a href="/api/barcode">/api/barcode</a>,
/api/cycle/{k},
<a href="/api/geometry">/api/geometry</a>.</p>
<p>To build the UI: <code>cd frontend &amp;&amp; npm install &amp;&amp; npm run build</code>,
then restart with <code>--frontend frontend/dist</code>.</p>
</body></html>
"""


def create_app(dataset: Dataset, frontend_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="percyc", docs_url=None, redoc_url=None)

    def json_response(body: str, status: int = 200) -> Response:
        return Response(content=body, media_type="application/json", status_code=status)

    @app.get("/api/meta")
    def meta() -> Response:
        return json_response(serialize.dumps(dataset.meta()))

    @app.get("/api/barcode")
    def barcode() -> Response:
        doc = serialize.barcode_document(dataset.filtration, dataset.barcode)
        return json_response(serialize.dumps(doc))

    @app.get("/api/cycle/{k}")
    def cycle(k: int) -> Response:
        if not 0 <= k < len(dataset.barcode):
            return json_response(serialize.dumps({"error": f"no interval {k}"}), status=404)
        try:
            return json_response(dataset.cycle_body(k))
        except RuntimeError as exc:
            return json_response(serialize.dumps({"error": str(exc)}), status=500)

    @app.get("/api/geometry")
    def geometry() -> Response:
        return json_response(serialize.dumps(dataset.geometry()))

    index_file = None
    if frontend_dir is not None:
        frontend_dir = Path(frontend_dir)
        index_file = frontend_dir / "index.html"
    if index_file is not None and index_file.is_file():
        app.mount("/", StaticFiles(directory=str(frontend_dir), html=True), name="ui")
    else:

        @app.get("/", response_class=HTMLResponse)
        def home() -> str:
            return _FALLBACK_PAGE

    return app


def serve(dataset: Dataset, port: int, frontend_dir: str | Path | None = None) -> None:
    import uvicorn

    app = create_app(dataset, frontend_dir)
    uvicorn.run(app, host="127.0.0.1", port=port, log_level="warning")
