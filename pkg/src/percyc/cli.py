"""Command-line entry points: ``barcode``, ``cycles`` and ``serve``.

Exit codes: 0 success, 2 I/O failure, 3 parse/validation failure,
4 unknown interval selection.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import report, serialize
from .builders import ParseError
from .cycles import persistent_cycle_for, verify_persistent_cycle
from .filtration import Interval
from .persistence import InvalidFiltrationError
from .service import Dataset, load_dataset, serve

EXIT_OK = 0
EXIT_IO = 2
EXIT_INPUT = 3
EXIT_UNKNOWN_INTERVAL = 4


class ConfigError(ValueError):
    pass


@dataclass
class JobConfig:
    command: str
    kind: str
    input_path: str
    threshold: float | None = None
    top: int | None = None
    intervals: list[str] | None = None
    out: str | None = None
    port: int = 8000
    plot_dir: str | None = None
    frontend: str | None = None

    def validate(self) -> None:
        if self.kind == "points":
            if self.threshold is None:
                raise ConfigError("--threshold is required for --kind points")
            if self.threshold < 0:
                raise ConfigError("--threshold must be non-negative")
        elif self.threshold is not None:
            raise ConfigError(f"--threshold only applies to --kind points, not {self.kind}")
        if self.top is not None:
            if self.top < 1:
                raise ConfigError("--top must be at least 1")
            if self.intervals:
                raise ConfigError("--top and --interval are mutually exclusive")


def _parse_interval_spec(spec: str) -> Interval:
    try:
        b_text, d_text = spec.split(":", 1)
        birth = int(b_text)
        death = None if d_text in ("inf", "null", "") else int(d_text)
    except ValueError:
        raise ConfigError(f"bad interval spec {spec!r}; expected b:d or b:inf") from None
    return Interval(birth, death)


def _select_intervals(ds: Dataset, cfg: JobConfig) -> list[int]:
    """Resolve the bar selection to barcode indices, in report order."""
    if cfg.intervals:
        ks = []
        for spec in cfg.intervals:
            iv = _parse_interval_spec(spec)
            try:
                ks.append(ds.barcode.index_of(iv))
            except KeyError:
                raise KeyError(f"interval {spec} not in barcode") from None
        return ks
    order = report.rank_by_persistence(ds.filtration, ds.barcode)
    if cfg.top is not None:
        return order[: cfg.top]
    return order


def run_barcode(cfg: JobConfig) -> int:
    ds = load_dataset(cfg.kind, cfg.input_path, cfg.threshold)
    doc = serialize.barcode_document(ds.filtration, ds.barcode)
    _write_out(cfg.out, serialize.dumps(doc))
    if cfg.plot_dir:
        plot_dir = Path(cfg.plot_dir)
        plot_dir.mkdir(parents=True, exist_ok=True)
        report.plot_barcode(ds.filtration, ds.barcode, plot_dir / "barcode.png")
    return EXIT_OK


def run_cycles(cfg: JobConfig) -> int:
    ds = load_dataset(cfg.kind, cfg.input_path, cfg.threshold)
    ks = _select_intervals(ds, cfg)
    cycles = []
    for k in ks:
        interval = ds.barcode[k]
        pc = persistent_cycle_for(ds.filtration, interval)
        verdict = verify_persistent_cycle(ds.filtration, interval, pc.chain)
        if not verdict:
            raise RuntimeError(f"cycle for {interval} failed verification: {verdict.reason}")
        cycles.append(pc)
    doc = serialize.cycles_document(ds.filtration, ds.barcode, cycles)
    _write_out(cfg.out, serialize.dumps(doc))
    if cfg.plot_dir:
        plot_dir = Path(cfg.plot_dir)
        plot_dir.mkdir(parents=True, exist_ok=True)
        rank_of = {k: rank for rank, k in enumerate(report.rank_by_persistence(ds.filtration, ds.barcode))}
        colors = [report.bar_color(rank_of[k]) for k in ks]
        highlight = dict(zip(ks, colors))
        report.plot_barcode(ds.filtration, ds.barcode, plot_dir / "barcode.png", highlight)
        records = [serialize.cycle_record(ds.filtration, ds.barcode, pc) for pc in cycles]
        if ds.kind == "points":
            report.plot_cycles_points(ds.points, records, colors, plot_dir / "cycles.png")
        elif ds.kind == "image":
            report.plot_cycles_image(ds.image, ds.filtration, records, colors, plot_dir / "cycles.png")
    return EXIT_OK


def run_serve(cfg: JobConfig) -> int:
    ds = load_dataset(cfg.kind, cfg.input_path, cfg.threshold)
    frontend = cfg.frontend
    if frontend is None:
        default_dist = Path(__file__).resolve().parents[2] / "frontend" / "dist"
        frontend = str(default_dist) if default_dist.is_dir() else None
    print(f"serving {ds.name} ({ds.kind}, {len(ds.filtration)} cells, "
          f"{len(ds.barcode)} bars) on http://127.0.0.1:{cfg.port}")
    serve(ds, cfg.port, frontend)
    return EXIT_OK


def _write_out(out: str | None, text: str) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="percyc",
        description="H1 persistence barcodes and representative persistent 1-cycles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", required=True, help="input file path")
        p.add_argument("--kind", required=True, choices=["points", "image", "filtration"])
        p.add_argument("--threshold", type=float, default=None,
                       help="Rips edge threshold (points only)")

    p_bar = sub.add_parser("barcode", help="compute the H1 barcode")
    common(p_bar)
    p_bar.add_argument("--out", default="-", help="output JSON path (default stdout)")
    p_bar.add_argument("--plot", dest="plot_dir", default=None,
                       help="directory for rendered figures")

    p_cyc = sub.add_parser("cycles", help="compute persistent 1-cycles for selected bars")
    common(p_cyc)
    p_cyc.add_argument("--out", default="-", help="output JSON path (default stdout)")
    p_cyc.add_argument("--top", type=int, default=None,
                       help="only the K most persistent bars")
    p_cyc.add_argument("--interval", action="append", dest="intervals", metavar="B:D",
                       help="explicit interval (birth:death indices, death may be 'inf'); repeatable")
    p_cyc.add_argument("--plot", dest="plot_dir", default=None,
                       help="directory for rendered figures")

    p_srv = sub.add_parser("serve", help="serve the barcode/cycle API and UI")
    common(p_srv)
    p_srv.add_argument("--port", type=int, default=8000)
    p_srv.add_argument("--frontend", default=None, help="directory of built UI assets")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = JobConfig(
        command=args.command,
        kind=args.kind,
        input_path=args.input,
        threshold=args.threshold,
        top=getattr(args, "top", None),
        intervals=getattr(args, "intervals", None),
        out=getattr(args, "out", None),
        port=getattr(args, "port", 8000),
        plot_dir=getattr(args, "plot_dir", None),
        frontend=getattr(args, "frontend", None),
    )
    try:
        cfg.validate()
        if cfg.command == "barcode":
            return run_barcode(cfg)
        if cfg.command == "cycles":
            return run_cycles(cfg)
        return run_serve(cfg)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ConfigError, ParseError, InvalidFiltrationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except KeyError as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return EXIT_UNKNOWN_INTERVAL


if __name__ == "__main__":
    sys.exit(main())
