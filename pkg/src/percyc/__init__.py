"""percyc: H1 persistence barcodes and representative persistent 1-cycles.

Build a filtration from a point cloud (Rips), a grayscale image
(lower-star cubical) or an explicit cell list, compute its H1 barcode,
and extract a representative 1-cycle for any bar.
"""

from .builders import (
    GrayImage,
    ParseError,
    PointCloud,
    build_lower_star_cubical,
    build_rips,
    parse_filtration_file,
    parse_pgm,
    parse_points,
)
from .cycles import (
    PersistentCycle,
    Verdict,
    brute_force_minimal_cycle,
    cycle_weight,
    persistent_basis_all,
    persistent_cycle_for,
    shortest_cycle_at,
    verify_persistent_cycle,
)
from .filtration import (
    Cell,
    Chain,
    Filtration,
    Interval,
    Violation,
    boundary,
    chain_boundary,
    chain_weight,
    one_skeleton_at,
    validate_filtration,
)
from .persistence import (
    Barcode,
    CoordinateVector,
    InvalidFiltrationError,
    Pairing,
    barcode_h1,
    compute_pairs,
    homology_coordinates,
)

__version__ = "0.1.0"

__all__ = [
    "Barcode",
    "Cell",
    "Chain",
    "CoordinateVector",
    "Filtration",
    "GrayImage",
    "Interval",
    "InvalidFiltrationError",
    "Pairing",
    "ParseError",
    "PersistentCycle",
    "PointCloud",
    "Verdict",
    "Violation",
    "barcode_h1",
    "boundary",
    "brute_force_minimal_cycle",
    "build_lower_star_cubical",
    "build_rips",
    "chain_boundary",
    "chain_weight",
    "compute_pairs",
    "cycle_weight",
    "homology_coordinates",
    "one_skeleton_at",
    "parse_filtration_file",
    "parse_pgm",
    "parse_points",
    "persistent_basis_all",
    "persistent_cycle_for",
    "shortest_cycle_at",
    "validate_filtration",
    "verify_persistent_cycle",
]
