"""Piecewise-linear persistence-diagram bundles over triangulated surfaces.

Build once, query anywhere: the base surface is subdivided into polygons
of constant simplex indexing, each polygon stores a (birth, death)
simplex-pair template, and the diagram at any base point is an O(N)
evaluation of its polygon's template.
"""

from .arrangement import Arrangement, DualGraph, dual_graph, init_from_surface
from .bundle import (
    BundleError,
    BundleStats,
    PDBundle,
    Template,
    build,
    order_transpositions,
    traversal_path,
)
from .complexes import (
    ComplexError,
    SimplexIndexing,
    SimplicialComplex,
    boundary_matrix,
    induced_indexing,
    validate_complex,
)
from .filtration import (
    EdgePoint,
    FiberedFiltration,
    FiltrationError,
    SurfaceError,
    TriangulatedSurface,
    barycentric,
    validate_monotone,
)
from .formats import (
    load_bundle,
    parse_bundle_text,
    parse_input,
    parse_input_text,
    save_bundle,
    serialize_bundle,
    write_input_text,
)
from .query import (
    Locator,
    LocateError,
    OutsideBaseError,
    build_locator,
    locate,
    locate_bruteforce,
    oracle_diagram,
    query_diagram,
)
from .rational import parse_rational, rat, render_extended, render_rational
from .reduction import (
    Diagram,
    PairingFunction,
    ReductionState,
    SparseBinaryMatrix,
    diagram,
    diagram_bary,
    low,
    pairs_from,
    reduce,
)
from .sweep import (
    DetectionTables,
    EdgeCrossing,
    collect_segments,
    process_detection,
    sweep_edge,
    sweep_edge_bentley_ottmann,
    sweep_edge_bruteforce,
)
from .synthetic import (
    drifting_clouds,
    grid_surface,
    random_rips_fixture,
    vietoris_rips_fibered,
)

__version__ = "0.1.0"
