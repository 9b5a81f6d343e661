"""Simultaneous straight-line grid embeddings of layered graphs.

With a given vertex mapping: two paths on an n x n grid, a path plus a
caterpillar on at most (2n-k) x n, two caterpillars on n(2n+1) x
n(2n^2+1).  Without a mapping: any number of outerplanar graphs on a
near-n x n grid, and a planar/outerplanar pair on a polynomially bounded
grid.  Every output can be certified independently with exact integer
predicates, and the bundled five-path family comes with an exhaustive
impossibility check.
"""

from .certify import (
    CertificateReport,
    Violation,
    certify_bounds,
    certify_embedding,
    certify_general_position,
)
from .errors import (
    CoordinateBudgetError,
    DegenerateSegmentError,
    DuplicatePointError,
    HullEdgeInvariantError,
    InternalInvariantError,
    InvalidInstanceError,
    ParseError,
    SearchBudgetError,
    SimembedError,
    UnsupportedInstanceError,
)
from .generate import generate
from .geometry import (
    COORD_LIMIT,
    GridPoint,
    Segment,
    convex_hull,
    find_collinear_triple,
    orient,
    segments_conflict,
)
from .graphs import (
    Caterpillar,
    Layer,
    LayeredInstance,
    PathOrder,
    as_path,
    caterpillar_decompose,
    caterpillar_to_path,
    check_plane_embedding,
    maximalize_outerplanar,
    triangulate_plane,
    validate_instance,
    validate_layer,
)
from .mapped import (
    FIVE_PATHS,
    FivePointSearchResult,
    PairCoverage,
    SimultaneousEmbedding,
    disjoint_edge_pairs,
    embed_path_caterpillar,
    embed_two_caterpillars,
    embed_two_paths,
    exhaustive_five_point_check,
    five_path_pair_coverage,
    path_from_digits,
    refine_general_position,
)
from .documents import (
    parse_instance,
    parse_result,
    serialize_instance,
    serialize_result,
)
from .svg import render_svg
from .unmapped import (
    ParabolaSet,
    PointAssignment,
    brute_force_point_assignment,
    embed_outerplanar_on_points,
    general_position_bounds,
    parabola_pointset,
    planar_general_position_draw,
    planar_grid_draw,
    simul_embed_outerplanars,
    simul_embed_planar_outerplanar,
)
from .cli import cli_main

__version__ = "0.1.0"

__all__ = [
    "COORD_LIMIT",
    "Caterpillar",
    "CertificateReport",
    "CoordinateBudgetError",
    "DegenerateSegmentError",
    "DuplicatePointError",
    "FIVE_PATHS",
    "FivePointSearchResult",
    "GridPoint",
    "HullEdgeInvariantError",
    "InternalInvariantError",
    "InvalidInstanceError",
    "Layer",
    "LayeredInstance",
    "PairCoverage",
    "ParabolaSet",
    "PointAssignment",
    "ParseError",
    "PathOrder",
    "SearchBudgetError",
    "Segment",
    "SimembedError",
    "SimultaneousEmbedding",
    "UnsupportedInstanceError",
    "Violation",
    "as_path",
    "brute_force_point_assignment",
    "caterpillar_decompose",
    "caterpillar_to_path",
    "certify_bounds",
    "certify_embedding",
    "certify_general_position",
    "check_plane_embedding",
    "cli_main",
    "convex_hull",
    "disjoint_edge_pairs",
    "embed_outerplanar_on_points",
    "embed_path_caterpillar",
    "embed_two_caterpillars",
    "embed_two_paths",
    "exhaustive_five_point_check",
    "find_collinear_triple",
    "five_path_pair_coverage",
    "general_position_bounds",
    "generate",
    "maximalize_outerplanar",
    "orient",
    "parabola_pointset",
    "parse_instance",
    "parse_result",
    "path_from_digits",
    "planar_general_position_draw",
    "planar_grid_draw",
    "refine_general_position",
    "render_svg",
    "segments_conflict",
    "serialize_instance",
    "serialize_result",
    "simul_embed_outerplanars",
    "simul_embed_planar_outerplanar",
    "triangulate_plane",
    "validate_instance",
    "validate_layer",
]
