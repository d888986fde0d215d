"""Exact-arithmetic toolkit for orthogonal surfaces: characteristic
points, cp-orders, Schnyder woods, and polytope realizability."""

from .charpoints import (
    CharPoint,
    DegeneracyWitness,
    SyzygyComplex,
    char_point_at,
    characteristic_points,
    detect_degeneracy,
    generated_points,
    is_characteristic,
    is_maximum,
    is_syzygy,
    minimal_generating_sets,
    reduced_betti_numbers,
    scarf_complex,
    syzygy_complex,
    tight_set,
)
from .constructions import (
    ConstructionVerificationError,
    ball_from_family,
    cp_family,
    maxima_of,
    path_product,
    prism,
    pyramid,
    simplex_surface,
    stack,
    verify_against_ball,
)
from .cporder import (
    CpOrder,
    DiamondResult,
    GradedResult,
    LatticeResult,
    MatchResult,
    RigidityResult,
    SimplicialBall,
    build_cporder,
    diamond_check,
    face_lattice_of_ball,
    find_face_bijection,
    is_graded,
    is_lattice,
    is_rigid,
    matches_ball,
    matches_faces,
    maximal_lower_bounds,
    minimal_upper_bounds,
)
from .documents import (
    DocumentError,
    canonicalize,
    emit_ball,
    emit_surface,
    emit_triangulation,
    load_ball,
    load_surface,
    load_triangulation,
    parse_ball,
    parse_surface,
    parse_triangulation,
)
from .export import export_poset_dot, render3d_svg
from .points import (
    DimensionMismatch,
    GeometryError,
    InternalError,
    NotAnAntichain,
    Point,
    VertexSet,
    almost_strictly_dominates,
    dominates,
    join,
    meet,
    strictly_dominates,
    validate_antichain,
)
from .realizer import (
    EdgeClass,
    Refutation,
    SearchResult,
    classify_edges,
    counting_criterion,
    nonrealizability_check,
    outgoing_orthogonal_counts,
    realization_criterion_check,
    search_realization,
    surface_from_orders,
    suspension_criterion,
)
from .schnyder import (
    AngleLabeling,
    PlaneGraph,
    RegionEmbedding,
    SchnyderWood,
    WoodCheck,
    angle_labeling,
    check_wood_axioms,
    compute_wood,
    dual_surface,
    extract_wood,
    region_vectors,
    woods_equal,
)
from .surface import (
    FlatId,
    StrongDegeneracy,
    Surface,
    flat_colors,
    flats,
    is_generic,
    is_witness,
    make_suspended,
    on_surface,
    strong_degeneracy,
    surface_from_points,
)

__version__ = "0.1.0"

__all__ = [
    "AngleLabeling",
    "CharPoint",
    "ConstructionVerificationError",
    "CpOrder",
    "DegeneracyWitness",
    "DiamondResult",
    "DimensionMismatch",
    "DocumentError",
    "EdgeClass",
    "FlatId",
    "GeometryError",
    "GradedResult",
    "InternalError",
    "LatticeResult",
    "MatchResult",
    "NotAnAntichain",
    "PlaneGraph",
    "Point",
    "Refutation",
    "RegionEmbedding",
    "RigidityResult",
    "SchnyderWood",
    "SearchResult",
    "SimplicialBall",
    "StrongDegeneracy",
    "Surface",
    "SyzygyComplex",
    "VertexSet",
    "WoodCheck",
    "almost_strictly_dominates",
    "angle_labeling",
    "ball_from_family",
    "build_cporder",
    "canonicalize",
    "char_point_at",
    "characteristic_points",
    "check_wood_axioms",
    "classify_edges",
    "compute_wood",
    "counting_criterion",
    "cp_family",
    "detect_degeneracy",
    "diamond_check",
    "dominates",
    "dual_surface",
    "emit_ball",
    "emit_surface",
    "emit_triangulation",
    "export_poset_dot",
    "extract_wood",
    "face_lattice_of_ball",
    "find_face_bijection",
    "flat_colors",
    "flats",
    "generated_points",
    "is_characteristic",
    "is_generic",
    "is_graded",
    "is_lattice",
    "is_maximum",
    "is_rigid",
    "is_syzygy",
    "is_witness",
    "join",
    "load_ball",
    "load_surface",
    "load_triangulation",
    "make_suspended",
    "matches_ball",
    "matches_faces",
    "maxima_of",
    "maximal_lower_bounds",
    "meet",
    "minimal_generating_sets",
    "minimal_upper_bounds",
    "nonrealizability_check",
    "on_surface",
    "outgoing_orthogonal_counts",
    "parse_ball",
    "parse_surface",
    "parse_triangulation",
    "path_product",
    "prism",
    "pyramid",
    "realization_criterion_check",
    "reduced_betti_numbers",
    "region_vectors",
    "render3d_svg",
    "scarf_complex",
    "search_realization",
    "simplex_surface",
    "stack",
    "strictly_dominates",
    "strong_degeneracy",
    "surface_from_orders",
    "surface_from_points",
    "suspension_criterion",
    "syzygy_complex",
    "tight_set",
    "validate_antichain",
    "verify_against_ball",
    "woods_equal",
]
