"""Realizability and volume bounds for equiangular hyperbolic Coxeter polyhedra."""

__version__ = "0.1.0"

from .andreev import (
    PrismaticCircuit,
    RealizabilityReport,
    check,
    check_pi2,
    check_pi3,
    prismatic_circuits,
)
from .bounds import (
    BoundInterval,
    BoundTerm,
    boundary_area,
    bounds_compact_pi2,
    bounds_for,
    bounds_ideal_pi2,
    bounds_ideal_pi3,
    bounds_mixed_pi2,
    max_vertices_for_volume,
    miyamoto_lower,
    white_area,
)
from .census import (
    CatalogRecord,
    PlanarEmbeddedGraph,
    annotate,
    filter_by_volume_cap,
    parse_planar_code,
    serialize_planar_code,
    to_polyhedron,
)
from .combinatorics import (
    FaceColoring,
    IndependentSet,
    euler_face_count_identity,
    max_independent_set,
    two_color_faces,
)
from .families import FamilyMember, family_P2k, family_Q2k, family_R2k, glue_octahedra
from .lobachevsky import (
    V3,
    V8,
    constant_V3,
    constant_V8,
    cone_on_ideal_polygon,
    ideal_orthoscheme_volume,
    lobachevsky,
    orthoscheme_volume,
    two_ideal_vertex_tet_volume,
    vertex_volume_cap,
)
from .polyhedron import (
    AbstractPolyhedron,
    AngleKind,
    DualGraph,
    build_from_face_cycles,
    degree_profile,
    dual,
    is_three_connected,
)

__all__ = [name for name in dir() if not name.startswith("_")]
