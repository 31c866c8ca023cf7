"""Minimal disconnected cuts of 4-connected planar graphs."""

from .connectivity import PathBundle, disjoint_paths, is_k_connected, local_connectivity, menger_paths
from .cuts import (
    AuxiliaryGraph,
    ContractError,
    CutReport,
    FaceCycleRelation,
    Relation,
    build_auxiliary,
    classify_face_vs_cycle,
    extend_min_cut_to_auxiliary,
    face_intersection,
    neighborhood_cut,
    splits,
    verify_cut,
    zeta,
)
from .embedding import (
    DCEL,
    EmbeddingError,
    Face,
    FaceCatalog,
    NotPlanarError,
    NotTwoConnectedError,
    RotationSystem,
    build_dcel,
    embed,
    large_faces,
    list_large_faces,
    validate_embedding,
)
from .generators import GeneratorSpec, antiprism, carve_large_faces, generate, named, random_triangulation
from .graph import Graph, GraphError, append, components, induced_subgraph, lookup_array, subset_array
from .io import GraphFormatError, parse_graph, read_graph, write_graph
from .mindisccut import PreconditionError, decide, min_disc_cut, min_disc_cut_trace
from .oracle import enumerate_minimal_cuts, is_cleavable, run_checks
from .paths import Skipper, path_skipper, remove_chords, truncate_path

__version__ = "0.1.0"
