"""Exact zero forcing, total forcing, path cover, and matching invariants of
small graphs, plus recognizers for the extremal tree families and an
exhaustive verification harness."""

from .graph_core import (
    CanonicalForm,
    CapacityError,
    Graph,
    InputError,
    TreeCert,
    VertexSet,
    canonical_form,
    diameter,
    format_edge_list,
    leaves,
    parse_edge_list,
    parse_graph6,
    support_vertices,
    to_graph6,
)
from .forcing import (
    ForcingNumbers,
    ForcingTrace,
    is_forcing_set,
    is_total_forcing_set,
    mandatory_tf_vertices,
    propagate,
    total_forcing_number,
    zero_forcing_number,
)
from .trim import TrimResult, contract_edge, is_path, subdivide_edge, trim_tree
from .path_cover import (
    CoverProfile,
    PathCover,
    enumerate_min_covers,
    normalize_strong_support,
    pc_exhaustive,
    pc_tree,
    subdivision_invariance_check,
    tfset_from_leaf_cover,
)
from .matching import (
    Matching,
    contraction_monotonicity_check,
    matching_number_general,
    matching_number_tree,
)
from .characterize import (
    ExtremalVerdict,
    FamilyTWitness,
    build_family_t,
    build_range_tree,
    classify_extremal,
    family_t_invariants,
    is_lower_extremal,
    is_upper_extremal,
    recognize_family_t,
)
from .generate import all_trees, named, random_tree

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "CapacityError",
    "CoverProfile",
    "ExtremalVerdict",
    "FamilyTWitness",
    "ForcingNumbers",
    "ForcingTrace",
    "Graph",
    "InputError",
    "Matching",
    "PathCover",
    "TreeCert",
    "TrimResult",
    "VertexSet",
    "all_trees",
    "build_family_t",
    "build_range_tree",
    "canonical_form",
    "classify_extremal",
    "contract_edge",
    "contraction_monotonicity_check",
    "diameter",
    "enumerate_min_covers",
    "family_t_invariants",
    "format_edge_list",
    "is_forcing_set",
    "is_lower_extremal",
    "is_path",
    "is_total_forcing_set",
    "is_upper_extremal",
    "leaves",
    "mandatory_tf_vertices",
    "matching_number_general",
    "matching_number_tree",
    "named",
    "normalize_strong_support",
    "parse_edge_list",
    "parse_graph6",
    "pc_exhaustive",
    "pc_tree",
    "propagate",
    "random_tree",
    "recognize_family_t",
    "subdivide_edge",
    "subdivision_invariance_check",
    "support_vertices",
    "tfset_from_leaf_cover",
    "to_graph6",
    "total_forcing_number",
    "trim_tree",
    "zero_forcing_number",
]
