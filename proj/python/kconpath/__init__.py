"""Connectivity-keeping paths in k-connected bipartite graphs."""

from ._core import (
    AnchoredPair,
    Graph,
    GraphError,
    GuardExceeded,
    HypothesisError,
    InvariantViolation,
    ParseError,
    PathCertificate,
    brute_force_paths,
    certificate_from_json,
    certificate_to_json,
    classify_pair,
    complete_bipartite,
    exhaustive_connectivity,
    extremal_completion,
    find_anchored_path,
    find_removable_path,
    is_k_connected,
    minimum_cuts,
    random_k_connected_bipartite,
    random_tree,
    read_graph6,
    sharpness_instance,
    tree_removal_exists,
    verify_certificate,
    vertex_connectivity,
    write_graph6,
)

__all__ = [name for name in dir() if not name.startswith("_")]
