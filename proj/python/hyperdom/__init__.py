"""Exact Gromov hyperbolicity for large sparse graphs.

Thin wrapper over the C++ core: graph loading, synthetic generators,
eccentricities, 2-hop hub labels, hierarchical dominating sets and the
hyperbolicity engine itself.
"""

from ._core import (  # noqa: F401
    Graph,
    DominationHierarchy,
    EccentricityTable,
    GraphParseError,
    HubLabels,
    MemoryBudgetError,
    ParameterError,
    bfs_distances,
    bound_lemmas_check,
    brute_force_hyperbolicity,
    build_hub_labels,
    compute_all_eccentricities,
    compute_hyperbolicity,
    delta4,
    derive_sequence,
    from_edges,
    gen_cycle,
    gen_grid,
    gen_grid_perturbed,
    gen_path,
    gen_random_connected,
    gen_tree,
    hierarchical_dominating_set,
    hierarchy_check,
    is_connected,
    largest_biconnected_component,
    lemma_sandwich_check,
    load_edge_list,
    tau4,
    write_edge_list,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
