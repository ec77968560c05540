"""Exact distinguishing numbers of finite permutation group actions.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

from ._dng import (  # noqa: F401
    CapabilityError,
    Graph,
    InputError,
    Labeling,
    PermGroup,
    Permutation,
    all_subgroups,
    automorphism_group,
    catalog_group,
    catalog_names,
    catalog_subgroup,
    complete_graph,
    compose,
    count_surjective_labelings,
    cycle_graph,
    cycle_string,
    derived_subgroup,
    distinguishing_number,
    gluck_expectation,
    graph_distinguishing_number,
    is_distinguishing,
    is_normal,
    is_subgroup,
    left_coset_reps,
    maximal_subgroups,
    motion_bound,
    normal_closure,
    orbit_representatives,
    orbits,
    paper_lower_algorithm,
    paper_upper_algorithm,
    path_graph,
    pointwise_stabilizer,
    preserving_subgroup,
    regular_representation,
    relative_distinguishing_number,
    run_audit,
    subgroup_index,
    surjective_labelings,
    theorem_bound_maximal,
    theorem_bound_stabilizer,
    tymoczko_bound,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "1.0.0"
