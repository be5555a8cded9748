"""Signed double Roman domination: exact solvers, schemes, bounds and the block atlas."""

from ._sdrd import (
    Atlas,
    Graph,
    SizeLimitExceeded,
    alpha_total_dom_min,
    atlas_from_csv,
    block_graph,
    bound_report,
    build_atlas,
    canonical_constellation,
    complete,
    construct,
    count_orbits,
    discharge,
    flower_snark,
    grid,
    is_alpha_total_dominating,
    labeling_from_set,
    load_atlas,
    lower_bound_cubic,
    parse_edge_list,
    petersen,
    random_cubic,
    reproduce,
    scheme_families,
    size_limit,
    solve,
    solve_block,
    validate,
    verify_discharge_certificate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
