"""Exact counts of homomorphisms and weak homomorphisms from paths into
paths and rectangular grid graphs.

All counting functions return native python ints computed with exact
arbitrary-precision arithmetic.
"""

from pathhom._core import (
    SimpleGraph,
    anchor_orbit,
    binomial,
    brute_force_count,
    cartesian_product,
    dp_walk_count,
    hom_anchored,
    hom_anchored_reduced,
    hom_total,
    ladder_shortest_path_count,
    multinomial3,
    path_graph,
    path_walk_dp,
    shortest_path_count,
    whom_anchored,
    whom_anchored_closed,
    whom_grid_anchored,
    whom_grid_total,
    whom_total,
)

__all__ = [
    "SimpleGraph",
    "anchor_orbit",
    "binomial",
    "brute_force_count",
    "cartesian_product",
    "dp_walk_count",
    "hom_anchored",
    "hom_anchored_reduced",
    "hom_total",
    "ladder_shortest_path_count",
    "multinomial3",
    "path_graph",
    "path_walk_dp",
    "shortest_path_count",
    "whom_anchored",
    "whom_anchored_closed",
    "whom_grid_anchored",
    "whom_grid_total",
    "whom_total",
]
