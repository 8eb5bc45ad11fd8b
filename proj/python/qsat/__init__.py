"""Tree-saturated subgraphs of hypercubes."""

from ._qsat import (
    CubeSubgraph,
    Tree,
    construct,
    contains_tree,
    from_edge_list,
    full_cube,
    is_saturated,
    lower_bound,
    parse_tree,
    to_edge_list,
)

__all__ = [
    "CubeSubgraph",
    "Tree",
    "construct",
    "contains_tree",
    "from_edge_list",
    "full_cube",
    "is_saturated",
    "lower_bound",
    "parse_tree",
    "to_edge_list",
]
