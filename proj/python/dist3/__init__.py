"""k-distance graphs and D3 connectivity of trees and unicyclic graphs."""

from ._dist3 import (
    Graph,
    ParseError,
    build_template,
    classify,
    components,
    detect_shape,
    diameter,
    distance_graph,
    distances_from,
    find_h_embedding,
    fixtures,
    inner_nodes,
    is_connected,
    n3_set,
    oracle_d3_connected,
    parse_edge_list,
    power_graph,
    random_tree,
    random_unicyclic,
    run_corpus,
    to_dot,
    to_edge_list,
    to_json,
    verify_certificate,
    verify_corollary,
)

__all__ = [name for name in dir() if not name.startswith("_")]
