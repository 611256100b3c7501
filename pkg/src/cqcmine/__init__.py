"""Mining contrasting quasi-cliques in two-layer graphs.

A contrasting quasi-clique is a vertex set that is dense (a quasi-clique)
in one layer of a two-layer graph while being sparse in the other.  The
package provides an exact best-first miner with admissible bounds, a
complement-graph baseline, an exhaustive oracle for small instances, and a
synthetic benchmark generator.
"""
from .baseline import BaselineStats, mine_baseline
from .graphs import (
    EdgeListFormatError,
    LayerPair,
    complement,
    load_layer_pair,
    read_edge_list,
    write_edge_list,
)
from .oracle import MAX_ORACLE_VERTICES, OracleResult, enumerate_all
from .patterns import (
    DISQUALIFIED,
    MiningParams,
    Pattern,
    ResultSet,
    contrast,
    interestingness,
    is_cqc,
    is_delta_quasi_clique,
    is_redundant,
    pattern_json_dict,
)
from .search import (
    MiningStats,
    MiningTrace,
    PruneConfig,
    SearchNode,
    edge_diff_bound,
    expand,
    interestingness_bound,
    mine,
    mine_dense_pair,
    prune_candidates,
    root_node,
)
from .synth import SynthConfig, generate

__version__ = "0.1.0"

__all__ = [
    "BaselineStats",
    "DISQUALIFIED",
    "EdgeListFormatError",
    "LayerPair",
    "MAX_ORACLE_VERTICES",
    "MiningParams",
    "MiningStats",
    "MiningTrace",
    "OracleResult",
    "Pattern",
    "PruneConfig",
    "ResultSet",
    "SearchNode",
    "SynthConfig",
    "complement",
    "contrast",
    "edge_diff_bound",
    "enumerate_all",
    "expand",
    "generate",
    "interestingness",
    "interestingness_bound",
    "is_cqc",
    "is_delta_quasi_clique",
    "is_redundant",
    "load_layer_pair",
    "mine",
    "mine_baseline",
    "mine_dense_pair",
    "pattern_json_dict",
    "prune_candidates",
    "read_edge_list",
    "root_node",
    "write_edge_list",
]
