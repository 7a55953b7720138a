"""Hypergraph curvature toolkit: HLRC, HFRC, and HORC."""

from hycurv._core import (
    Hypergraph,
    adjusted_mutual_info,
    adjusted_rand_index,
    cluster_pipeline,
    curvature_histogram,
    gen_chung_lu,
    gen_complete,
    gen_hsbm,
    gen_hypercycle,
    gen_hypergrid,
    gen_hypertree,
    hfrc,
    hlrc,
    horc,
    read_hyperedges,
    wasserstein1,
    wilcoxon_rank_sum,
    write_hyperedges,
)

__all__ = [
    "Hypergraph",
    "adjusted_mutual_info",
    "adjusted_rand_index",
    "cluster_pipeline",
    "curvature_histogram",
    "gen_chung_lu",
    "gen_complete",
    "gen_hsbm",
    "gen_hypercycle",
    "gen_hypergrid",
    "gen_hypertree",
    "hfrc",
    "hlrc",
    "horc",
    "read_hyperedges",
    "wasserstein1",
    "wilcoxon_rank_sum",
    "write_hyperedges",
]
