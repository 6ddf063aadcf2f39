"""Exact tools for convex embeddings of hypergraphs and projections of
hypersimplices."""

from .configuration import DuplicatePoints, Hypergraph, PointConfiguration
from .constructions import (
    INF,
    cyclic_config,
    direct_sum,
    multipartite_lift,
    n_kd,
    optimal_configuration,
    pyramid,
    simplex,
    simplex_with_barycenter,
)
from .embedding import HypersimplexProjection, is_convex_embedding, is_i_preserving
from .gale import (
    NotSpanning,
    is_j_almost_neighborly_dual,
    is_j_almost_neighborly_primal,
    is_j_neighborly_dual,
    is_j_neighborly_primal,
    transform,
)
from .hypersimplex import Hypersimplex, HypersimplexFace, i_faces
from .partitions import enumerate_partitions, partition_table
from .theorems import Clause, cd_complete, characterize, d_skeleton, d_strong

__version__ = "0.1.0"

__all__ = [
    "DuplicatePoints",
    "Hypergraph",
    "PointConfiguration",
    "INF",
    "cyclic_config",
    "direct_sum",
    "multipartite_lift",
    "n_kd",
    "optimal_configuration",
    "pyramid",
    "simplex",
    "simplex_with_barycenter",
    "HypersimplexProjection",
    "is_convex_embedding",
    "is_i_preserving",
    "NotSpanning",
    "is_j_almost_neighborly_dual",
    "is_j_almost_neighborly_primal",
    "is_j_neighborly_dual",
    "is_j_neighborly_primal",
    "transform",
    "Hypersimplex",
    "HypersimplexFace",
    "i_faces",
    "enumerate_partitions",
    "partition_table",
    "Clause",
    "cd_complete",
    "characterize",
    "d_skeleton",
    "d_strong",
]
