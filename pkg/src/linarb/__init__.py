"""Linear k-forest decompositions of graphs and graph products."""

from .bounds import BoundReport, chain_check, lower_bound, product_bound_interval
from .construct import (
    alternating_split,
    bipartite_matchings,
    compose_cartesian,
    compose_direct,
    compose_join,
    compose_lexicographic,
    compose_strong,
    decompose_complete,
    decompose_cycle,
    decompose_path,
    decompose_petersen,
    fold_cartesian,
)
from .exact import ExactResult, brute_force_la_k, exact_la_k, feasible_with_t_classes
from .forests import Decomposition, LinearKForest, Violation, ViolationKind, verify_decomposition, verify_forest
from .graph import FamilySpec, Graph, ParameterError, build_family, degree_stats
from .products import ProductKind, layer_embed, product

__version__ = "0.1.0"
