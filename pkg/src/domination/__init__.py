"""
Weighted domination on trees and cacti: parameter algebra, folds and solver driver.
"""

from .tracing import ChoiceTrace, Component, ExtractionError, NodeKind
from .params import DomParams, OpCounter, check_relations, combine_edge, init_params, merge_at_vertex
from .subalgorithms import cycle_like, d_closed_path_like_fold, path_like_fold
from .solver import (NotATreeError, SolveResult, extract_dominating_set, solve_cactus,
                     solve_tree)

__all__ = [
    'ChoiceTrace',
    'Component',
    'ExtractionError',
    'NodeKind',
    'DomParams',
    'OpCounter',
    'check_relations',
    'combine_edge',
    'init_params',
    'merge_at_vertex',
    'cycle_like',
    'd_closed_path_like_fold',
    'path_like_fold',
    'NotATreeError',
    'SolveResult',
    'extract_dominating_set',
    'solve_cactus',
    'solve_tree',
]
