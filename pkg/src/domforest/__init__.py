"""Dominator trees, loop nesting forests and reducibility via vertex contraction."""

from .acyclic import CyclicGraphError, check_acyclic, compute_ad
from .dfs import ArcClass, DfsInfo, classify_arc, run_dfs
from .dsu import NamedDsu
from .gen import GenSpec, enumerate_small, generate
from .general import compute_gd
from .graph import (
    DegenerateGraphError,
    FlowGraph,
    GraphFormatError,
    format_idom,
    normalize,
    parse,
    serialize,
    validate,
)
from .loops import LoopClassification, LoopForest, build_loop_forest, classify_loops, compute_hd
from .oracle import brute_dominators, brute_idom, trees_equal
from .reduce import ReducedGraph, dominators_via_reduction, reduce, reduce_graph

__all__ = [
    "ArcClass",
    "CyclicGraphError",
    "DegenerateGraphError",
    "DfsInfo",
    "FlowGraph",
    "GenSpec",
    "GraphFormatError",
    "LoopClassification",
    "LoopForest",
    "NamedDsu",
    "ReducedGraph",
    "brute_dominators",
    "brute_idom",
    "build_loop_forest",
    "check_acyclic",
    "classify_arc",
    "classify_loops",
    "compute_ad",
    "compute_gd",
    "compute_hd",
    "dominators_via_reduction",
    "enumerate_small",
    "format_idom",
    "generate",
    "normalize",
    "parse",
    "reduce",
    "reduce_graph",
    "run_dfs",
    "serialize",
    "trees_equal",
    "validate",
]
