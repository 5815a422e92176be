"""Cooperation thresholds and fixation dynamics on graphs with self-loops.

The package computes the critical benefit-to-cost ratio above which weak
selection favors a cooperator mutant under death-birth updating, where each
vertex carries a self-interaction loop letting it retain its own strategy.
The general engine solves the pairwise coalescing-walk system on any
connected weighted graph; closed-form evaluators cover regular graphs,
stars, hub-hub joined stars, and ceiling fans; a compiled Monte Carlo kernel
estimates fixation probabilities directly.
"""
from . import closed_forms, coalescence, errors, generators, graph, montecarlo, threshold, walk
from .graph import Graph, LandscapeSpec, apply_landscape, build_graph, from_edge_list, to_edge_list
from .montecarlo import GameParams, compare_fixation, estimate_fixation
from .threshold import Regime, ThresholdResult, critical_ratio, structure_coefficient

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "LandscapeSpec",
    "GameParams",
    "Regime",
    "ThresholdResult",
    "apply_landscape",
    "build_graph",
    "from_edge_list",
    "to_edge_list",
    "critical_ratio",
    "structure_coefficient",
    "estimate_fixation",
    "compare_fixation",
    "closed_forms",
    "coalescence",
    "errors",
    "generators",
    "graph",
    "montecarlo",
    "threshold",
    "walk",
]
