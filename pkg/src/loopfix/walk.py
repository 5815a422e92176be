"""Random-walk quantities: transition matrix, stationary law, return probabilities.

The walk at vertex i steps to j with probability w_ij / s_i and stays put with
probability loop_i / s_i, where s_i = loop_i + sum_j w_ij is the vertex
strength. The chain is reversible with stationary law pi_i = s_i / sum_j s_j.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IsolatedVertexError, UnsupportedStepError
from .graph import Graph, validate

__all__ = ["WalkCache", "transition_matrix", "stationary_distribution", "n_step_return"]


@dataclass(frozen=True, eq=False)
class WalkCache:
    """One-step transition matrix plus derived quantities.

    p1 is row-stochastic; p2_diag and p3_diag hold the diagonals of its
    second and third powers (probability of returning home in 2 or 3 steps).
    """

    p1: np.ndarray
    pi: np.ndarray
    p2_diag: np.ndarray
    p3_diag: np.ndarray

    def __post_init__(self):
        for arr in (self.p1, self.pi, self.p2_diag, self.p3_diag):
            arr.setflags(write=False)


def transition_matrix(g: Graph) -> WalkCache:
    """Build the walk cache for a valid graph."""
    validate(g)
    s = g.strengths
    if np.any(s <= 0.0):
        raise IsolatedVertexError("every vertex needs an edge or a self-loop")
    p1 = g.edge_weights / s[:, None]
    np.fill_diagonal(p1, g.self_loops / s)
    pi = s / s.sum()
    # diag(P^2) and diag(P^3) without forming powers beyond one matmul
    p2_diag = np.einsum("ij,ji->i", p1, p1)
    p2 = p1 @ p1
    p3_diag = np.einsum("ij,ji->i", p2, p1)
    return WalkCache(p1=p1, pi=pi, p2_diag=p2_diag, p3_diag=p3_diag)


def stationary_distribution(g: Graph) -> np.ndarray:
    """Stationary law of the walk: strengths normalized to sum 1."""
    return transition_matrix(g).pi


def n_step_return(g: Graph, n: int) -> np.ndarray:
    """Diagonal of the n-step transition matrix, for n in {2, 3}."""
    cache = transition_matrix(g)
    if n == 2:
        return cache.p2_diag
    if n == 3:
        return cache.p3_diag
    raise UnsupportedStepError(f"return probabilities support n in {{2, 3}}, got {n}")
