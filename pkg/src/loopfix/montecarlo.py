"""Fixation-probability estimation by simulated death-birth dynamics.

Strategies are 0 (defect) and 1 (cooperate). A cooperator pays cost c and
delivers benefit b through the walk weights; payoffs map to reproductive
fitness exp(delta * payoff). Each update kills a uniformly chosen vertex and
fills it with the strategy of a competitor drawn from its neighbors and
itself, weighted by edge/self-loop weight times fitness. Without mutation
the chain absorbs at all-cooperate or all-defect.

``db_step``/``run_trial`` are a readable reference implementation driven by a
numpy Generator; ``estimate_fixation`` runs the compiled kernel with
counter-based per-trial substreams (see kernels module) so estimates are
reproducible and order-independent.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import StepLimitError
from .graph import Graph, validate
from .walk import WalkCache

__all__ = [
    "GameParams",
    "SimEstimate",
    "FixationComparison",
    "payoffs",
    "db_step",
    "run_trial",
    "estimate_fixation",
    "compare_fixation",
    "fit_zero_crossing",
]

DEFAULT_STEP_LIMIT = 10**9


@dataclass(frozen=True)
class GameParams:
    """Donation-game parameters: benefit b, cost c, selection strength delta."""

    b: float
    c: float = 1.0
    delta: float = 0.01

    def __post_init__(self):
        if not (self.b > 0.0 and math.isfinite(self.b)):
            raise ValueError(f"benefit must be positive, got {self.b}")
        if not (self.c > 0.0 and math.isfinite(self.c)):
            raise ValueError(f"cost must be positive, got {self.c}")
        if not (0.0 <= self.delta <= 1.0):
            raise ValueError(f"selection strength must be in [0, 1], got {self.delta}")


@dataclass(frozen=True)
class SimEstimate:
    """Fixation estimate for a single mutant type."""

    trials: int
    fixed_mutant: int
    rho_hat: float
    stderr: float


@dataclass(frozen=True)
class FixationComparison:
    """Paired estimates: cooperator mutants vs defector mutants."""

    coop: SimEstimate
    defect: SimEstimate
    n_times_diff: float


def payoffs(g: Graph, w: WalkCache, state: np.ndarray, params: GameParams) -> np.ndarray:
    """Payoff vector f = -c*s + b*(P s); the self-loop term is included in P."""
    s = np.asarray(state, dtype=float)
    return -params.c * s + params.b * (w.p1 @ s)


def db_step(
    g: Graph,
    w: WalkCache,
    state: np.ndarray,
    params: GameParams,
    rng: np.random.Generator,
) -> np.ndarray:
    """One death-birth update; returns a new state array."""
    n = g.n
    v = int(rng.integers(n))
    f = payoffs(g, w, state, params)
    fitness = np.exp(params.delta * f)
    weights = g.edge_weights[v] * fitness
    weights[v] = g.self_loops[v] * fitness[v]
    probs = weights / weights.sum()
    j = int(rng.choice(n, p=probs))
    new = np.array(state, dtype=np.int8)
    new[v] = state[j]
    return new


def run_trial(
    g: Graph,
    w: WalkCache,
    params: GameParams,
    initial: np.ndarray,
    rng: np.random.Generator,
    step_limit: int = DEFAULT_STEP_LIMIT,
) -> tuple[str, int]:
    """Iterate db_step until absorption; returns ("C" | "D", steps taken)."""
    state = np.array(initial, dtype=np.int8)
    ncoop = int(state.sum())
    if ncoop == 0 or ncoop == g.n:
        raise ValueError("initial state must contain both strategies")
    steps = 0
    while 0 < ncoop < g.n:
        if steps >= step_limit:
            raise StepLimitError(f"no absorption within {step_limit} steps")
        state = db_step(g, w, state, params, rng)
        ncoop = int(state.sum())
        steps += 1
    return ("C" if ncoop == g.n else "D"), steps


def _csr_adjacency(g: Graph):
    ptr = np.zeros(g.n + 1, dtype=np.int64)
    idx_parts = []
    wt_parts = []
    for i in range(g.n):
        nz = np.nonzero(g.edge_weights[i] > 0.0)[0]
        ptr[i + 1] = ptr[i] + nz.size
        idx_parts.append(nz.astype(np.int64))
        wt_parts.append(g.edge_weights[i, nz])
    return ptr, np.concatenate(idx_parts), np.concatenate(wt_parts)


def estimate_fixation(
    g: Graph,
    params: GameParams,
    mutant: str,
    trials: int,
    seed: int,
    step_limit: int = DEFAULT_STEP_LIMIT,
) -> SimEstimate:
    """Monte Carlo fixation probability of a single uniformly placed mutant.

    ``mutant`` is "C" (cooperator invading defectors) or "D" (the reverse).
    Identical (graph, params, mutant, trials, seed) give identical counts.
    """
    validate(g)
    if trials < 1:
        raise ValueError("need at least one trial")
    if mutant not in ("C", "D"):
        raise ValueError(f"mutant must be 'C' or 'D', got {mutant!r}")
    ptr, idx, wt = _csr_adjacency(g)
    strength = g.strengths
    stream = 0 if mutant == "C" else 1
    seeds = kernels.trial_seeds(seed, trials, stream=stream)
    with np.errstate(over="ignore"):
        fixed, limit_hits, _ = kernels.db_fixation_kernel(
            ptr,
            idx,
            wt,
            g.self_loops,
            strength,
            float(params.b),
            float(params.c),
            float(params.delta),
            mutant == "C",
            seeds,
            step_limit,
        )
    if limit_hits:
        raise StepLimitError(f"{limit_hits} trial(s) exceeded {step_limit} steps")
    rho = fixed / trials
    return SimEstimate(
        trials=trials,
        fixed_mutant=int(fixed),
        rho_hat=rho,
        stderr=math.sqrt(rho * (1.0 - rho) / trials),
    )


def compare_fixation(
    g: Graph,
    params: GameParams,
    trials: int,
    seed: int,
    step_limit: int = DEFAULT_STEP_LIMIT,
) -> FixationComparison:
    """Run both mutant directions and report N * (rho_C - rho_D)."""
    est_c = estimate_fixation(g, params, "C", trials, seed, step_limit)
    est_d = estimate_fixation(g, params, "D", trials, seed, step_limit)
    return FixationComparison(
        coop=est_c,
        defect=est_d,
        n_times_diff=g.n * (est_c.rho_hat - est_d.rho_hat),
    )


def fit_zero_crossing(x: np.ndarray, y: np.ndarray) -> tuple[float, float, float]:
    """Least-squares line through (x, y); returns (slope, intercept, x-crossing)."""
    slope, intercept = np.polyfit(np.asarray(x, float), np.asarray(y, float), 1)
    crossing = -intercept / slope if slope != 0.0 else math.inf
    return float(slope), float(intercept), float(crossing)
