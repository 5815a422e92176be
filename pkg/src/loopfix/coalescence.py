"""Expected coalescence times of two lazy random walkers on a graph.

Two walkers occupy distinct vertices; each update step, one of the two (picked
with probability 1/2 each) takes a one-step move of the walk, and the pair is
absorbed when the walkers meet. The pairwise expected meeting times eta_ij
solve, for i != j,

    eta_ij = 1 + (1/2) * sum_k (p_ik * eta_kj + p_jk * eta_ik),  eta_kk = 0,

a nonsingular linear system on the n*(n-1)/2 unordered-pair space (the
diagonal is absorbing and the underlying graph is connected). From the
solution we form the remeeting quantity

    eta_i = 1 + sum_k p_ik * eta_ik,

and the step-weighted scalar averages

    eta1 = sum_i pi_i * eta_i - 1,
    eta2 = sum_i pi_i * eta_i * (1 + p_ii) - 2,
    eta3 = sum_i pi_i * eta_i * (1 + p_ii + p2_ii) - 3,

which also equal the definitional sums over pairs,
eta^(m) = sum_ij pi_i * P^m_ij * eta_ij; both routes are computed and compared
on small graphs as a cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sps
import scipy.sparse.linalg as spsla

from .errors import CrossCheckError, GraphError, SolverConvergenceError
from .graph import Graph, validate
from .walk import WalkCache, transition_matrix

__all__ = [
    "CoalescenceResult",
    "solve_pairwise_eta",
    "remeeting_times",
    "eta_series",
    "recurrence_residual",
    "compute",
]

_CROSS_CHECK_MAX_N = 200
_CROSS_CHECK_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class CoalescenceResult:
    """Pairwise meeting times, remeeting vector, and scalar averages."""

    eta: np.ndarray
    eta_i: np.ndarray
    eta1: float
    eta2: float
    eta3: float


def _pair_system(p1: np.ndarray):
    """Sparse (I - M) and pair indexing for the unordered-pair chain."""
    n = p1.shape[0]
    n_pairs = n * (n - 1) // 2
    # pair (i, j) with i < j maps to offset[i] + (j - i - 1)
    offsets = np.concatenate(([0], np.cumsum(np.arange(n - 1, 0, -1))))

    row_nz = [np.nonzero(p1[i] > 0.0)[0] for i in range(n)]
    row_pr = [p1[i, idx] for i, idx in enumerate(row_nz)]

    rows, cols, data = [], [], []

    def emit(pair_idx, moving_row, moving_probs, other):
        # one walker moves along its row, the partner stays at `other`
        for k, pk in zip(moving_row, moving_probs):
            if k == other:
                continue  # walkers meet: absorbed, eta contribution 0
            a, b = (k, other) if k < other else (other, k)
            rows.append(pair_idx)
            cols.append(offsets[a] + (b - a - 1))
            data.append(0.5 * pk)

    for i in range(n):
        base = offsets[i]
        for j in range(i + 1, n):
            pair_idx = base + (j - i - 1)
            emit(pair_idx, row_nz[i], row_pr[i], j)
            emit(pair_idx, row_nz[j], row_pr[j], i)

    m = sps.coo_matrix((data, (rows, cols)), shape=(n_pairs, n_pairs)).tocsr()
    return m, offsets


def _unpack(x: np.ndarray, n: int, offsets: np.ndarray) -> np.ndarray:
    eta = np.zeros((n, n), dtype=float)
    for i in range(n - 1):
        seg = x[offsets[i] : offsets[i + 1]]
        eta[i, i + 1 :] = seg
        eta[i + 1 :, i] = seg
    return eta


def solve_pairwise_eta(
    g: Graph,
    w: WalkCache | None = None,
    method: str = "direct",
    tol: float = 1e-12,
    max_sweeps: int = 10**6,
    omega: float = 1.0,
) -> np.ndarray:
    """Solve the pairwise meeting-time system; returns a symmetric (n, n) matrix.

    ``method="direct"`` factorizes the sparse pair system; ``method="jacobi"``
    runs the (optionally damped) fixed-point sweep
    x <- (1 - omega) * x + omega * (1 + M x) until the residual drops below
    ``tol`` in the max norm.
    """
    validate(g)
    if g.n < 2:
        raise GraphError("need at least two vertices for meeting times")
    if w is None:
        w = transition_matrix(g)
    m, offsets = _pair_system(w.p1)
    ones = np.ones(m.shape[0])

    if method == "direct":
        system = sps.identity(m.shape[0], format="csc") - m
        # MMD(A^T + A) ordering keeps fill-in manageable on the pair chain
        lu = spsla.splu(system.tocsc(), permc_spec="MMD_AT_PLUS_A")
        x = lu.solve(ones)
    elif method == "jacobi":
        if not (0.0 < omega <= 1.0):
            raise GraphError(f"damping factor must be in (0, 1], got {omega}")
        x = ones.copy()
        for _ in range(max_sweeps):
            fx = 1.0 + m.dot(x)
            resid = np.max(np.abs(fx - x))
            x = (1.0 - omega) * x + omega * fx
            if resid < tol:
                break
        else:
            raise SolverConvergenceError(
                f"fixed-point sweep residual {resid:.3e} above {tol:.1e} "
                f"after {max_sweeps} sweeps"
            )
    else:
        raise GraphError(f"unknown solver method {method!r}")

    return _unpack(x, g.n, offsets)


def remeeting_times(eta: np.ndarray, w: WalkCache) -> np.ndarray:
    """eta_i = 1 + sum_k p_ik * eta_ik (the diagonal of eta is zero)."""
    return 1.0 + np.einsum("ik,ik->i", w.p1, eta)


def recurrence_residual(eta: np.ndarray, w: WalkCache) -> float:
    """Largest off-diagonal violation of the meeting-time recurrence."""
    pe = w.p1 @ eta
    resid = 1.0 + 0.5 * (pe + pe.T) - eta
    np.fill_diagonal(resid, 0.0)
    return float(np.max(np.abs(resid)))


def eta_series(
    eta: np.ndarray,
    eta_i: np.ndarray,
    w: WalkCache,
    cross_check: bool | None = None,
) -> tuple[float, float, float]:
    """Scalar averages (eta1, eta2, eta3) from the remeeting vector.

    When ``cross_check`` is enabled (default: graphs up to 200 vertices) the
    definitional pair sums are computed independently and must agree within
    1e-8, else ``CrossCheckError`` is raised.
    """
    n = eta.shape[0]
    pii = np.diag(w.p1)
    base = w.pi * eta_i
    eta1 = float(base.sum() - 1.0)
    eta2 = float((base * (1.0 + pii)).sum() - 2.0)
    eta3 = float((base * (1.0 + pii + w.p2_diag)).sum() - 3.0)

    if cross_check is None:
        cross_check = n <= _CROSS_CHECK_MAX_N
    if cross_check:
        p1 = w.p1
        p2 = p1 @ p1
        p3 = p2 @ p1
        defs = (
            float(np.einsum("i,ij,ij->", w.pi, p1, eta)),
            float(np.einsum("i,ij,ij->", w.pi, p2, eta)),
            float(np.einsum("i,ij,ij->", w.pi, p3, eta)),
        )
        for rec, dfn, name in zip((eta1, eta2, eta3), defs, ("eta1", "eta2", "eta3")):
            if abs(rec - dfn) > _CROSS_CHECK_TOL * max(1.0, abs(rec), abs(dfn)):
                raise CrossCheckError(
                    f"{name}: recurrence value {rec!r} vs definitional {dfn!r}"
                )
    return eta1, eta2, eta3


def compute(
    g: Graph,
    w: WalkCache | None = None,
    method: str = "direct",
    cross_check: bool | None = None,
) -> CoalescenceResult:
    """Full pipeline: solve pairs, remeeting vector, scalar averages."""
    if w is None:
        w = transition_matrix(g)
    eta = solve_pairwise_eta(g, w, method=method)
    eta_i = remeeting_times(eta, w)
    eta1, eta2, eta3 = eta_series(eta, eta_i, w, cross_check=cross_check)
    return CoalescenceResult(eta=eta, eta_i=eta_i, eta1=eta1, eta2=eta2, eta3=eta3)
