"""Weighted undirected graphs with per-vertex self-interaction loops.

A graph holds a symmetric nonnegative weight matrix with zero diagonal plus a
separate vector of self-loop strengths. Self-loops are not edges: they encode
how strongly each vertex retains its own strategy during replacement, and are
usually assigned from a degree-based landscape function.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    AsymmetricWeightsError,
    DisconnectedError,
    DuplicateEdgeError,
    GraphError,
    IndexOutOfRangeError,
    NegativeLandscapeError,
    ParseError,
    SelfEdgeError,
    TooSmallError,
)

__all__ = [
    "Graph",
    "LandscapeSpec",
    "DegreeMetrics",
    "build_graph",
    "apply_landscape",
    "validate",
    "degree_metrics",
    "from_edge_list",
    "to_edge_list",
    "largest_component",
]


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable weighted graph with self-loop strengths.

    ``edge_weights`` is a dense symmetric (n, n) float array with zero
    diagonal; ``self_loops`` is a length-n nonnegative float vector.
    """

    n: int
    edge_weights: np.ndarray
    self_loops: np.ndarray

    def __post_init__(self):
        self.edge_weights.setflags(write=False)
        self.self_loops.setflags(write=False)

    @property
    def degrees(self) -> np.ndarray:
        """Number of positive-weight neighbors of each vertex."""
        return np.count_nonzero(self.edge_weights > 0.0, axis=1)

    @property
    def strengths(self) -> np.ndarray:
        """Self-loop weight plus total incident edge weight, per vertex."""
        return self.self_loops + self.edge_weights.sum(axis=1)

    def with_self_loops(self, self_loops: np.ndarray) -> "Graph":
        loops = np.asarray(self_loops, dtype=float).copy()
        if loops.shape != (self.n,):
            raise GraphError(f"self-loop vector has shape {loops.shape}, expected ({self.n},)")
        if np.any(loops < 0.0) or not np.all(np.isfinite(loops)):
            raise NegativeLandscapeError("self-loop strengths must be finite and >= 0")
        return Graph(self.n, self.edge_weights, loops)

    def edges(self):
        """Iterate (i, j, weight) with i < j over positive-weight edges."""
        ii, jj = np.nonzero(np.triu(self.edge_weights, k=1) > 0.0)
        for i, j in zip(ii.tolist(), jj.tolist()):
            yield i, j, float(self.edge_weights[i, j])


@dataclass(frozen=True)
class DegreeMetrics:
    mean_degree: float
    mean_neighbor_degree: float


_LANDSCAPE_KINDS = (
    "exp_neg_k",
    "ln_k",
    "one_minus_inv_k",
    "inv_k_plus_one",
    "constant",
    "explicit",
    "zero",
)


@dataclass(frozen=True)
class LandscapeSpec:
    """Rule assigning a self-loop strength to each vertex from its degree.

    The degree-function kinds evaluate, for degree k >= 1:

        exp_neg_k        e^(-k)
        ln_k             ln(k)
        one_minus_inv_k  1 - 1/k
        inv_k_plus_one   1/(k + 1)
        constant         a fixed value
        zero             0 (no self-interaction)

    ``explicit`` bypasses degrees and assigns a given per-vertex vector.
    All kinds are nonnegative for every degree >= 1.
    """

    kind: str
    value: float = 0.0
    values: tuple = field(default=())

    def __post_init__(self):
        if self.kind not in _LANDSCAPE_KINDS:
            raise GraphError(f"unknown landscape kind {self.kind!r}")
        if self.kind == "constant" and self.value < 0.0:
            raise NegativeLandscapeError("constant landscape must be >= 0")
        if self.kind == "explicit" and any(v < 0.0 or not np.isfinite(v) for v in self.values):
            raise NegativeLandscapeError("explicit landscape entries must be finite and >= 0")

    @classmethod
    def exp_neg_k(cls):
        return cls("exp_neg_k")

    @classmethod
    def ln_k(cls):
        return cls("ln_k")

    @classmethod
    def one_minus_inv_k(cls):
        return cls("one_minus_inv_k")

    @classmethod
    def inv_k_plus_one(cls):
        return cls("inv_k_plus_one")

    @classmethod
    def constant(cls, value: float):
        return cls("constant", value=float(value))

    @classmethod
    def explicit(cls, values):
        return cls("explicit", values=tuple(float(v) for v in values))

    @classmethod
    def zero(cls):
        return cls("zero")

    def evaluate(self, degrees: np.ndarray) -> np.ndarray:
        """Self-loop strengths for the given degree vector."""
        k = np.asarray(degrees, dtype=float)
        if self.kind == "exp_neg_k":
            return np.exp(-k)
        if self.kind == "ln_k":
            return np.log(k)
        if self.kind == "one_minus_inv_k":
            return 1.0 - 1.0 / k
        if self.kind == "inv_k_plus_one":
            return 1.0 / (k + 1.0)
        if self.kind == "constant":
            return np.full(k.shape, self.value)
        if self.kind == "zero":
            return np.zeros(k.shape)
        vec = np.array(self.values, dtype=float)
        if vec.shape != k.shape:
            raise GraphError(f"explicit landscape has {vec.size} entries for {k.size} vertices")
        return vec


def build_graph(n: int, edges) -> Graph:
    """Build a graph from (i, j, weight) triples; self-loops start at zero.

    Two-element (i, j) entries get weight 1. Duplicate unordered pairs,
    i-i entries, and out-of-range indices are rejected.
    """
    if n < 1:
        raise GraphError("vertex count must be positive")
    w = np.zeros((n, n), dtype=float)
    seen = set()
    for edge in edges:
        if len(edge) == 2:
            i, j = edge
            weight = 1.0
        else:
            i, j, weight = edge
        i, j = int(i), int(j)
        if not (0 <= i < n and 0 <= j < n):
            raise IndexOutOfRangeError(f"edge ({i}, {j}) outside 0..{n - 1}")
        if i == j:
            raise SelfEdgeError(f"edge ({i}, {i}) not allowed; use a landscape for self-loops")
        if weight <= 0.0 or not np.isfinite(weight):
            raise GraphError(f"edge ({i}, {j}) has non-positive weight {weight}")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge ({i}, {j})")
        seen.add(key)
        w[i, j] = w[j, i] = float(weight)
    return Graph(n, w, np.zeros(n, dtype=float))


def apply_landscape(g: Graph, spec: LandscapeSpec) -> Graph:
    """Return a copy of ``g`` whose self-loops follow ``spec``; edges unchanged."""
    return g.with_self_loops(spec.evaluate(g.degrees))


def _connected(edge_weights: np.ndarray) -> bool:
    n = edge_weights.shape[0]
    if n == 1:
        return True
    seen = np.zeros(n, dtype=bool)
    queue = deque([0])
    seen[0] = True
    count = 1
    while queue:
        v = queue.popleft()
        for u in np.nonzero(edge_weights[v] > 0.0)[0]:
            if not seen[u]:
                seen[u] = True
                count += 1
                queue.append(int(u))
    return count == n


def validate(g: Graph, threshold: bool = False) -> None:
    """Raise unless ``g`` is simple, symmetric, nonnegative, and connected.

    With ``threshold=True`` additionally require n >= 3, the smallest size for
    which the critical benefit-to-cost ratio is determinate.
    """
    w = g.edge_weights
    if w.shape != (g.n, g.n):
        raise GraphError(f"weight matrix shape {w.shape} does not match n={g.n}")
    if g.self_loops.shape != (g.n,):
        raise GraphError("self-loop vector length does not match n")
    if not np.all(np.isfinite(w)) or np.any(w < 0.0):
        raise GraphError("edge weights must be finite and >= 0")
    if not np.array_equal(w, w.T):
        raise AsymmetricWeightsError("edge weights must be symmetric")
    if np.any(np.diag(w) != 0.0):
        raise SelfEdgeError("weight-matrix diagonal must be zero")
    if np.any(g.self_loops < 0.0) or not np.all(np.isfinite(g.self_loops)):
        raise NegativeLandscapeError("self-loop strengths must be finite and >= 0")
    if not _connected(w):
        raise DisconnectedError("disconnected graph (use largest-component extraction to proceed)")
    if threshold and g.n < 3:
        raise TooSmallError("threshold analysis requires at least 3 vertices")


def degree_metrics(g: Graph) -> DegreeMetrics:
    """Mean degree and degree-weighted mean neighbor degree <k^2>/<k>."""
    validate(g)
    k = g.degrees.astype(float)
    total = k.sum()
    return DegreeMetrics(
        mean_degree=float(total / g.n),
        mean_neighbor_degree=float((k * k).sum() / total),
    )


def from_edge_list(text: str) -> Graph:
    """Parse whitespace-separated edge-list text into a graph.

    One edge per line as ``u v [weight]``; ``#`` starts a comment line.
    Vertex ids may be arbitrary tokens and are remapped to 0..n-1 in order of
    first appearance. Repeated unordered pairs keep the first weight seen.
    """
    ids: dict[str, int] = {}
    raw_edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) not in (2, 3):
            raise ParseError(f"expected 'u v [weight]', got {stripped!r}", lineno)
        u_tok, v_tok = parts[0], parts[1]
        if u_tok == v_tok:
            raise SelfEdgeError(f"line {lineno}: self-edge {u_tok!r} not allowed")
        weight = 1.0
        if len(parts) == 3:
            try:
                weight = float(parts[2])
            except ValueError:
                raise ParseError(f"bad weight {parts[2]!r}", lineno) from None
            if weight <= 0.0 or not np.isfinite(weight):
                raise ParseError(f"weight must be positive and finite, got {parts[2]}", lineno)
        for tok in (u_tok, v_tok):
            if tok not in ids:
                ids[tok] = len(ids)
        raw_edges.append((ids[u_tok], ids[v_tok], weight))
    if not raw_edges:
        raise ParseError("no edges found")
    n = len(ids)
    w = np.zeros((n, n), dtype=float)
    for i, j, weight in raw_edges:
        if w[i, j] == 0.0:
            w[i, j] = w[j, i] = weight
    return Graph(n, w, np.zeros(n, dtype=float))


def to_edge_list(g: Graph) -> str:
    """Emit ``i j weight`` lines (17 significant digits), sorted by (i, j)."""
    lines = [f"{i} {j} {weight:.17g}" for i, j, weight in g.edges()]
    return "\n".join(lines) + "\n"


def largest_component(g: Graph) -> Graph:
    """Restrict ``g`` to its largest connected component (ties: lowest vertex)."""
    n = g.n
    label = -np.ones(n, dtype=int)
    comp = 0
    for start in range(n):
        if label[start] >= 0:
            continue
        queue = deque([start])
        label[start] = comp
        while queue:
            v = queue.popleft()
            for u in np.nonzero(g.edge_weights[v] > 0.0)[0]:
                if label[u] < 0:
                    label[u] = comp
                    queue.append(int(u))
        comp += 1
    sizes = np.bincount(label)
    keep = np.nonzero(label == int(np.argmax(sizes)))[0]
    w = g.edge_weights[np.ix_(keep, keep)].copy()
    return Graph(len(keep), w, g.self_loops[keep].copy())
