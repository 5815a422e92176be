"""Graph constructors: named families, periodic lattices, random models.

Deterministic families build exact topologies (star, hub-hub joined star,
ceiling fan, cycle, complete, Petersen, periodic lattices of degree 3/4/6).
Random models cover preferential attachment, Erdos-Renyi, triad-closing
growth, duplication-divergence, and the two small-world constructions; each
takes an integer seed and is reproducible from it.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConnectivityRetriesError, DisconnectedError, InvalidFamilyParamsError
from .graph import Graph, build_graph, largest_component, validate

__all__ = [
    "GeneratorSpec",
    "star",
    "hubhub_star",
    "ceiling_fan",
    "cycle",
    "complete",
    "petersen",
    "lattice",
    "random_regular",
    "barabasi_albert",
    "erdos_renyi",
    "holme_kim",
    "duplication_divergence",
    "watts_strogatz",
    "newman_watts",
    "generate_family",
    "generate_random",
    "generate",
]

_FAMILY_MODELS = ("star", "hubhub", "cf", "cycle", "complete", "petersen", "lattice")
_RANDOM_MODELS = ("regular", "ba", "er", "hk", "dd", "ws", "nw")


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidFamilyParamsError(msg)


# ---------------------------------------------------------------------------
# deterministic families


def star(n: int) -> Graph:
    """Hub 0 joined to leaves 1..n-1."""
    _check(n >= 3, f"star needs n >= 3, got {n}")
    return build_graph(n, [(0, i, 1.0) for i in range(1, n)])


def hubhub_star(n: int) -> Graph:
    """Two n-vertex stars joined by a hub-hub edge; 2n vertices total.

    Hubs are vertices 0 and n; panel leaves follow their hub.
    """
    _check(n >= 2, f"hub-hub star needs panel size >= 2, got {n}")
    edges = [(0, n, 1.0)]
    edges += [(0, i, 1.0) for i in range(1, n)]
    edges += [(n, n + i, 1.0) for i in range(1, n)]
    return build_graph(2 * n, edges)


def ceiling_fan(n: int) -> Graph:
    """Star with its leaves perfectly matched in pairs; n must be odd."""
    _check(n >= 3 and n % 2 == 1, f"ceiling fan needs odd n >= 3, got {n}")
    edges = [(0, i, 1.0) for i in range(1, n)]
    edges += [(i, i + 1, 1.0) for i in range(1, n, 2)]
    return build_graph(n, edges)


def cycle(n: int) -> Graph:
    _check(n >= 3, f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n, 1.0) for i in range(n)])


def complete(n: int) -> Graph:
    _check(n >= 2, f"complete graph needs n >= 2, got {n}")
    return build_graph(n, [(i, j, 1.0) for i in range(n) for j in range(i + 1, n)])


def petersen() -> Graph:
    """The Petersen graph: 10 vertices, 3-regular."""
    edges = [(i, (i + 1) % 5, 1.0) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5, 1.0) for i in range(5)]
    edges += [(i, i + 5, 1.0) for i in range(5)]
    return build_graph(10, edges)


_LATTICE_DEFAULTS = {"hex": (6, 12), "square": (10, 10), "tri": (7, 14)}


def lattice(kind: str, rows: int | None = None, cols: int | None = None) -> Graph:
    """Periodic lattice of degree 3 ("hex", brick-wall embedding), 4
    ("square"), or 6 ("tri", square plus one diagonal direction).

    Defaults reproduce 72-, 100-, and 98-vertex instances respectively.
    """
    if kind not in _LATTICE_DEFAULTS:
        raise InvalidFamilyParamsError(f"lattice kind must be hex|square|tri, got {kind!r}")
    if rows is None or cols is None:
        rows, cols = _LATTICE_DEFAULTS[kind]
    _check(rows >= 3 or (kind == "hex" and rows >= 2), f"{kind}: rows too small ({rows})")
    _check(cols >= 3, f"{kind}: cols too small ({cols})")
    if kind == "hex":
        _check(rows % 2 == 0, f"hex lattice needs even rows, got {rows}")
        _check(cols % 2 == 0, f"hex lattice needs even cols, got {cols}")

    def vid(r: int, c: int) -> int:
        return (r % rows) * cols + (c % cols)

    edges = set()

    def add(a: int, b: int) -> None:
        if a != b:
            edges.add((min(a, b), max(a, b)))

    for r in range(rows):
        for c in range(cols):
            add(vid(r, c), vid(r, c + 1))
            if kind == "square" or kind == "tri":
                add(vid(r, c), vid(r + 1, c))
            if kind == "tri":
                add(vid(r, c), vid(r + 1, c + 1))
            if kind == "hex" and (r + c) % 2 == 0:
                add(vid(r, c), vid(r + 1, c))

    g = build_graph(rows * cols, [(a, b, 1.0) for a, b in sorted(edges)])
    validate(g)
    return g


# ---------------------------------------------------------------------------
# random models


def random_regular(n: int, k: int, seed: int, max_retries: int = 200) -> Graph:
    """Random k-regular simple connected graph.

    Pairs stubs one edge at a time, skipping self-pairs and repeats and
    restarting on a dead end, then retries the whole draw if disconnected.
    """
    _check(3 <= n and 2 <= k < n, f"random regular needs n > k >= 2, got n={n}, k={k}")
    _check((n * k) % 2 == 0, f"n*k must be even, got n={n}, k={k}")
    rng = np.random.default_rng(seed)

    def draw_simple():
        stubs = list(np.repeat(np.arange(n), k))
        edges: set[tuple[int, int]] = set()
        while stubs:
            placed = False
            for _ in range(60):  # cheap random probes before scanning
                i = int(rng.integers(len(stubs)))
                j = int(rng.integers(len(stubs)))
                a, b = int(stubs[i]), int(stubs[j])
                if i == j or a == b or (min(a, b), max(a, b)) in edges:
                    continue
                edges.add((min(a, b), max(a, b)))
                for pos in sorted((i, j), reverse=True):
                    stubs[pos] = stubs[-1]
                    stubs.pop()
                placed = True
                break
            if not placed:
                candidates = [
                    (i, j)
                    for i in range(len(stubs))
                    for j in range(i + 1, len(stubs))
                    if stubs[i] != stubs[j]
                    and (min(stubs[i], stubs[j]), max(stubs[i], stubs[j])) not in edges
                ]
                if not candidates:
                    return None  # dead end, restart
                i, j = candidates[int(rng.integers(len(candidates)))]
                a, b = int(stubs[i]), int(stubs[j])
                edges.add((min(a, b), max(a, b)))
                for pos in sorted((i, j), reverse=True):
                    stubs[pos] = stubs[-1]
                    stubs.pop()
        return edges

    for _ in range(max_retries):
        edges = draw_simple()
        if edges is None:
            continue
        g = build_graph(n, [(a, b, 1.0) for a, b in edges])
        try:
            validate(g)
        except DisconnectedError:
            continue
        return g
    raise ConnectivityRetriesError(f"no simple connected {k}-regular graph in {max_retries} tries")


def _preferential_pick(rng, repeated_nodes, exclude, count):
    """``count`` distinct vertices drawn proportional to current degree."""
    chosen: list[int] = []
    banned = set(exclude)
    while len(chosen) < count:
        v = int(repeated_nodes[rng.integers(len(repeated_nodes))])
        if v not in banned:
            chosen.append(v)
            banned.add(v)
    return chosen


def barabasi_albert(n: int, m: int, seed: int) -> Graph:
    """Preferential attachment from a complete core on m+1 vertices.

    Each later vertex attaches to m distinct existing vertices chosen with
    probability proportional to degree; the edge count is
    m*(m+1)/2 + (n-m-1)*m.
    """
    _check(1 <= m < n, f"need 1 <= m < n, got m={m}, n={n}")
    _check(n >= m + 2, f"need n >= m+2, got n={n}, m={m}")
    rng = np.random.default_rng(seed)
    edges = [(i, j) for i in range(m + 1) for j in range(i + 1, m + 1)]
    repeated: list[int] = []
    for a, b in edges:
        repeated += [a, b]
    for v in range(m + 1, n):
        targets = _preferential_pick(rng, repeated, {v}, m)
        for u in targets:
            edges.append((u, v))
            repeated += [u, v]
    return build_graph(n, [(a, b, 1.0) for a, b in edges])


def erdos_renyi(n: int, p: float, seed: int, lcc: bool = False) -> Graph:
    """G(n, p); possibly disconnected unless reduced with ``lcc=True``."""
    _check(n >= 2 and 0.0 < p <= 1.0, f"need n >= 2 and 0 < p <= 1, got n={n}, p={p}")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    mask = rng.random(iu.size) < p
    g = build_graph(n, [(int(a), int(b), 1.0) for a, b in zip(iu[mask], ju[mask])])
    return largest_component(g) if lcc else g


def holme_kim(n: int, m: int, pt: float, seed: int) -> Graph:
    """Preferential attachment with triad closure.

    Grows like the complete-core preferential model, but after each
    preferential link the next link closes a triangle (to a random neighbor
    of the previous target) with probability pt.
    """
    _check(1 <= m < n and n >= m + 2, f"need 1 <= m < n-1, got m={m}, n={n}")
    _check(0.0 <= pt <= 1.0, f"triad probability must be in [0, 1], got {pt}")
    rng = np.random.default_rng(seed)
    edges = {(i, j) for i in range(m + 1) for j in range(i + 1, m + 1)}
    neighbors = {i: {j for j in range(m + 1) if j != i} for i in range(m + 1)}
    repeated: list[int] = []
    for a, b in edges:
        repeated += [a, b]
    for v in range(m + 1, n):
        neighbors[v] = set()
        prev = None
        added = 0
        while added < m:
            u = None
            if prev is not None and rng.random() < pt:
                candidates = [w for w in neighbors[prev] if w != v and w not in neighbors[v]]
                if candidates:
                    u = int(candidates[int(rng.integers(len(candidates)))])
            if u is None:
                u = _preferential_pick(rng, repeated, {v} | neighbors[v], 1)[0]
            edges.add((min(u, v), max(u, v)))
            neighbors[u].add(v)
            neighbors[v].add(u)
            repeated += [u, v]
            prev = u
            added += 1
    return build_graph(n, [(a, b, 1.0) for a, b in sorted(edges)])


def duplication_divergence(
    n: int, p: float, seed: int, lcc: bool = False, max_step_retries: int = 50
) -> Graph:
    """Duplicate a random vertex; the replica keeps each of its neighbors with
    probability p and links to the original with probability p.

    Steps producing an isolated replica are redrawn a bounded number of
    times, then fall back to a single link to the original. Use ``lcc=True``
    to reduce to the largest component.
    """
    _check(n >= 3 and 0.0 < p <= 1.0, f"need n >= 3 and 0 < p <= 1, got n={n}, p={p}")
    rng = np.random.default_rng(seed)
    neighbors: dict[int, set[int]] = {0: {1}, 1: {0}}
    for v in range(2, n):
        links: set[int] = set()
        for _ in range(max_step_retries):
            proto = int(rng.integers(v))
            links = {u for u in neighbors[proto] if rng.random() < p}
            if rng.random() < p:
                links.add(proto)
            if links:
                break
        else:
            links = {int(rng.integers(v))}
        neighbors[v] = links
        for u in links:
            neighbors[u].add(v)
    edges = [(u, v, 1.0) for v in neighbors for u in neighbors[v] if u < v]
    g = build_graph(n, edges)
    return largest_component(g) if lcc else g


def _ring_edges(n: int, k: int):
    _check(k % 2 == 0 and 2 <= k < n, f"ring degree must be even with 2 <= k < n, got k={k}")
    return [(i, (i + j) % n) for i in range(n) for j in range(1, k // 2 + 1)]


def watts_strogatz(n: int, k: int, p: float, seed: int, max_retries: int = 100) -> Graph:
    """Ring of degree k with each edge rewired with probability p; retried
    until connected."""
    _check(0.0 <= p <= 1.0, f"rewiring probability must be in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    for _ in range(max_retries):
        edge_set = {(min(a, b), max(a, b)) for a, b in _ring_edges(n, k)}
        for a, b in _ring_edges(n, k):
            if rng.random() >= p:
                continue
            key = (min(a, b), max(a, b))
            if key not in edge_set:
                continue  # already rewired away
            choices = [w for w in range(n) if w != a and (min(a, w), max(a, w)) not in edge_set]
            if not choices:
                continue
            w = int(choices[int(rng.integers(len(choices)))])
            edge_set.remove(key)
            edge_set.add((min(a, w), max(a, w)))
        g = build_graph(n, [(a, b, 1.0) for a, b in sorted(edge_set)])
        try:
            validate(g)
            return g
        except DisconnectedError:
            continue
    raise ConnectivityRetriesError(f"no connected rewiring found in {max_retries} tries")


def newman_watts(n: int, k: int, p: float, seed: int) -> Graph:
    """Ring of degree k plus, per ring edge with probability p, one shortcut
    between two random distinct vertices; the ring keeps it connected."""
    _check(0.0 <= p <= 1.0, f"shortcut probability must be in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    edge_set = {(min(a, b), max(a, b)) for a, b in _ring_edges(n, k)}
    for _ in range(len(edge_set)):
        if rng.random() >= p:
            continue
        for _ in range(50):
            a = int(rng.integers(n))
            b = int(rng.integers(n))
            key = (min(a, b), max(a, b))
            if a != b and key not in edge_set:
                edge_set.add(key)
                break
    return build_graph(n, [(a, b, 1.0) for a, b in sorted(edge_set)])


# ---------------------------------------------------------------------------
# model-string dispatch


@dataclass(frozen=True)
class GeneratorSpec:
    """Parsed model description: name plus keyword parameters.

    String form: ``name:key=value,key=value`` (e.g. ``ws:N=100,k=6,p=0.1``,
    ``lattice:kind=square,rows=4,cols=4``, ``petersen``).
    """

    model: str
    params: dict = field(default_factory=dict)
    seed: int | None = None

    @classmethod
    def parse(cls, text: str, seed: int | None = None) -> "GeneratorSpec":
        name, _, rest = text.partition(":")
        name = name.strip().lower()
        if name not in _FAMILY_MODELS + _RANDOM_MODELS:
            raise InvalidFamilyParamsError(f"unknown model {name!r}")
        params: dict = {}
        if rest.strip():
            for part in rest.split(","):
                key, _, value = part.partition("=")
                key = key.strip()
                value = value.strip()
                if not key or not value:
                    raise InvalidFamilyParamsError(f"bad model parameter {part!r}")
                if key in ("kind",):
                    params[key] = value
                elif key in ("p", "pt"):
                    params[key] = float(value)
                else:
                    params[key] = int(value)
        return cls(model=name, params=params, seed=seed)

    @property
    def is_random(self) -> bool:
        return self.model in _RANDOM_MODELS


def generate_family(spec: GeneratorSpec) -> Graph:
    """Build a deterministic family instance from a spec."""
    p = dict(spec.params)
    model = spec.model
    if model == "star":
        return star(p["N"])
    if model == "hubhub":
        return hubhub_star(p["N"])
    if model == "cf":
        return ceiling_fan(p["N"])
    if model == "cycle":
        return cycle(p["N"])
    if model == "complete":
        return complete(p["N"])
    if model == "petersen":
        return petersen()
    if model == "lattice":
        return lattice(p.get("kind", "square"), p.get("rows"), p.get("cols"))
    raise InvalidFamilyParamsError(f"{model!r} is not a deterministic family")


def generate_random(spec: GeneratorSpec, lcc: bool = False) -> Graph:
    """Build a seeded random instance from a spec."""
    if spec.seed is None:
        raise InvalidFamilyParamsError(f"model {spec.model!r} requires a seed")
    p = dict(spec.params)
    seed = spec.seed
    model = spec.model
    if model == "regular":
        return random_regular(p["N"], p["k"], seed)
    if model == "ba":
        return barabasi_albert(p["N"], p["m"], seed)
    if model == "er":
        return erdos_renyi(p["N"], p["p"], seed, lcc=lcc)
    if model == "hk":
        return holme_kim(p["N"], p["m"], p.get("pt", 0.5), seed)
    if model == "dd":
        return duplication_divergence(p["N"], p["p"], seed, lcc=lcc)
    if model == "ws":
        return watts_strogatz(p["N"], p["k"], p["p"], seed)
    if model == "nw":
        return newman_watts(p["N"], p["k"], p["p"], seed)
    raise InvalidFamilyParamsError(f"{model!r} is not a random model")


def generate(spec: GeneratorSpec, lcc: bool = False) -> Graph:
    """Dispatch to the family or random constructor."""
    if spec.is_random:
        return generate_random(spec, lcc=lcc)
    return generate_family(spec)
