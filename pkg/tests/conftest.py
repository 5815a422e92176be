"""Shared builders for family graphs with per-role self-loop strengths."""
import numpy as np

from loopfix import generators


def star_with_loops(n, alpha, beta):
    """n-vertex star: beta on the hub (vertex 0), alpha on every leaf."""
    g = generators.star(n)
    return g.with_self_loops(np.array([beta] + [alpha] * (n - 1)))


def hubhub_with_loops(n, alpha, gamma):
    """Hub-hub joined star (2n vertices): gamma on hubs 0 and n, alpha on leaves."""
    g = generators.hubhub_star(n)
    loops = np.full(2 * n, float(alpha))
    loops[0] = loops[n] = gamma
    return g.with_self_loops(loops)


def ceiling_fan_with_loops(n, eps, beta):
    """Ceiling fan: beta on the hub (vertex 0), eps on every leaf."""
    g = generators.ceiling_fan(n)
    loops = np.full(n, float(eps))
    loops[0] = beta
    return g.with_self_loops(loops)


def regular_with_loops(g, ell):
    """Constant loop strength on an already-regular graph."""
    return g.with_self_loops(np.full(g.n, float(ell)))


def random_connected_graph(rng, n_max=40):
    """Random connected Erdos-Renyi-style graph with a random landscape."""
    from loopfix.graph import build_graph, validate
    from loopfix.errors import DisconnectedError

    while True:
        n = int(rng.integers(3, n_max + 1))
        p = min(1.0, 2.5 * np.log(n) / n)
        iu, ju = np.triu_indices(n, k=1)
        mask = rng.random(iu.size) < p
        if mask.sum() == 0:
            continue
        g = build_graph(n, [(int(a), int(b), 1.0) for a, b in zip(iu[mask], ju[mask])])
        try:
            validate(g)
        except DisconnectedError:
            continue
        loops = rng.uniform(0.0, 2.0, size=n)
        loops[rng.random(n) < 0.3] = 0.0  # mix in loop-free vertices
        return g.with_self_loops(loops)
