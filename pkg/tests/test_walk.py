import numpy as np
import pytest
from conftest import random_connected_graph, regular_with_loops, star_with_loops

from loopfix import generators
from loopfix.errors import IsolatedVertexError, UnsupportedStepError
from loopfix.graph import build_graph
from loopfix.walk import n_step_return, stationary_distribution, transition_matrix


class TestTransitionMatrix:
    def test_star_leaf_probabilities(self):
        alpha, beta, n = 0.75, 1.25, 6
        g = star_with_loops(n, alpha, beta)
        p = transition_matrix(g).p1
        leaf = 1
        assert p[leaf, leaf] == pytest.approx(alpha / (1 + alpha), abs=1e-15)
        assert p[leaf, 0] == pytest.approx(1 / (1 + alpha), abs=1e-15)
        assert p[0, 0] == pytest.approx(beta / (n - 1 + beta), abs=1e-15)
        assert p[0, leaf] == pytest.approx(1 / (n - 1 + beta), abs=1e-15)

    def test_two_path_no_loops(self):
        g = build_graph(2, [(0, 1, 1.0)])
        p = transition_matrix(g).p1
        assert p[0, 1] == 1.0 and p[1, 0] == 1.0

    def test_triangle_unit_loops(self):
        g = regular_with_loops(generators.complete(3), 1.0)
        p = transition_matrix(g).p1
        assert np.allclose(p, 1.0 / 3.0)

    def test_isolated_vertex(self):
        g = build_graph(1, [])
        with pytest.raises(IsolatedVertexError):
            transition_matrix(g)

    def test_row_sums(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            g = random_connected_graph(rng, n_max=25)
            p = transition_matrix(g).p1
            assert np.max(np.abs(p.sum(axis=1) - 1.0)) < 1e-12


class TestStationary:
    def test_star_formula(self):
        alpha, beta, n = 0.4, 2.0, 9
        g = star_with_loops(n, alpha, beta)
        pi = stationary_distribution(g)
        expected_hub = (n - 1 + beta) / (2 * n + n * alpha - 2 - alpha + beta)
        assert pi[0] == pytest.approx(expected_hub, abs=1e-14)

    def test_hubhub_formula(self):
        alpha, gamma, n = 0.6, 1.5, 7
        g = generators.hubhub_star(n)
        loops = np.full(2 * n, alpha)
        loops[0] = loops[n] = gamma
        pi = stationary_distribution(g.with_self_loops(loops))
        expected_hub = (n + gamma) / (4 * n + 2 * gamma + 2 * n * alpha - 2 * alpha - 2)
        assert pi[0] == pytest.approx(expected_hub, abs=1e-14)
        assert pi[n] == pytest.approx(expected_hub, abs=1e-14)

    def test_regular_uniform(self):
        g = regular_with_loops(generators.petersen(), 0.8)
        assert np.allclose(stationary_distribution(g), 0.1, atol=1e-14)

    def test_detailed_balance_random_graphs(self):
        rng = np.random.default_rng(1)
        for _ in range(200):
            g = random_connected_graph(rng, n_max=15)
            cache = transition_matrix(g)
            flux = cache.pi[:, None] * cache.p1
            assert np.max(np.abs(flux - flux.T)) < 1e-12

    def test_left_eigenvector(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            g = random_connected_graph(rng, n_max=25)
            cache = transition_matrix(g)
            assert np.max(np.abs(cache.pi @ cache.p1 - cache.pi)) < 1e-12


class TestReturnProbabilities:
    def test_star_leaf_two_step(self):
        alpha, beta, n = 0.3, 0.9, 5
        g = star_with_loops(n, alpha, beta)
        p = transition_matrix(g).p1
        p2 = n_step_return(g, 2)
        expected = p[1, 1] ** 2 + p[1, 0] * p[0, 1]
        assert p2[1] == pytest.approx(expected, abs=1e-15)

    def test_regular_closed_form(self):
        k, ell = 3, 0.7
        g = regular_with_loops(generators.petersen(), ell)
        p2 = n_step_return(g, 2)
        assert np.allclose(p2, (ell**2 + k) / (k + ell) ** 2, atol=1e-15)

    def test_star3_hub_no_loops(self):
        g = generators.star(3)
        assert n_step_return(g, 2)[0] == pytest.approx(1.0)

    def test_matches_dense_powers(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            g = random_connected_graph(rng, n_max=50)
            p = transition_matrix(g).p1
            assert np.allclose(n_step_return(g, 2), np.diag(p @ p), atol=1e-13)
            assert np.allclose(n_step_return(g, 3), np.diag(p @ p @ p), atol=1e-13)

    def test_unsupported_step(self):
        with pytest.raises(UnsupportedStepError):
            n_step_return(generators.cycle(4), 4)

    def test_loop_boost_monotonicity(self):
        rng = np.random.default_rng(4)
        for _ in range(10):
            g = random_connected_graph(rng, n_max=20)
            bumped = g.with_self_loops(g.self_loops + 0.5)
            p_before = transition_matrix(g).p1
            p_after = transition_matrix(bumped).p1
            assert np.all(np.diag(p_after) > np.diag(p_before))
            off = ~np.eye(g.n, dtype=bool) & (g.edge_weights > 0)
            assert np.all(p_after[off] < p_before[off])
