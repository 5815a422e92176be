import math

import numpy as np
import pytest
from conftest import random_connected_graph, regular_with_loops

from loopfix import generators
from loopfix.errors import TooSmallError, UndefinedSigmaError
from loopfix.graph import build_graph
from loopfix.threshold import Regime, classify_regime, critical_ratio, structure_coefficient


class TestCriticalRatio:
    def test_triangle_is_spite(self):
        g = build_graph(3, [(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0)])
        res = critical_ratio(g)
        assert res.bc_star == pytest.approx(-2.0, abs=1e-12)
        assert res.regime is Regime.SPITE

    def test_loop_free_star3_neutral(self):
        res = critical_ratio(generators.star(3))
        assert res.regime is Regime.NEUTRAL_INFINITE
        assert math.isinf(res.bc_star)

    def test_loop_free_four_cycle_neutral(self):
        res = critical_ratio(generators.cycle(4))
        assert res.regime is Regime.NEUTRAL_INFINITE

    def test_regular_closed_form_agreement(self):
        from loopfix.closed_forms import bc_regular

        for g, k in ((generators.cycle(7), 2), (generators.petersen(), 3)):
            for ell in (0.0, 0.8, math.log(k) if k > 1 else 0.5):
                engine = critical_ratio(regular_with_loops(g, ell))
                closed = bc_regular(g.n, k, ell)
                assert engine.bc_star == pytest.approx(closed.bc_star, rel=1e-10)
                assert engine.regime == closed.regime

    def test_two_path_rejected(self):
        with pytest.raises(TooSmallError):
            critical_ratio(build_graph(2, [(0, 1, 1.0)]))

    def test_magnitude_exceeds_one(self):
        rng = np.random.default_rng(12)
        finite = 0
        for _ in range(500):
            g = random_connected_graph(rng, n_max=20)
            res = critical_ratio(g)
            if res.regime is not Regime.NEUTRAL_INFINITE:
                assert abs(res.bc_star) > 1.0
                finite += 1
        assert finite > 400

    def test_scale_invariance(self):
        rng = np.random.default_rng(13)
        g = random_connected_graph(rng, n_max=15)
        scaled = build_graph(g.n, [(i, j, 3.25 * w) for i, j, w in g.edges()]).with_self_loops(
            3.25 * g.self_loops
        )
        a, b = critical_ratio(g), critical_ratio(scaled)
        assert a.regime == b.regime
        if a.regime is not Regime.NEUTRAL_INFINITE:
            assert a.bc_star == pytest.approx(b.bc_star, rel=1e-9)

    def test_jacobi_method(self):
        g = regular_with_loops(generators.cycle(6), 0.5)
        assert critical_ratio(g, method="jacobi").bc_star == pytest.approx(
            critical_ratio(g).bc_star, rel=1e-9
        )


class TestClassifyRegime:
    def test_sign_rules(self):
        assert classify_regime(1.0, 0.5) is Regime.COOPERATION
        assert classify_regime(1.0, -0.5) is Regime.SPITE
        assert classify_regime(2.0 / 3.0, 0.0) is Regime.NEUTRAL_INFINITE

    def test_relative_tolerance(self):
        assert classify_regime(1e6, 1e-9) is Regime.NEUTRAL_INFINITE
        assert classify_regime(1.0, 1e-9) is Regime.COOPERATION


class TestStructureCoefficient:
    def test_simple_values(self):
        assert structure_coefficient(3.0) == pytest.approx(2.0)
        assert structure_coefficient(-2.0) == pytest.approx(1.0 / 3.0)

    @pytest.mark.parametrize("x", [1.5, 2.0, 10.0, -2.0])
    def test_involution(self, x):
        assert structure_coefficient(structure_coefficient(x)) == pytest.approx(x, abs=1e-12)

    def test_undefined_cases(self):
        with pytest.raises(UndefinedSigmaError):
            structure_coefficient(1.0)
        with pytest.raises(UndefinedSigmaError):
            structure_coefficient(math.inf)

    def test_attached_to_results(self):
        res = critical_ratio(regular_with_loops(generators.cycle(5), 0.0))
        assert res.sigma == pytest.approx(structure_coefficient(res.bc_star), abs=1e-12)
        assert (res.sigma > 1.0) == (res.regime is Regime.COOPERATION)
