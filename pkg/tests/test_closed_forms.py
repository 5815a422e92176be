import math
from fractions import Fraction

import pytest
from conftest import (
    ceiling_fan_with_loops,
    hubhub_with_loops,
    regular_with_loops,
    star_with_loops,
)

from loopfix import closed_forms as cf
from loopfix import generators
from loopfix.errors import (
    InvalidFamilyParamsError,
    NotDenseRegimeError,
    UnsupportedNError,
)
from loopfix.threshold import Regime, critical_ratio


def bisect_sign_change(f, lo, hi, iters=80):
    flo = f(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if (f(mid) > 0) == (flo > 0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


class TestRegular:
    # pinned against the coalescence engine on concrete graphs
    def test_engine_pins(self):
        assert cf.bc_regular(6, 2, 0.7).bc_star == pytest.approx(3.461538461538462, rel=1e-10)
        assert cf.bc_regular(10, 3, 1.3).bc_star == pytest.approx(3.0966271649954398, rel=1e-10)
        assert cf.bc_regular(6, 5, 0.4).bc_star == pytest.approx(-8.999999999999975, rel=1e-10)

    def test_loop_free_baseline(self):
        for n in (8, 13, 72, 128):
            for k in range(2, n):
                if (n * k) % 2 or n == 2 * k:
                    continue
                num, den = cf.regular_num_den(n, k, Fraction(0))
                baseline = Fraction(n - 2) / (Fraction(n, k) - 2)
                assert Fraction(num, den) == baseline

    def test_hexagonal_lattice_values(self):
        assert cf.bc_regular(72, 3, 0.0).bc_star == pytest.approx(70 / 22, rel=1e-14)
        assert cf.bc_regular(72, 3, math.log(3)).bc_star == pytest.approx(
            2.527539880272563, rel=1e-12
        )

    def test_small_dense_case(self):
        res = cf.bc_regular(3, 2, 0.0)
        assert res.bc_star == pytest.approx(-2.0) and res.regime is Regime.SPITE

    def test_engine_agreement_on_lattices(self):
        g = generators.lattice("hex")  # 72 vertices, degree 3
        engine = critical_ratio(regular_with_loops(g, math.log(3)))
        assert engine.bc_star == pytest.approx(2.527539880272563, rel=1e-8)
        g = generators.lattice("tri", 7, 14)  # 98 vertices, degree 6
        engine = critical_ratio(regular_with_loops(g, 1.0))
        assert engine.bc_star == pytest.approx(cf.bc_regular(98, 6, 1.0).bc_star, rel=1e-8)

    def test_topology_independence_on_random_regular(self):
        # the formula depends only on (N, k, ell), not on which regular graph
        for n, k, seed in ((20, 4, 0), (15, 6, 1), (30, 3, 2)):
            g = generators.random_regular(n, k, seed)
            for ell in (0.0, 0.9):
                engine = critical_ratio(regular_with_loops(g, ell))
                closed = cf.bc_regular(n, k, ell)
                assert engine.regime == closed.regime
                assert engine.bc_star == pytest.approx(closed.bc_star, rel=1e-8)

    def test_sparse_loops_always_reduce(self):
        for n, k in ((30, 4), (50, 3), (40, 8)):
            base = cf.bc_regular(n, k, 0.0).bc_star
            for ell in (0.01, 0.5, 2.0, 25.0, 100.0):
                assert cf.bc_regular(n, k, ell).bc_star < base

    def test_invalid_params(self):
        with pytest.raises(InvalidFamilyParamsError):
            cf.bc_regular(2, 1, 0.0)
        with pytest.raises(InvalidFamilyParamsError):
            cf.bc_regular(5, 5, 0.0)
        with pytest.raises(InvalidFamilyParamsError):
            cf.bc_regular(5, 2, -0.1)


class TestSpiteTransition:
    def test_dense_value_pinned(self):
        assert cf.regular_spite_transition(50, 30) == pytest.approx(
            0.21413501953201589, abs=1e-12
        )

    def test_matches_denominator_bisection(self):
        for n, k in ((50, 30), (100, 60), (50, 40), (100, 80), (9, 5)):
            lstar = cf.regular_spite_transition(n, k)
            root = bisect_sign_change(lambda x: cf.regular_num_den(n, k, x)[1], 0.0, 50.0)
            assert lstar == pytest.approx(root, abs=1e-9)

    def test_straddles_regimes(self):
        for n, k in ((50, 30), (100, 80)):
            lstar = cf.regular_spite_transition(n, k)
            assert cf.bc_regular(n, k, lstar - 1e-6).regime is Regime.SPITE
            assert cf.bc_regular(n, k, lstar + 1e-6).regime is Regime.COOPERATION

    def test_sparse_regime_rejected(self):
        with pytest.raises(NotDenseRegimeError):
            cf.regular_spite_transition(50, 20)


class TestStar:
    def test_engine_pins(self):
        assert cf.bc_star(7, 0.8, 1.7).bc_star == pytest.approx(4.017606060003905, rel=1e-10)
        assert cf.bc_star(12, 0.25, 0.0).bc_star == pytest.approx(9.446308724832141, rel=1e-10)
        assert cf.bc_star(5, 0.0, 3.0).bc_star == pytest.approx(-6.770491803278717, rel=1e-10)

    def test_leaf_only_half_loop(self):
        # engine-verified: 10-vertex star, leaves at 0.5, loop-free hub
        assert cf.bc_star(10, 0.5, 0.0).bc_star == pytest.approx(5.25, rel=1e-12)

    def test_hub_only_always_spite(self):
        for n in (4, 7, 15, 25):
            for beta in (0.1, 1.0, 10.0):
                res = cf.bc_star(n, 0.0, beta)
                assert res.regime is Regime.SPITE and res.bc_star < 0

    def test_loop_free_neutral(self):
        for n in (3, 5, 10):
            assert cf.bc_star(n, 0.0, 0.0).regime is Regime.NEUTRAL_INFINITE

    def test_engine_agreement(self):
        res = critical_ratio(star_with_loops(10, 0.5, 0.0))
        assert res.bc_star == pytest.approx(cf.bc_star(10, 0.5, 0.0).bc_star, rel=1e-8)

    def test_limit_values(self):
        assert cf.star_limit_beta0(1.0) == pytest.approx(3.0)
        assert cf.star_limit_beta0(1e9) == pytest.approx(1.5, rel=1e-6)
        with pytest.raises(ZeroDivisionError):
            cf.star_limit_beta0(0.0)

    def test_limit_consistency_with_family(self):
        assert cf.bc_star(1000, 1.0, 0.0).bc_star == pytest.approx(3.0, rel=0.01)

    def test_exception_threshold(self):
        root = cf.star_exception_threshold_N3()
        assert root == pytest.approx(math.sqrt(5.0) - 2.0, abs=1e-15)
        assert cf.bc_star(3, root + 1e-3, 0.0).regime is Regime.COOPERATION
        assert cf.bc_star(3, root - 1e-2, 0.0).regime is Regime.SPITE
        bisected = bisect_sign_change(lambda a: cf.star_num_den(3, a, 0.0)[1], 0.05, 1.0)
        assert bisected == pytest.approx(root, abs=1e-9)


class TestHubHub:
    def test_engine_pins(self):
        assert cf.bc_hubhub(4, 0.6, 1.1).bc_star == pytest.approx(3.2275804591349018, rel=1e-10)
        assert cf.bc_hubhub(7, 0.0, 2.0).bc_star == pytest.approx(3.1229861696326657, rel=1e-10)
        assert cf.bc_hubhub(3, 1.5, 0.0).bc_star == pytest.approx(2.7794148115748514, rel=1e-10)

    def test_never_spite(self):
        for n in (3, 5, 10, 25):
            for a in (0.0, 0.5, 3.0):
                for g_ in (0.0, 1.0, 10.0):
                    res = cf.bc_hubhub(n, a, g_)
                    assert res.bc_star > 0 and res.regime is Regime.COOPERATION

    def test_engine_agreement(self):
        engine = critical_ratio(hubhub_with_loops(10, 0.3, 0.0))
        assert engine.bc_star == pytest.approx(cf.bc_hubhub(10, 0.3, 0.0).bc_star, rel=1e-8)

    def test_limit_values(self):
        assert cf.hubhub_limit(0.0) == pytest.approx(2.5)
        assert cf.hubhub_limit(1e9) == pytest.approx(1.5, rel=1e-6)

    def test_limit_consistency_with_family(self):
        for g_ in (0.0, 5.0):
            assert cf.bc_hubhub(1000, 1.0, g_).bc_star == pytest.approx(
                cf.hubhub_limit(1.0), rel=0.01
            )


class TestCeilingFan:
    def test_engine_pins(self):
        assert cf.bc_ceiling_fan(7, 0.9, 1.2).bc_star == pytest.approx(4.9703753398538115, rel=1e-10)
        assert cf.bc_ceiling_fan(9, 0.0, 2.5).bc_star == pytest.approx(14.609265666051002, rel=1e-10)
        assert cf.bc_ceiling_fan(5, 2.0, 0.0).bc_star == pytest.approx(3.4666666666666655, rel=1e-10)

    def test_positive_from_seven_up(self):
        for n in (7, 9, 11, 15):
            for e in (0.0, 0.5, 4.0):
                for b in (0.0, 1.0, 10.0):
                    res = cf.bc_ceiling_fan(n, e, b)
                    assert res.bc_star > 0 and res.regime is Regime.COOPERATION

    def test_engine_agreement(self):
        engine = critical_ratio(ceiling_fan_with_loops(15, 1.0, 2.0))
        assert engine.bc_star == pytest.approx(cf.bc_ceiling_fan(15, 1.0, 2.0).bc_star, rel=1e-8)

    def test_even_size_rejected(self):
        with pytest.raises(InvalidFamilyParamsError):
            cf.bc_ceiling_fan(8, 0.0, 0.0)

    def test_limit_values(self):
        assert cf.cf_limit(0.0) == pytest.approx(8.0)
        assert cf.cf_limit(1e9) == pytest.approx(4.0 / 3.0, rel=1e-6)

    def test_limit_consistency_with_family(self):
        for b in (0.0, 3.0):
            assert cf.bc_ceiling_fan(1001, 1.0, b).bc_star == pytest.approx(
                cf.cf_limit(1.0), rel=0.01
            )

    def test_exception_roots(self):
        r3 = cf.cf_exception_epsilon(3)
        r5 = cf.cf_exception_epsilon(5)
        assert r3 == pytest.approx(1.5261955409392671, abs=1e-12)
        assert r5 == pytest.approx(0.27662458616566965, abs=1e-12)
        assert abs(3 * r3**3 + 13 * r3**2 - 17 * r3 - 15) < 1e-10
        assert abs(9 * r5**3 + 47 * r5**2 + 8 * r5 - 6) < 1e-10
        with pytest.raises(UnsupportedNError):
            cf.cf_exception_epsilon(7)

    def test_exception_is_regime_boundary(self):
        for n in (3, 5):
            root = cf.cf_exception_epsilon(n)
            assert cf.bc_ceiling_fan(n, root - 1e-6, 0.0).regime is Regime.SPITE
            assert cf.bc_ceiling_fan(n, root + 1e-6, 0.0).regime is Regime.COOPERATION
