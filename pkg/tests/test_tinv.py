import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from studentt import tcdf, tinv
from studentt.tinv import Method

from conftest import assert_close, tail_rel_err


class TestCentralSeries:
    def test_median(self):
        assert tinv.inv_central_series(5.0, 0.5).x == 0.0

    def test_cauchy_matches_tan_series(self):
        # for n=1 the series is the tangent series in q = (p-1/2)pi
        for p in (0.501, 0.53, 0.58):
            q = (p - 0.5) * math.pi
            ref = q + q ** 3 / 3 + 2 * q ** 5 / 15 + 17 * q ** 7 / 315 \
                + 62 * q ** 9 / 2835
            assert_close(tinv.inv_central_series(1.0, p).x, ref, rel=1e-13)

    def test_near_median_round_trip(self):
        r = tinv.inv_central_series(10.0, 0.5 - 5e-6)
        assert r.method is Method.CentralSeries and not r.polished
        assert r.est_rel_error <= 1e-13

    def test_out_of_region(self):
        with pytest.raises(tinv.OutOfRegionError):
            tinv.inv_central_series(10.0, 0.05)


class TestFixedPoint:
    def test_worked_example(self):
        # published: 0.00002569978035 to its 10 printed digits; agreement
        # holds through the 11th (the 12th absorbs the binary rounding of
        # the input p = 0.5 + 1e-5 versus the exact decimal)
        x = tinv.inv_fixed_point(10.0, 0.5 + 1e-5, 2).x
        assert f"{x:.10e}" == f"{2.5699780352416850e-05:.10e}"
        assert abs(x - 2.5699780352416850e-05) <= 2e-14

    def test_limit_to_zero(self):
        x = tinv.inv_fixed_point(10.0, 0.5 + 1e-14, 2).x
        assert 0.0 < x < 1e-13
        assert tinv.inv_fixed_point(10.0, 0.5, 2).x == 0.0

    def test_frozen_value(self):
        # oracle quantile(2, 0.7) = 0.6172133998483674778909; two iterations
        # land within ~5e-3 of it at this mid-range p
        r = tinv.inv_fixed_point(2.0, 0.7, 2)
        assert_close(r.x, 0.6172133998483675, rel=1e-2)
        assert r.est_rel_error < 1e-2

    def test_reflection(self):
        a = tinv.inv_fixed_point(7.0, 0.7, 2).x
        b = tinv.inv_fixed_point(7.0, 0.3, 2).x
        assert a == -b

    @pytest.mark.parametrize("n", [2.0, 10.0, 100.0])
    def test_two_step_closed_form_agrees(self, n):
        # iterate path and the explicit second-iterate expression are
        # independent code paths and must agree to 1e-14
        for p in (0.5 + 1e-9, 0.52, 0.6, 0.75, 0.9, 0.2, 0.02):
            a = tinv.inv_fixed_point(n, p, 2).x
            b = tinv.fixed_point_two_step(n, p)
            assert abs(a - b) <= 1e-14 * max(abs(a), 1e-300)

    def test_divergence_error(self):
        with pytest.raises(tinv.DivergenceError):
            tinv.inv_fixed_point(0.01, 0.45, 2)


class TestLeftTail:
    def test_worked_example_vars(self):
        tv = tinv.left_tail_vars(10.0, 1e-8, terms=5)
        assert_close(tv.delta, 0.038193186, rel=5e-9)
        assert_close(tv.eta, 0.039576861, rel=5e-9)
        assert tv.log_delta == pytest.approx(math.log(tv.delta), rel=1e-15)

    def test_worked_example_x(self):
        r = tinv.inv_left_tail_series(10.0, 1e-8, terms=5)
        assert r.method is Method.LeftTail
        assert_close(r.x, -15.8956879, rel=5e-9)

    def test_cauchy_eta_coeffs(self):
        e = tinv._eta_coeffs(1.0)
        assert e[0] == 1.0
        assert_close(e[1], 2.0 / 3.0, rel=1e-15)
        assert_close(e[2], 17.0 / 45.0, rel=1e-15)
        assert_close(e[3], 62.0 / 315.0, rel=1e-15)
        assert_close(e[4], 1382.0 / 14175.0, rel=1e-15)

    def test_table_row(self):
        r = tinv.inv_left_tail_series(10.0, 2e-40)
        assert_close(r.x, -23927.87084268530, rel=1e-12)

    def test_right_tail_mirror(self):
        a = tinv.inv_left_tail_series(10.0, 1e-8)
        b = tinv.inv_left_tail_series(10.0, 1.0 - 1e-8)
        assert b.method is Method.RightTail
        assert b.x == -a.x

    def test_out_of_region(self):
        with pytest.raises(tinv.OutOfRegionError):
            tinv.inv_left_tail_series(10.0, 0.2)


class TestUniformAsymInv:
    def test_median(self):
        assert tinv.inv_uniform_asym(10.0, 0.5).x == 0.0

    def test_worked_example_steps(self):
        # two-term walk-through at n=10, p=0.44
        x = tinv.inv_uniform_asym(10.0, 0.44, order=2).x
        assert_close(x, -0.1548354, rel=5e-7)

    def test_frozen_value(self):
        # oracle quantile(100, 0.25) = -0.676951043011471477944
        r = tinv.inv_uniform_asym(100.0, 0.25, order=5)
        assert_close(r.x, -0.67695104301147148, rel=1e-9)

    def test_series_terms_odd(self):
        for k in range(1, 7):
            for t in (0.05, 0.21, 0.55):
                assert tinv.xi_series_term(k, t) == -tinv.xi_series_term(k, -t)

    def test_closed_and_series_routes_consistent(self):
        # both sides of the 0.6 switch approximate the same expansion
        for n in (30.0, 80.0):
            lo = tinv.inv_uniform_asym(n, 0.5 * math.erfc(0.59 * math.sqrt(n / 2)), 4)
            hi = tinv.inv_uniform_asym(n, 0.5 * math.erfc(0.61 * math.sqrt(n / 2)), 4)
            assert lo.est_rel_error < 1e-6
            assert hi.est_rel_error < 1e-6

    def test_order_validation(self):
        with pytest.raises(ValueError):
            tinv.inv_uniform_asym(10.0, 0.3, order=0)
        with pytest.raises(ValueError):
            tinv.inv_uniform_asym(10.0, 0.3, order=8)

    def test_upper_side_symmetric(self):
        a = tinv.inv_uniform_asym(10.0, 0.44, 3).x
        b = tinv.inv_uniform_asym(10.0, 0.56, 3).x
        assert_close(a, -b, rel=1e-13)


class TestNewtonPolish:
    def test_exact_seed_unchanged(self):
        x0 = tinv.quantile(10.0, 0.3).x
        r = tinv.newton_polish(10.0, 0.3, x0)
        assert r.x == x0 and r.polished

    def test_worked_example_seed(self):
        # oracle quantile(10, 0.44) = -0.1548765910059209626913
        r = tinv.newton_polish(10.0, 0.44, -0.1548354, max_steps=20,
                               method=Method.UniformAsym)
        assert_close(r.x, -0.15487659100592096, rel=1e-13)
        assert r.method is Method.UniformAsym

    def test_tail_row_polish(self):
        seed = tinv.inv_left_tail_series(10.0, 5e-10).x
        r = tinv.newton_polish(10.0, 5e-10, seed, max_steps=20)
        assert r.est_rel_error <= 1e-13
        # oracle: -21.622044154485064883
        assert_close(r.x, -21.622044154485065, rel=1e-13)

    def test_never_worsens(self):
        seed = -2.35  # decent seed for (10, 0.02)
        base = tail_rel_err(10.0, 0.02, seed)
        r = tinv.newton_polish(10.0, 0.02, seed, max_steps=1)
        assert r.est_rel_error <= base

    def test_rescues_far_seed(self):
        r = tinv.newton_polish(1000.0, 1e-50, -1.63, max_steps=100)
        assert r.est_rel_error <= 1e-12

    def test_requires_finite_seed(self):
        with pytest.raises(ValueError):
            tinv.newton_polish(10.0, 0.3, math.inf)


class TestQuantileDispatcher:
    def test_median_any_df(self):
        for n in (0.7, 1.0, 13.0, 2000.0):
            r = tinv.quantile(n, 0.5)
            assert r.x == 0.0 and r.est_rel_error == 0.0

    def test_routing_regions(self):
        assert tinv.quantile(10.0, 1e-8, polish=False).method is Method.LeftTail
        assert tinv.quantile(10.0, 1.0 - 1e-8, polish=False).method is Method.RightTail
        assert tinv.quantile(10.0, 0.4, polish=False).method is Method.CentralSeries
        assert tinv.quantile(10.0, 0.02, polish=False).method is Method.FixedPoint
        assert tinv.quantile(2.0, 0.9995, polish=False).method is Method.UniformAsym

    def test_routing_deterministic(self):
        a = tinv.quantile(25.0, 0.17, polish=False)
        b = tinv.quantile(25.0, 0.17, polish=False)
        assert a == b

    def test_polished_contract_spot(self):
        for n, p in [(1.0, 0.05), (5.0, 1e-20), (25.0, 0.31), (100.0, 0.97),
                     (1000.0, 1e-50), (2.0, 1.0 - 1e-12)]:
            r = tinv.quantile(n, p)
            assert r.polished
            assert r.est_rel_error <= 1e-12

    def test_frozen_value(self):
        # oracle quantile(5, 0.31) = -0.5281302070430486442415
        assert_close(tinv.quantile(5.0, 0.31).x, -0.5281302070430486,
                     rel=1e-12)

    def test_antisymmetry(self):
        for n in (1.0, 4.0, 60.0):
            for p in (0.031, 0.2, 0.47, 1e-7):
                a = tinv.quantile(n, p).x
                b = tinv.quantile(n, 1.0 - p).x
                assert_close(a, -b, rel=1e-13)

    def test_monotone_in_p(self):
        for n in (1.0, 9.0, 700.0):
            ps = [0.001 + 0.002 * k for k in range(500)]
            xs = [tinv.quantile(n, p).x for p in ps]
            assert all(a < b for a, b in zip(xs, xs[1:]))

    def test_cauchy_closed_form(self):
        p = 0.05
        while p <= 0.951:
            ref = math.tan((p - 0.5) * math.pi)
            got = tinv.quantile(1.0, p).x
            assert abs(got - ref) <= 1e-12 * max(abs(ref), 1.0)
            p += 0.01

    def test_method_override(self):
        r = tinv.quantile(10.0, 0.44, polish=False, method="asym", order=2)
        assert r.method is Method.UniformAsym
        assert_close(r.x, -0.1548354, rel=5e-7)
        r = tinv.quantile(10.0, 0.44, polish=False, method="tail")
        assert r.method is Method.LeftTail  # forced past the region guard

    def test_oracle_override(self):
        r = tinv.quantile(10.0, 0.44, method="oracle")
        assert r.method is Method.OracleFallback
        assert_close(r.x, -0.15487659100592096, rel=1e-13)

    def test_validation(self):
        with pytest.raises(ValueError):
            tinv.quantile(-1.0, 0.5)
        with pytest.raises(ValueError):
            tinv.quantile(10.0, 0.0)
        with pytest.raises(ValueError):
            tinv.quantile(10.0, 1.0)
        with pytest.raises(ValueError):
            tinv.quantile(10.0, 0.3, method="nope")

    @given(st.floats(0.5, 300.0), st.floats(0.001, 0.999))
    @settings(max_examples=200, deadline=None)
    def test_round_trip_random(self, n, p):
        r = tinv.quantile(n, p)
        assert r.est_rel_error <= 1e-12

    def test_result_immutable(self):
        r = tinv.quantile(3.0, 0.3)
        with pytest.raises(Exception):
            r.x = 0.0
