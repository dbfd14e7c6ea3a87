import math

import pytest

from dnacodes import asymptotics, counting


class TestCapacity:
    @pytest.mark.parametrize(
        "q,m,expected",
        [(4, 1, math.log2(3)), (2, 2, 0.6942), (4, 6, 1.9997), (2, 1, 0.0)],
    )
    def test_reference_values(self, q, m, expected):
        assert asymptotics.capacity(q, m).capacity_bits == pytest.approx(expected, abs=5e-5)

    def test_golden_ratio_root(self):
        assert asymptotics.capacity(2, 2).lam == pytest.approx((1 + math.sqrt(5)) / 2, abs=1e-14)

    @pytest.mark.parametrize("q", (2, 4))
    @pytest.mark.parametrize("m", range(1, 10))
    def test_residuals(self, q, m):
        assert asymptotics.capacity(q, m).residual < 1e-10

    def test_residual_float_floor(self):
        # At q=4, m=10 the derivative of the characteristic polynomial is
        # ~1e6, so a double-precision root cannot push the residual below
        # roughly 2.5e-10 no matter how it is refined.
        assert asymptotics.capacity(4, 10).residual < 4e-10

    @pytest.mark.parametrize("q", (2, 4))
    def test_monotone_in_m(self, q):
        caps = [asymptotics.capacity(q, m).capacity_bits for m in range(1, 11)]
        assert all(a < b for a, b in zip(caps, caps[1:]))

    def test_monotone_in_q(self):
        for m in range(1, 11):
            assert asymptotics.capacity(2, m).capacity_bits < asymptotics.capacity(4, m).capacity_bits

    def test_root_bracket(self):
        for q, m in [(2, 3), (4, 5)]:
            lam = asymptotics.capacity(q, m).lam
            assert q - 1 < lam < q

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            asymptotics.capacity(1, 2)
        with pytest.raises(ValueError):
            asymptotics.capacity(4, 0)


class TestLeadingCoefficient:
    def test_exact_m1(self):
        assert asymptotics.leading_coefficient(4, 1) == pytest.approx(4 / 3, abs=1e-12)

    def test_fibonacci_asymptote(self):
        # N_2(2, n) = 2 F(n+1), so the coefficient is exactly 2*phi/sqrt(5).
        phi = (1 + math.sqrt(5)) / 2
        assert asymptotics.leading_coefficient(2, 2) == pytest.approx(
            2 * phi / math.sqrt(5), abs=1e-10
        )

    @pytest.mark.parametrize("q,m,expected", [(2, 3, 1.2368), (4, 2, 1.1031), (4, 4, 1.0110)])
    def test_reference_values(self, q, m, expected):
        assert asymptotics.leading_coefficient(q, m) == pytest.approx(expected, abs=5e-5)

    def test_approximation_quality(self):
        approx = asymptotics.rll_count_approx(4, 2, 10)
        assert 676835.95 <= approx <= 676836.00

    def test_exact_for_m1(self):
        assert asymptotics.rll_count_approx(4, 1, 6) == pytest.approx(972, rel=1e-12)

    @pytest.mark.parametrize("q", (2, 4))
    @pytest.mark.parametrize("m", (2, 3, 4, 5))
    def test_relative_error_at_n20(self, q, m):
        exact = counting.rll_count(q, m, 20)
        assert abs(asymptotics.rll_count_approx(q, m, 20) / exact - 1) < 1e-3


class TestRedundancy:
    def test_exact_quaternary(self):
        assert asymptotics.rll_redundancy(4, 3, 5) == pytest.approx(10 - math.log2(996))

    def test_asymptotic_slope(self):
        r100 = asymptotics.rll_redundancy(2, 2, 100, "asymptotic")
        r101 = asymptotics.rll_redundancy(2, 2, 101, "asymptotic")
        assert r101 - r100 == pytest.approx(1 - 0.6942, abs=5e-5)

    def test_modes_agree_at_n50(self):
        for q in (2, 4):
            exact = asymptotics.rll_redundancy(q, 3, 50, "exact")
            asym = asymptotics.rll_redundancy(q, 3, 50, "asymptotic")
            assert abs(exact - asym) < 0.02

    def test_bad_q(self):
        with pytest.raises(ValueError):
            asymptotics.rll_redundancy(3, 2, 10)


class TestEta:
    @pytest.mark.parametrize("m,expected", [(2, 0.881), (4, 0.975), (7, 0.997)])
    def test_reference_values(self, m, expected):
        assert asymptotics.efficiency_eta(m) == pytest.approx(expected, abs=5e-4)

    def test_range(self):
        for m in range(2, 9):
            assert 0 < asymptotics.efficiency_eta(m) <= 1

    def test_m1_rejected(self):
        with pytest.raises(ValueError):
            asymptotics.efficiency_eta(1)


class TestGamma:
    @pytest.mark.parametrize("m,expected", [(2, 0.1708), (10, 0.9565)])
    def test_binary_reference(self, m, expected):
        assert asymptotics.gamma_binary(m) == pytest.approx(expected, abs=5e-5)

    @pytest.mark.parametrize("m,expected", [(1, 0.5), (3, 0.8796), (10, 0.9999)])
    def test_quaternary_reference(self, m, expected):
        assert asymptotics.gamma_quaternary(m) == pytest.approx(expected, abs=5e-5)

    def test_limits(self):
        assert asymptotics.gamma_binary(40) == pytest.approx(1.0, abs=5e-5)
        assert asymptotics.gamma_quaternary(40) == pytest.approx(1.0, abs=5e-5)

    def test_binary_m1_rejected(self):
        with pytest.raises(ValueError):
            asymptotics.gamma_binary(1)

    def test_quaternary_monotone(self):
        gammas = [asymptotics.gamma_quaternary(m) for m in range(1, 11)]
        assert all(a < b for a, b in zip(gammas, gammas[1:]))
        assert gammas[-1] < 1

    def test_distribution_mass_and_mean(self):
        for m in (1, 2, 5):
            dist = asymptotics.runlength_distribution(m)
            assert abs(dist.mass() - 1.0) <= 1e-12
            assert all(p >= 0 for _, p in dist.probs)
            assert 1 <= dist.mean_runlength <= 2
            assert dist.truncation_k == dist.probs[-1][0]


class TestGaussianModels:
    def test_q_function_symmetry(self):
        assert asymptotics.q_function(0) == pytest.approx(0.5, abs=1e-15)
        for x in (0.5, 1.0, 2.0):
            assert asymptotics.q_function(x) + asymptotics.q_function(-x) == pytest.approx(
                1.0, abs=1e-12
            )

    def test_balance_model_midpoint(self):
        est = asymptotics.gaussian_weight_approx("balance", None, 50, 100)
        exact = counting.binomial_weight_count(100, 50)
        assert abs(est / exact - 1) < 0.02

    def test_density_integrates_to_one(self):
        model = asymptotics.gaussian_weight_model("balance", None, 64)
        total = sum(model.density(w) for w in range(-100, 165))
        assert total == pytest.approx(1.0, abs=1e-6)

    def test_binary_model_n200(self):
        est = asymptotics.gaussian_weight_approx("binary-rll", 3, 100, 200)
        exact = counting.rll_weight_count_binary(3, 100, 200)
        assert abs(est / exact - 1) < 0.05

    def test_quaternary_model_n200(self):
        est = asymptotics.gaussian_weight_approx("quaternary-rll", 2, 100, 200)
        exact = counting.rll_weight_count_quaternary(2, 100, 200)
        assert abs(est / exact - 1) < 0.05

    def test_plain_variance_variant_exposed(self):
        # both modeling choices are available; the run-adjusted variance
        # is the smaller one and fits the exact midpoint count better
        adjusted = asymptotics.gaussian_weight_model("quaternary-rll", 2, 200)
        plain = asymptotics.gaussian_weight_model("quaternary-rll", 2, 200, plain_variance=True)
        assert plain.variance == 200 / 4
        assert adjusted.variance < plain.variance
        exact = counting.rll_weight_count_quaternary(2, 100, 200)
        assert abs(adjusted.estimate(100) / exact - 1) < abs(plain.estimate(100) / exact - 1)

    def test_near_balanced_approximation(self):
        est = asymptotics.balance_count_approx(400, 0.05)
        exact = counting.near_balanced_count(400, 0.05)
        assert abs(est / exact - 1) < 0.03

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            asymptotics.gaussian_weight_model("ternary", 2, 10)


class TestCombinedRedundancy:
    def test_balance_term_vanishes_for_loose_bound(self):
        assert asymptotics.balance_penalty("binary", 2, 0.5, 400) == pytest.approx(0, abs=1e-9)

    def test_exact_vs_asymptotic(self):
        for kind in ("binary", "quaternary"):
            exact = asymptotics.combined_redundancy(kind, 3, 0.05, 150, "exact")
            asym = asymptotics.combined_redundancy(kind, 3, 0.05, 150, "asymptotic")
            assert abs(exact - asym) < 0.1

    def test_binary_m1_rejected(self):
        with pytest.raises(ValueError):
            asymptotics.combined_redundancy("binary", 1, 0.05, 50)

    def test_undefined_penalty(self):
        # the admitted probability rounds to zero for a degenerate bound
        with pytest.raises(ValueError):
            asymptotics.balance_penalty("binary", 2, 1e-18, 4)
