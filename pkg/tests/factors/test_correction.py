"""Tests for the correction factors and the average factor."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cvss_aggregator.cvss import AttackVector
from cvss_aggregator.factors import (
    EXPLOIT_FACTORS,
    AverageKind,
    CorrectionFactors,
    DeploymentContext,
    average_factor,
    context_factor,
    corrected_score,
    correction_factors,
    deepness_factor,
    exploit_factor,
    functionality_factor,
    get_interpolation,
    linear_deepness,
    summarized_factor,
)
from cvss_aggregator.graph import ExploitMaturity
from cvss_aggregator.models import DepthOutOfRange, EmptyDataset, ErrorCode
from tests.conftest import make_vuln

pytestmark = [pytest.mark.unit, pytest.mark.factors]

OPENPLC_SCORES = [9.8, 9.8, 7.8, 8.1, 7.5]
INSIDER = DeploymentContext(frozenset({AttackVector.NETWORK, AttackVector.ADJACENT}))


class TestFunctionalityFactor:
    """Test functionality_factor."""

    def test_affects_functionality(self):
        assert functionality_factor(make_vuln("CVE-2017-18269", "a", functional=True)) == 1

    def test_no_functionality(self):
        assert functionality_factor(make_vuln("CVE-2018-11236", "a", functional=False)) == 0


class TestDeepnessFactor:
    """Test deepness_factor."""

    @pytest.mark.parametrize("depth,max_depth,expected", [
        (3, 4, 0.5),
        (4, 4, 0.25),
        (2, 4, 0.75),
        (1, 4, 1.0),
        (1, 1, 1.0),
        (1, 17, 1.0),
    ])
    def test_linear_values(self, depth, max_depth, expected):
        assert deepness_factor(depth, max_depth) == pytest.approx(expected)

    def test_four_layer_grid(self):
        """Should give exactly quarter steps for a four-layer graph."""
        assert {deepness_factor(d, 4) for d in range(1, 5)} == {1.0, 0.75, 0.5, 0.25}

    @pytest.mark.parametrize("depth,max_depth", [(0, 4), (5, 4), (-1, 3), (1, 0)])
    def test_out_of_range(self, depth, max_depth):
        with pytest.raises(DepthOutOfRange) as exc_info:
            deepness_factor(depth, max_depth)
        assert exc_info.value.code is ErrorCode.DEPTH_OUT_OF_RANGE
        assert exc_info.value.depth == depth

    def test_custom_interpolation(self):
        """Should delegate to the supplied interpolation."""
        assert deepness_factor(2, 4, lambda depth, max_depth: 0.9) == 0.9

    @given(st.integers(1, 50).flatmap(lambda L: st.tuples(st.integers(1, L), st.just(L))))
    def test_range(self, pair):
        """beta is in (0, 1], 1 at the entry and 1/L at the bottom."""
        depth, max_depth = pair
        beta = deepness_factor(depth, max_depth)
        assert 0 < beta <= 1
        assert deepness_factor(max_depth, max_depth) == pytest.approx(1 / max_depth)


class TestInterpolations:
    """Test the interpolation lookup."""

    def test_linear_default(self):
        assert get_interpolation("linear") is linear_deepness

    def test_unknown(self):
        with pytest.raises(KeyError):
            get_interpolation("cubic")


class TestContextFactor:
    """Test context_factor."""

    def test_reachable(self):
        assert context_factor(AttackVector.NETWORK, INSIDER) == 1

    def test_unreachable(self):
        assert context_factor(AttackVector.LOCAL, INSIDER) == 0

    def test_isolated(self):
        assert context_factor(AttackVector.PHYSICAL, DeploymentContext()) == 0


class TestExploitFactor:
    """Test exploit_factor."""

    @pytest.mark.parametrize("maturity,expected", [
        (ExploitMaturity.NO_EXPLOIT, 0.0),
        (ExploitMaturity.NOT_DEFINED, 0.5),
        (ExploitMaturity.THEORETICAL, 1.25),
        (ExploitMaturity.PROOF_OF_CONCEPT, 1.5),
        (ExploitMaturity.FUNCTIONAL, 1.75),
        (ExploitMaturity.AUTOMATED, 2.0),
    ])
    def test_table(self, maturity, expected):
        assert exploit_factor(maturity) == expected

    def test_every_level_mapped(self):
        assert set(EXPLOIT_FACTORS) == set(ExploitMaturity)


class TestSummarizedFactor:
    """Test summarized_factor and CorrectionFactors."""

    @pytest.mark.parametrize("rho,beta,gamma,mu,expected", [
        (1, 0.5, 1, 1.25, 0.625),
        (1, 0.25, 1, 1.25, 0.3125),
        (1, 0.5, 0, 1.25, 0.0),
        (0, 1.0, 1, 2.0, 0.0),
    ])
    def test_products(self, rho, beta, gamma, mu, expected):
        assert summarized_factor(rho, beta, gamma, mu) == expected

    def test_factors_carry_lambda(self):
        factors = CorrectionFactors(rho=1, beta=0.5, gamma=1, mu=1.25)
        assert factors.lambda_ == 0.625

    @given(
        st.sampled_from([0, 1]),
        st.floats(min_value=0.01, max_value=1.0),
        st.sampled_from([0, 1]),
        st.sampled_from(sorted(EXPLOIT_FACTORS.values())),
    )
    def test_bounds(self, rho, beta, gamma, mu):
        """lambda is in [0, 2] and zero exactly when rho, gamma or mu is."""
        lambda_ = summarized_factor(rho, beta, gamma, mu)
        assert 0 <= lambda_ <= 2
        assert (lambda_ == 0) == (rho == 0 or gamma == 0 or mu == 0)

    @given(st.floats(min_value=0.01, max_value=0.99), st.floats(min_value=0.01, max_value=1.0))
    def test_monotone_in_beta(self, beta, bump):
        higher = min(beta + bump, 1.0)
        if higher > beta:
            assert summarized_factor(1, higher, 1, 1.5) > summarized_factor(1, beta, 1, 1.5)

    def test_openplc_row(self):
        """Should combine every factor of one vulnerability."""
        vuln = make_vuln("CVE-2018-11237", "libc.so.6",
                         vector="AV:L/AC:L/PR:N/UI:R/S:U/C:H/I:H/A:H", maturity="theoretical")
        factors = correction_factors(vuln, depth=3, max_depth=4, context=INSIDER)
        assert (factors.rho, factors.beta, factors.gamma, factors.mu) == (1, 0.5, 0, 1.25)
        assert factors.lambda_ == 0


class TestCorrectedScore:
    """Test corrected_score."""

    def test_scaled(self):
        result = corrected_score(9.8, 0.625)
        assert result.corrected == pytest.approx(6.125)
        assert result.raw == 9.8
        assert not result.clamped

    def test_small_factor(self):
        assert corrected_score(7.5, 0.3125).corrected == pytest.approx(2.34375)

    def test_clamped(self):
        result = corrected_score(9.8, 2.0)
        assert result.corrected == 10.0
        assert result.clamped

    def test_exactly_ten_not_clamped(self):
        result = corrected_score(5.0, 2.0)
        assert result.corrected == 10.0
        assert not result.clamped

    def test_zero_lambda(self):
        assert corrected_score(9.8, 0.0).corrected == 0.0


class TestAverageFactor:
    """Test average_factor."""

    def test_arithmetic(self):
        sigma = average_factor(OPENPLC_SCORES, AverageKind.ARITHMETIC)
        assert sigma.kind is AverageKind.ARITHMETIC
        assert sigma.sigma == pytest.approx(8.6)

    def test_harmonic(self):
        expected = len(OPENPLC_SCORES) / sum(1 / s for s in OPENPLC_SCORES)
        sigma = average_factor(OPENPLC_SCORES, AverageKind.HARMONIC)
        assert sigma.sigma == pytest.approx(expected)
        assert sigma.sigma == pytest.approx(8.4878, abs=1e-4)

    def test_single(self):
        assert average_factor([5.0], AverageKind.ARITHMETIC).sigma == 5.0
        assert average_factor([5.0], AverageKind.HARMONIC).sigma == pytest.approx(5.0)

    def test_harmonic_with_zero(self):
        assert average_factor([0.0, 9.8], AverageKind.HARMONIC).sigma == 0

    def test_accepts_generator(self):
        assert average_factor((s for s in [4.0, 6.0]), AverageKind.ARITHMETIC).sigma == 5.0

    @pytest.mark.parametrize("kind", list(AverageKind))
    def test_empty(self, kind):
        with pytest.raises(EmptyDataset):
            average_factor([], kind)

    @given(st.lists(st.floats(min_value=0.1, max_value=10.0), min_size=1, max_size=64))
    def test_harmonic_not_above_arithmetic(self, scores):
        harmonic = average_factor(scores, AverageKind.HARMONIC).sigma
        arithmetic = average_factor(scores, AverageKind.ARITHMETIC).sigma
        assert harmonic <= arithmetic + 1e-9
