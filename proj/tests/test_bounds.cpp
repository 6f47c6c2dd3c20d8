#include <gtest/gtest.h>

#include "printers.hpp"

#include "bethe/bounds.hpp"
#include "bethe/errors.hpp"

namespace bethe {
namespace {

const Precision kP = kDefaultPrecision;

BigFloat num(double v) { return BigFloat(v, kP); }

/// Positive root of threshold_polynomial by plain bisection on (0, 1).
BigFloat bisect_threshold(int d, std::uint64_t n, const BigFloat& k) {
    BigFloat lo(kP);
    BigFloat hi(1L, kP);
    for (int i = 0; i < 200; ++i) {
        BigFloat mid = (lo + hi) / 2L;
        (threshold_polynomial(d, n, k, mid) < 0L ? lo : hi) = std::move(mid);
    }
    return (lo + hi) / 2L;
}

TEST(Envelope, Constants) {
    EXPECT_EQ(trivial_regime_cutoff(2), 8U);
    EXPECT_EQ(trivial_regime_cutoff(3), 7U);
    EXPECT_EQ(trivial_regime_cutoff(10), 7U);
    const BoundEnvelope env = make_envelope(2, kP);
    EXPECT_EQ(env.k_upper, Rational(40, 49));
    EXPECT_NEAR(env.k_lower.to_double(), 2.8284271247, 1e-10);
}

TEST(Envelope, ValuesAtHundred) {
    const EnvelopeBounds b = sandwich_envelope(make_envelope(2, kP), 100, kP);
    EXPECT_FALSE(b.lower_trivial);
    EXPECT_NEAR(b.lower.to_double(), 0.717157, 1e-6);
    EXPECT_NEAR(b.upper.to_double(), 0.918367, 1e-6);
    EXPECT_TRUE(sandwich_envelope(make_envelope(2, kP), 8, kP).lower_trivial);
    EXPECT_THROW(sandwich_envelope(make_envelope(2, kP), 0, kP), DomainError);
}

TEST(Envelope, BaseCaseIsExact) {
    for (int d = 2; d <= 10; ++d) {
        const BoundEnvelope env = make_envelope(d, kP);
        EXPECT_EQ(1 - env.k_upper, initial_ratio_exact(ModelParams::critical(d)).value);
    }
    EXPECT_TRUE(verify_envelope_base_case(2, 10).passed());
}

TEST(Sandwich, HoldsOnShortRuns) {
    for (int d : {2, 3, 7}) {
        const SandwichReport r = check_sandwich(ModelParams::critical(d), 10'000, kP, make_envelope(d, kP));
        EXPECT_TRUE(r.passed()) << d;
        EXPECT_EQ(r.n_checked, 10'000U);
        ASSERT_TRUE(r.min_slack_upper && r.min_slack_lower);
        EXPECT_GE(*r.min_slack_upper, 0L);
        EXPECT_GT(*r.min_slack_lower, 0L);
    }
}

TEST(Sandwich, DetectsInjectedFault) {
    SandwichChecker checker(make_envelope(2, kP), kP);
    checker.observe(FloatRatio{0, BigFloat(1e-9, kP)});
    ASSERT_EQ(checker.report().violations.size(), 1U);
    EXPECT_EQ(checker.report().violations[0].n, 1U);
}

TEST(Sandwich, RejectsMismatchedParameters) {
    EXPECT_THROW(check_sandwich(ModelParams(2, RationalT{Rational(5, 2)}), 10, kP, make_envelope(2, kP)), DomainError);
    EXPECT_THROW(check_sandwich(ModelParams::critical(3), 10, kP, make_envelope(2, kP)), DomainError);
}

TEST(Threshold, BinaryExampleMatchesRootFind) {
    const BigFloat k(Rational(40, 49), kP);
    const BigFloat threshold = ratio_threshold(2, 4, k);
    EXPECT_NEAR(threshold.to_double(), 0.586333, 1e-6);
    EXPECT_LT(abs(threshold - bisect_threshold(2, 4, k)), exp2i(-110, kP));
    EXPECT_LT(abs(threshold_polynomial(2, 4, k, threshold)), exp2i(-110, kP));
}

TEST(Threshold, RootFindAcrossDegrees) {
    for (int d = 2; d <= 9; ++d) {
        for (std::uint64_t n : {3U, 50U, 4000U}) {
            const BigFloat k = num(0.8);
            EXPECT_LT(abs(ratio_threshold(d, n, k) - bisect_threshold(d, n, k)), exp2i(-100, kP)) << d << " " << n;
        }
    }
}

TEST(Threshold, DomainChecks) {
    EXPECT_THROW(ratio_threshold(2, 0, num(0.5)), DomainError);
    EXPECT_THROW(ratio_threshold(2, 4, num(0.0)), DomainError);
    EXPECT_THROW(ratio_threshold(2, 4, num(2.5)), DomainError);
    EXPECT_THROW(ratio_threshold(1, 4, num(0.5)), DomainError);
}

TEST(LowerStep, ResidualAtOne) {
    // sqrt(6)(d + 1) - 2 sqrt(5 d^2 + 1) at r = 1.
    EXPECT_NEAR(lower_step_residual(2, BigFloat(1L, kP)).to_double(), -1.816682, 1e-6);
    EXPECT_LT(lower_step_residual(3, num(1.7)), 0L);
    EXPECT_THROW(lower_step_residual(2, num(0.5)), DomainError);
}

TEST(LowerStep, PolynomialFactorization) {
    const FactorizationCheck two = factor_positivity_check(lower_step_polynomial(2));
    ASSERT_TRUE(two.passed());
    EXPECT_EQ(two.quotient, (IntPolynomial{30, 18}));
    EXPECT_EQ(two.quotient.to_string(), "18*z + 30");
    const FactorizationCheck three = factor_positivity_check(lower_step_polynomial(3));
    ASSERT_TRUE(three.passed());
    EXPECT_EQ(three.quotient, (IntPolynomial{88, 168, 120, 56}));
    EXPECT_EQ(three.quotient.to_string(), "56*z^3 + 120*z^2 + 168*z + 88");
    EXPECT_THROW(lower_step_polynomial(1), DomainError);
    EXPECT_THROW(lower_step_polynomial(201), DomainError);
    EXPECT_TRUE(verify_polynomial_factorizations(2, 30).passed());
}

TEST(LowerStep, FactorizationFailures) {
    const FactorizationCheck rem = factor_positivity_check(IntPolynomial{1, 1});
    ASSERT_FALSE(rem.passed());
    EXPECT_EQ(rem.failure->kind, FactorizationFailure::Kind::NonzeroRemainder);
    // (1 - z)^5 (z - 2): quotient has a negative constant term.
    const FactorizationCheck neg = factor_positivity_check(pow(IntPolynomial{1, -1}, 5) * IntPolynomial{-2, 1});
    ASSERT_FALSE(neg.passed());
    EXPECT_EQ(neg.failure->kind, FactorizationFailure::Kind::NonPositiveCoefficient);
}

TEST(UpperStep, ResidualExample) {
    EXPECT_NEAR(upper_step_residual(2, num(0.5), BigFloat(1L, kP)).to_double(), -1.146447, 1e-6);
    EXPECT_THROW(upper_step_residual(2, num(1.0), num(4.0)), DomainError);
    EXPECT_THROW(upper_step_residual(2, num(0.5), num(0.5)), DomainError);
}

TEST(UpperStep, SlopeIsDerivativeOfResidual) {
    const Precision p{256};
    const BigFloat k(0.5, p);
    const BigFloat n(10L, p);
    const BigFloat h = exp2i(-60, p);
    for (int d : {2, 3, 6}) {
        const BigFloat fd = (upper_step_residual(d, k, n + h) - upper_step_residual(d, k, n - h)) / (2L * h);
        EXPECT_LT(abs(fd - upper_step_residual_slope(d, n, k)), exp2i(-100, p)) << d;
    }
}

TEST(UpperStep, SlopeVanishesAtZero) {
    for (int d = 2; d <= 5; ++d) EXPECT_EQ(upper_step_residual_slope(d, num(7.0), BigFloat(kP)), 0L);
    EXPECT_THROW(upper_step_residual_slope(2, BigFloat(1L, kP), num(0.5)), DomainError);
}

TEST(UpperStep, NumeratorSigns) {
    for (int d = 2; d <= 6; ++d) {
        for (double n : {1.0, 2.0, 17.0, 400.0}) {
            const BigFloat at_one = upper_step_slope_numerator(d, num(n), BigFloat(1L, kP));
            EXPECT_GE(at_one, 0L);
            EXPECT_GT(upper_step_slope_numerator(d, num(n), num(0.3)), at_one);
        }
    }
    EXPECT_THROW(upper_step_slope_numerator(2, num(3.0), num(1.5)), DomainError);
}

TEST(Grids, ReducedRunsPass) {
    ThresholdEquivalenceGrid eq;
    eq.samples = 300;
    LowerPropagationGrid lower;
    lower.d_max = 4;
    lower.n_max = 2000;
    UpperPropagationGrid upper;
    upper.d_max = 3;
    upper.n_max = 500;
    ResidualMonotonicityGrid residual;
    residual.log2_n_max = 12;
    SlopeGrid slope;
    slope.d_max = 4;
    slope.s_n_max = 20;
    SignStructureGrid sign;
    sign.samples = 20;
    sign.z_points = 100;
    for (const GridReport& r : verify_proof_inequalities({eq, lower, upper, residual, slope, sign}, kP)) {
        EXPECT_TRUE(r.passed()) << r.name << ": " << (r.violations.empty() ? "" : r.violations.front());
        EXPECT_GT(r.checked, 0U) << r.name;
    }
}

TEST(Grids, LowerBoundaryHeightIsNoted) {
    LowerPropagationGrid lower;
    lower.d_max = 2;
    lower.n_max = 50;
    const GridReport r = verify_lower_propagation(lower, kP);
    ASSERT_EQ(r.notes.size(), 1U);
    EXPECT_NE(r.notes[0].find("n=8"), std::string::npos);
}

}  // namespace
}  // namespace bethe
