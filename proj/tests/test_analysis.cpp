#include <gtest/gtest.h>

#include "printers.hpp"

#include <cmath>

#include "bethe/analysis.hpp"
#include "bethe/errors.hpp"

namespace bethe {
namespace {

const Precision kP = kDefaultPrecision;

FloatSeries power_law_series(double c, double rho, std::uint64_t n_min, std::uint64_t n_max) {
    FloatSeries s{ModelParams::critical(2), NumberMode::Float, kP, {}};
    for (std::uint64_t n : geometric_heights(n_min, n_max, 1.1)) {
        const BigFloat m = BigFloat(c, kP) * pow(BigFloat(static_cast<long>(n), kP), BigFloat(-rho, kP));
        s.rows.push_back({n, 1L - m, m});
    }
    return s;
}

TEST(Heights, GeometricGrid) {
    const auto h = geometric_heights(1000, 1'000'000);
    EXPECT_EQ(h.front(), 1000U);
    EXPECT_EQ(h.back(), 1'000'000U);
    for (std::size_t i = 1; i < h.size(); ++i) EXPECT_GT(h[i], h[i - 1]);
    EXPECT_EQ(geometric_heights(1, 3, 1.2), (std::vector<std::uint64_t>{1, 2, 3}));
    EXPECT_EQ(geometric_heights(5, 5), (std::vector<std::uint64_t>{5}));
    EXPECT_THROW(geometric_heights(0, 5), DomainError);
    EXPECT_THROW(geometric_heights(2, 5, 1.0), DomainError);
}

TEST(Fit, RecoversSyntheticExponent) {
    const FitResult fit = fit_exponent(power_law_series(1.3, 0.5, 100, 100'000), {100, 100'000});
    EXPECT_NEAR(fit.rho_hat, 0.5, 1e-12);
    EXPECT_LT(fit.residual_max, 1e-12);
    EXPECT_GT(fit.points, 10U);
}

TEST(Fit, WindowChecks) {
    const FloatSeries s = power_law_series(1.0, 0.5, 100, 1000);
    EXPECT_THROW(fit_exponent(s, {10, 1000}), DomainError);
    EXPECT_THROW(fit_exponent(s, {100, 5000}), DomainError);
    EXPECT_THROW(fit_exponent(s, {500, 100}), DomainError);
    EXPECT_THROW(fit_exponent(s, {100, 105}), DomainError);
}

TEST(Fit, CriticalBinaryShortRange) {
    const ModelParams p = ModelParams::critical(2);
    const FloatSeries s = magnetization_series(p, geometric_heights(1000, 100'000), kP);
    EXPECT_NEAR(fit_exponent(s, {1000, 100'000}).rho_hat, 0.5, 0.05);
}

TEST(ArmConstants, BinaryWindow) {
    const FloatSeries s = magnetization_series(ModelParams::critical(2), geometric_heights(9, 20'000), kP);
    const ArmConstants c = arm_constants(s, {9, 20'000});
    EXPECT_GT(c.lower_constant, BigFloat(Rational(20, 49), kP));
    EXPECT_LT(c.upper_constant, 2L * sqrt(BigFloat(2L, kP)));
    EXPECT_THROW(arm_constants(s, {8, 20'000}), DomainError);
}

TEST(ArmConstants, RejectsNonCritical) {
    FloatSeries s = power_law_series(1.0, 0.5, 100, 1000);
    s.params = ModelParams(2, RationalT{Rational(5, 2)});
    EXPECT_THROW(arm_constants(s, {100, 1000}), DomainError);
}

TEST(Enclosure, BinaryShortRun) {
    const EnclosureReport r = check_magnetization_enclosure(2, 20'000, kP);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.first_height, 9U);
    EXPECT_EQ(r.n_checked, 20'000U - 8U);
    EXPECT_NEAR(r.max_scaled.to_double(), std::sqrt(2.0), 0.1);
}

TEST(Scan, OrderedRowsAcrossTransition) {
    const auto rows = scan_beta(2, linear_beta_grid(BigFloat(0.4, kP), BigFloat(0.7, kP), 4), 10'000, kP);
    ASSERT_EQ(rows.size(), 4U);
    for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GT(rows[i].beta, rows[i - 1].beta);
    EXPECT_LT(rows[0].magnetization, BigFloat(1e-10, kP));
    EXPECT_LT(rows[1].magnetization, BigFloat(1e-10, kP));
    EXPECT_GT(rows[2].magnetization, BigFloat(0.1, kP));
    EXPECT_GT(rows[3].magnetization, rows[2].magnetization);
}

TEST(Scan, InputChecks) {
    EXPECT_THROW(scan_beta(2, {}, 10, kP), DomainError);
    EXPECT_THROW(scan_beta(2, {BigFloat(-0.1, kP)}, 10, kP), DomainError);
    EXPECT_THROW(scan_beta(2, {BigFloat(0.1, kP)}, 0, kP), DomainError);
    EXPECT_THROW(linear_beta_grid(BigFloat(0.5, kP), BigFloat(0.4, kP), 3), DomainError);
    EXPECT_EQ(linear_beta_grid(BigFloat(0.5, kP), BigFloat(0.5, kP), 1).size(), 1U);
}

TEST(Betac, BinaryBisection) {
    const BetacEstimate e = estimate_betac(2, 1e-5);
    EXPECT_NEAR(e.beta_hat.to_double(), 0.54931, 1e-4);
    EXPECT_LE(e.deviation, BigFloat(1e-4, kP));
    EXPECT_GE(e.trace.size(), 2U);
}

TEST(Betac, OptionChecks) {
    EXPECT_THROW(estimate_betac(2, 1e-9), ConfigError);
    EXPECT_THROW(estimate_betac(1, 1e-3), DomainError);
    BetacOptions bad;
    bad.bracket_hi = 0.3;  // both ends subcritical
    EXPECT_THROW(estimate_betac(2, 1e-3, bad), VerificationError);
}

TEST(FixedPointSlope, ExactAtCriticality) {
    for (int d = 2; d <= 12; ++d) {
        EXPECT_EQ(std::get<Rational>(fixed_point_slope(ModelParams::critical(d))), Rational(1)) << d;
    }
    EXPECT_EQ(std::get<Rational>(fixed_point_slope(ModelParams(2, RationalT{Rational(5, 2)}))), Rational(6, 7));
    const auto slope = fixed_point_slope(ModelParams(3, FloatBeta{BigFloat(0.2, kP)}), kP);
    EXPECT_NEAR(std::get<BigFloat>(slope).to_double(), 3 * std::tanh(0.2), 1e-15);
}

}  // namespace
}  // namespace bethe
