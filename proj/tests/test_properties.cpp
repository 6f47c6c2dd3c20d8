#include <gtest/gtest.h>

#include "printers.hpp"

#include <random>

#include "bethe/oracle.hpp"
#include "bethe/recursion.hpp"

namespace bethe {
namespace {

const Precision kP = kDefaultPrecision;

TEST(Property, ExpandedAndClosedFormAgree) {
    std::mt19937_64 rng(0xb37e);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> degree(2, 12);
    const BigFloat ulp_budget = exp2i(-static_cast<long>(kP.bits) + 3, kP);  // 4 ulp at 1
    for (int i = 0; i < 2000; ++i) {
        const int d = degree(rng);
        const BigFloat r(unit(rng) + 1e-12, kP);
        const BigFloat b(1.0 + 4.0 * unit(rng) + 1e-9, kP);
        const BigFloat closed = g_map(r, b, d);
        EXPECT_LE(relative_error(closed, g_map_expanded(r, b, d)), ulp_budget) << d;
    }
}

TEST(Property, ExactIdentityOnRationals) {
    std::mt19937_64 rng(0xb37f);
    std::uniform_int_distribution<long> num(1, 999);
    for (int i = 0; i < 300; ++i) {
        const long p = num(rng);
        const Rational r(p, 1000);
        const Rational b(1000 + num(rng), 1000);
        const int d = 2 + i % 5;
        EXPECT_EQ(g_map(r, b, d), g_map_expanded(r, b, d));
    }
}

TEST(Property, GIsIncreasingAndFixesOne) {
    std::mt19937_64 rng(0xb380);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const int d = 2 + i % 9;
        const BigFloat b(1.0 + 5.0 * unit(rng) + 1e-6, kP);
        double lo = unit(rng);
        double hi = unit(rng);
        if (lo > hi) std::swap(lo, hi);
        if (!(lo > 0.0) || hi - lo < 1e-9) continue;
        EXPECT_LT(g_map(BigFloat(lo, kP), b, d), g_map(BigFloat(hi, kP), b, d));
        EXPECT_EQ(g_map(BigFloat(1L, kP), b, d), 1L);
    }
}

TEST(Property, SpinFlipSymmetry) {
    std::mt19937_64 rng(0xb381);
    const FiniteTree tree = build_tree(2, 3);
    const std::size_t v = tree.vertex_count();
    for (int i = 0; i < 500; ++i) {
        const SpinConfig c(v, rng() & ((std::uint64_t{1} << v) - 1));
        EXPECT_EQ(hamiltonian(c, tree, Boundary::Plus), hamiltonian(c.flipped(), tree, Boundary::Minus));
    }
}

TEST(Property, MagnetizationMonotoneInBeta) {
    std::mt19937_64 rng(0xb382);
    std::uniform_real_distribution<double> unit(0.01, 2.0);
    for (int i = 0; i < 40; ++i) {
        double a = unit(rng);
        double b = unit(rng);
        if (a > b) std::swap(a, b);
        if (b - a < 1e-6) continue;
        const int d = 2 + i % 4;
        const std::uint64_t n = 1 + static_cast<std::uint64_t>(i) * 5;
        const auto lo = iterate_ratio(ModelParams(d, FloatBeta{BigFloat(a, kP)}), n, kP).back();
        const auto hi = iterate_ratio(ModelParams(d, FloatBeta{BigFloat(b, kP)}), n, kP).back();
        EXPECT_LT(magnetization_rooted(lo), magnetization_rooted(hi)) << d << " " << a << " " << b;
    }
}

}  // namespace
}  // namespace bethe
