#include <gtest/gtest.h>

#include "printers.hpp"

#include <numeric>
#include <random>

#include "bethe/errors.hpp"
#include "bethe/oracle.hpp"
#include "bethe/recursion.hpp"

namespace bethe {
namespace {

const Precision kP = kDefaultPrecision;

TEST(FiniteTree, Shapes) {
    const FiniteTree rooted = build_tree(2, 2);
    EXPECT_EQ(rooted.vertex_count(), 7U);
    EXPECT_EQ(rooted.edges.size(), 6U);
    EXPECT_EQ(rooted.generation_size(2), 4U);
    EXPECT_EQ(rooted.boundary.size(), 4U);
    for (const BoundaryEdge& e : rooted.boundary) EXPECT_EQ(e.count, 2);

    const FiniteTree regular = build_tree(2, 1, TreeShape::Regular);
    EXPECT_EQ(regular.vertex_count(), 4U);
    EXPECT_EQ(regular.generation_size(1), 3U);

    EXPECT_EQ(build_tree(3, 2).vertex_count(), 13U);
    EXPECT_THROW(build_tree(2, 30), SizeError);
    EXPECT_THROW(build_tree(2, 0), DomainError);
    EXPECT_THROW(build_tree(1, 2), DomainError);
}

TEST(Hamiltonian, AllPlusGroundState) {
    const FiniteTree tree = build_tree(2, 1);
    // 2 internal edges + 4 boundary edges, all satisfied.
    EXPECT_EQ(hamiltonian(SpinConfig::all_plus(3), tree), -6);
    EXPECT_EQ(hamiltonian(SpinConfig::all_plus(3), tree, Boundary::Minus), 2);
    EXPECT_THROW(hamiltonian(SpinConfig::all_plus(2), tree), DomainError);
}

TEST(Hamiltonian, GlobalFlipSwapsBoundary) {
    std::mt19937_64 rng(17);
    for (int d = 2; d <= 3; ++d) {
        const FiniteTree tree = build_tree(d, 2);
        const std::size_t v = tree.vertex_count();
        for (int trial = 0; trial < 200; ++trial) {
            const SpinConfig c(v, rng() & ((std::uint64_t{1} << v) - 1));
            EXPECT_EQ(hamiltonian(c, tree, Boundary::Plus), hamiltonian(c.flipped(), tree, Boundary::Minus));
        }
    }
}

TEST(Histogram, CountsEveryConfiguration) {
    const FiniteTree tree = build_tree(2, 2);
    const EnergyHistogram h = energy_histogram(tree);
    const auto total = std::accumulate(h.root_plus.begin(), h.root_plus.end(), std::uint64_t{0}) +
                       std::accumulate(h.root_minus.begin(), h.root_minus.end(), std::uint64_t{0});
    EXPECT_EQ(total, std::uint64_t{1} << tree.vertex_count());
    EXPECT_EQ(h.root_plus[static_cast<std::size_t>(h.max_energy - 14)], 1U);  // all plus, H = -14
}

TEST(Oracle, CriticalBinaryValues) {
    EXPECT_EQ(root_magnetization_exact(ModelParams::critical(2), 1), Rational(20, 29));
    EXPECT_EQ(root_magnetization_exact(ModelParams::critical(2), 2), Rational(580, 941));
    EXPECT_EQ(root_magnetization_exact(ModelParams::critical(2), 3), Rational(545780, 969581));
    EXPECT_EQ(root_magnetization_exact(ModelParams::critical(3), 1), Rational(3913, 5913));
}

TEST(Oracle, RegularTreeAndMinusBoundary) {
    const ModelParams p = ModelParams::critical(2);
    EXPECT_EQ(root_magnetization_exact(p, 1, {TreeShape::Regular, Boundary::Plus}), Rational(158, 185));
    EXPECT_EQ(root_magnetization_exact(p, 2, {TreeShape::Rooted, Boundary::Minus}), Rational(-580, 941));
}

TEST(Oracle, PartitionFunction) {
    const ModelParams p = ModelParams::critical(2);
    const SurdValue z = partition_function_exact(p, 1);
    // Z_1 = x_0 + y_0 = 784/27 + 16/3.
    EXPECT_TRUE(equal_at(z, SurdValue{Rational(928, 27), 0}, Rational(3)));
    EXPECT_FALSE(equal_at(z, SurdValue{Rational(928, 27), 1}, Rational(3)));
    EXPECT_LT(relative_error(partition_function(p, 1, kP), BigFloat(Rational(928, 27), kP)), exp2i(-120, kP));
}

TEST(Oracle, FloatAgreesWithRecursionOffCriticality) {
    for (double beta : {0.1, 0.7, 1.5}) {
        const ModelParams p(2, FloatBeta{BigFloat(beta, kP)});
        const auto rs = iterate_ratio(p, 3, kP);
        for (int n = 1; n <= 3; ++n) {
            const BigFloat brute = root_magnetization(p, n, kP);
            EXPECT_LT(relative_error(brute, magnetization_rooted(rs[n - 1])), exp2i(-110, kP)) << beta << " " << n;
        }
    }
}

TEST(Oracle, ExactNeedsRationalCoupling) {
    EXPECT_THROW(root_magnetization_exact(ModelParams(2, FloatBeta{BigFloat(0.3, kP)}), 1), ModeError);
}

TEST(Oracle, MagnetizationIncreasesWithBeta) {
    BigFloat previous(kP);
    for (double beta : {0.05, 0.2, 0.4, 0.8, 1.6}) {
        const BigFloat m = root_magnetization(ModelParams(2, FloatBeta{BigFloat(beta, kP)}), 2, kP);
        EXPECT_GT(m, previous);
        previous = m;
    }
}

}  // namespace
}  // namespace bethe
