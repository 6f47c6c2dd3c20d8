#include "bethe/oracle.hpp"

#include <string>

#include "bethe/errors.hpp"

namespace bethe {

namespace {

int boundary_sign(Boundary b) { return b == Boundary::Plus ? 1 : -1; }

Rational require_rational_t(const ModelParams& params) {
    auto t = params.exact_b();
    if (!t) throw ModeError("exact enumeration needs a rational t = e^{2 beta}");
    return *t;
}

Rational rational_sqrt(const Rational& q) {
    Integer num;
    Integer den;
    mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
    return canonical(Rational(num, den));
}

struct ExactSums {
    Rational numerator;    // sum sigma_0 t^{(H_max - H)/2}
    Rational denominator;  // sum t^{(H_max - H)/2}
    long max_energy;
};

ExactSums exact_sums(const ModelParams& params, int n, const OracleOptions& options) {
    const Rational t = require_rational_t(params);
    const FiniteTree tree = build_tree(params.d(), n, options.shape);
    const EnergyHistogram hist = energy_histogram(tree, options.boundary);

    // Every term of H is odd-valued per edge and count-valued per boundary
    // vertex, so H - H_max is always even and the powers below are integral.
    ExactSums sums{Rational(0), Rational(0), hist.max_energy};
    Rational power(1);  // t^{(H_max - H)/2}, H descending from H_max
    for (long idx = static_cast<long>(hist.root_plus.size()) - 1; idx >= 0; --idx) {
        const long energy = idx - hist.max_energy;
        const long shift = hist.max_energy - energy;
        const std::uint64_t plus = hist.root_plus[static_cast<std::size_t>(idx)];
        const std::uint64_t minus = hist.root_minus[static_cast<std::size_t>(idx)];
        if (shift % 2 == 0) {
            if (plus != 0 || minus != 0) {
                const Integer p(static_cast<unsigned long>(plus));
                const Integer m(static_cast<unsigned long>(minus));
                sums.numerator += Rational(p - m) * power;
                sums.denominator += Rational(p + m) * power;
            }
            power *= t;
        } else if (plus != 0 || minus != 0) {
            throw VerificationError("odd energy gap in histogram; parity argument violated");
        }
    }
    return sums;
}

}  // namespace

std::size_t FiniteTree::generation_size(int k) const {
    std::size_t count = 0;
    for (int g : generation) count += (g == k) ? 1 : 0;
    return count;
}

FiniteTree build_tree(int d, int n, TreeShape shape) {
    if (d < 2) throw DomainError("branching number d must be >= 2");
    if (n < 1) throw DomainError("tree height must be >= 1");

    // Size check before allocating anything.
    std::size_t total = 1;
    std::size_t width = 1;
    for (int k = 1; k <= n; ++k) {
        width *= static_cast<std::size_t>((k == 1 && shape == TreeShape::Regular) ? d + 1 : d);
        total += width;
        if (total > kMaxOracleVertices) {
            throw SizeError("tree (d = " + std::to_string(d) + ", n = " + std::to_string(n) +
                            ") exceeds the enumeration guard of 2^" + std::to_string(kMaxOracleVertices) +
                            " configurations");
        }
    }

    FiniteTree tree;
    tree.d = d;
    tree.height = n;
    tree.shape = shape;
    tree.generation.push_back(0);
    std::size_t begin = 0;
    std::size_t end = 1;
    for (int k = 1; k <= n; ++k) {
        for (std::size_t parent = begin; parent < end; ++parent) {
            const int children = (parent == 0 && shape == TreeShape::Regular) ? d + 1 : d;
            for (int c = 0; c < children; ++c) {
                tree.edges.emplace_back(parent, tree.generation.size());
                tree.generation.push_back(k);
            }
        }
        begin = end;
        end = tree.generation.size();
    }
    // Boundary children of W_n; for n >= 1 the root is never in W_n, so each
    // leaf has exactly d of them.
    for (std::size_t v = begin; v < end; ++v) tree.boundary.push_back({v, d});
    return tree;
}

SpinConfig::SpinConfig(std::size_t size, std::uint64_t bits) : size_(size), bits_(bits) {
    if (size > 64) throw DomainError("spin configurations are limited to 64 vertices");
    if (size < 64) bits_ &= (std::uint64_t{1} << size) - 1;
}

SpinConfig SpinConfig::all_plus(std::size_t size) { return SpinConfig(size, ~std::uint64_t{0}); }

void SpinConfig::set(std::size_t vertex, int spin) {
    if (vertex >= size_) throw DomainError("vertex index out of range");
    const std::uint64_t mask = std::uint64_t{1} << vertex;
    bits_ = spin > 0 ? (bits_ | mask) : (bits_ & ~mask);
}

SpinConfig SpinConfig::flipped() const { return SpinConfig(size_, ~bits_); }

long hamiltonian(const SpinConfig& config, const FiniteTree& tree, Boundary boundary) {
    if (config.size() != tree.vertex_count()) {
        throw DomainError("configuration has " + std::to_string(config.size()) + " spins, tree has " +
                          std::to_string(tree.vertex_count()) + " vertices");
    }
    long energy = 0;
    for (const auto& [x, y] : tree.edges) energy -= config.spin(x) * config.spin(y);
    const int eta = boundary_sign(boundary);
    for (const BoundaryEdge& b : tree.boundary) energy -= static_cast<long>(b.count) * config.spin(b.vertex) * eta;
    return energy;
}

EnergyHistogram energy_histogram(const FiniteTree& tree, Boundary boundary) {
    const std::size_t n_vertices = tree.vertex_count();
    if (n_vertices > kMaxOracleVertices) throw SizeError("tree exceeds the enumeration guard");

    EnergyHistogram hist;
    hist.max_energy = static_cast<long>(tree.edges.size());
    for (const BoundaryEdge& b : tree.boundary) hist.max_energy += b.count;
    const auto bins = static_cast<std::size_t>(2 * hist.max_energy + 1);
    hist.root_plus.assign(bins, 0);
    hist.root_minus.assign(bins, 0);

    const std::uint64_t configs = std::uint64_t{1} << n_vertices;
    for (std::uint64_t bits = 0; bits < configs; ++bits) {
        const long energy = hamiltonian(SpinConfig(n_vertices, bits), tree, boundary);
        auto& bucket = (bits & 1U) != 0 ? hist.root_plus : hist.root_minus;
        ++bucket[static_cast<std::size_t>(energy + hist.max_energy)];
    }
    return hist;
}

bool equal_at(const SurdValue& a, const SurdValue& b, const Rational& t) {
    if (t <= 0) throw DomainError("t must be positive");
    const std::int64_t diff = a.half_power - b.half_power;
    if (diff % 2 == 0) return a.coefficient * pow(t, static_cast<long>(diff / 2)) == b.coefficient;
    if (is_rational_square(t)) return a.coefficient * pow(rational_sqrt(t), static_cast<long>(diff)) == b.coefficient;
    // sqrt(t) irrational: q1 sqrt(t)^odd = q2 only when both vanish.
    return a.coefficient == 0 && b.coefficient == 0;
}

Rational root_magnetization_exact(const ModelParams& params, int n, OracleOptions options) {
    const ExactSums sums = exact_sums(params, n, options);
    return canonical(Rational(sums.numerator / sums.denominator));
}

SurdValue partition_function_exact(const ModelParams& params, int n, OracleOptions options) {
    const ExactSums sums = exact_sums(params, n, options);
    return SurdValue{sums.denominator, -static_cast<std::int64_t>(sums.max_energy)};
}

namespace {

std::pair<BigFloat, BigFloat> float_sums(const ModelParams& params, int n, Precision prec,
                                         const OracleOptions& options) {
    require_supported_precision(prec);
    const FiniteTree tree = build_tree(params.d(), n, options.shape);
    const EnergyHistogram hist = energy_histogram(tree, options.boundary);
    const BigFloat beta = params.beta(prec);
    BigFloat numerator(prec);
    BigFloat denominator(prec);
    // Ascending energy.
    for (std::size_t idx = 0; idx < hist.root_plus.size(); ++idx) {
        const std::uint64_t plus = hist.root_plus[idx];
        const std::uint64_t minus = hist.root_minus[idx];
        if (plus == 0 && minus == 0) continue;
        const long energy = static_cast<long>(idx) - hist.max_energy;
        const BigFloat weight = exp(-beta * energy);
        numerator += weight * (static_cast<long>(plus) - static_cast<long>(minus));
        denominator += weight * static_cast<long>(plus + minus);
    }
    return {std::move(numerator), std::move(denominator)};
}

}  // namespace

BigFloat root_magnetization(const ModelParams& params, int n, Precision prec, OracleOptions options) {
    auto [numerator, denominator] = float_sums(params, n, prec, options);
    return numerator / denominator;
}

BigFloat partition_function(const ModelParams& params, int n, Precision prec, OracleOptions options) {
    return float_sums(params, n, prec, options).second;
}

}  // namespace bethe
