#pragma once

// Exhaustive-summation ground truth for <sigma_0>^+_n on small trees, built
// directly from the Hamiltonian and the Gibbs weights.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "bethe/big_float.hpp"
#include "bethe/model.hpp"
#include "bethe/rational.hpp"

namespace bethe {

enum class TreeShape {
    Rooted,   ///< every vertex has d children
    Regular,  ///< the root has d + 1 children, every other vertex d
};

/// Sign of the fixed spins on generation n + 1.
enum class Boundary { Plus, Minus };

/// A vertex of the last generation W_n together with its number of
/// boundary children (all carrying the boundary spin).
struct BoundaryEdge {
    std::size_t vertex;
    int count;
};

/// Height-n volume V_n with breadth-first vertex indices (root = 0).
struct FiniteTree {
    int d = 0;
    int height = 0;
    TreeShape shape = TreeShape::Rooted;
    std::vector<int> generation;                              ///< generation label per vertex
    std::vector<std::pair<std::size_t, std::size_t>> edges;   ///< (parent, child) pairs of L_n
    std::vector<BoundaryEdge> boundary;                       ///< one entry per vertex of W_n

    [[nodiscard]] std::size_t vertex_count() const { return generation.size(); }
    [[nodiscard]] std::size_t generation_size(int k) const;
};

/// Enumeration guard: at most 2^25 configurations.
inline constexpr std::size_t kMaxOracleVertices = 25;

/// Throws DomainError for d < 2 or n < 1, SizeError past the guard.
FiniteTree build_tree(int d, int n, TreeShape shape = TreeShape::Rooted);

/// Spin assignment on V_n; bit i set means sigma_i = +1.
class SpinConfig {
public:
    SpinConfig(std::size_t size, std::uint64_t bits);
    static SpinConfig all_plus(std::size_t size);

    [[nodiscard]] std::size_t size() const { return size_; }
    [[nodiscard]] std::uint64_t bits() const { return bits_; }
    [[nodiscard]] int spin(std::size_t vertex) const { return ((bits_ >> vertex) & 1U) != 0 ? 1 : -1; }
    void set(std::size_t vertex, int spin);
    /// Global spin flip.
    [[nodiscard]] SpinConfig flipped() const;

private:
    std::size_t size_;
    std::uint64_t bits_;
};

/// H(sigma) = -sum_{edges} s_x s_y - sum_{x in W_n} sum_{y in S(x)} s_x eta_y.
/// Throws DomainError when the configuration does not cover the tree.
long hamiltonian(const SpinConfig& config, const FiniteTree& tree, Boundary boundary = Boundary::Plus);

/// Number of configurations per energy, split by root spin.
struct EnergyHistogram {
    long max_energy = 0;                 ///< |H| <= max_energy; index = H + max_energy
    std::vector<std::uint64_t> root_plus;
    std::vector<std::uint64_t> root_minus;
};

EnergyHistogram energy_histogram(const FiniteTree& tree, Boundary boundary = Boundary::Plus);

/// coefficient * t^{half_power / 2}; keeps Boltzmann sums rational when
/// t = e^{2 beta} is rational.
struct SurdValue {
    Rational coefficient;
    std::int64_t half_power = 0;
};

/// Exact equality of two SurdValues at the given t > 0.
bool equal_at(const SurdValue& a, const SurdValue& b, const Rational& t);

struct OracleOptions {
    TreeShape shape = TreeShape::Rooted;
    Boundary boundary = Boundary::Plus;
};

/// sum_sigma sigma_0 e^{-beta H} / sum_sigma e^{-beta H}, exactly.
/// Throws ModeError when t is not rational.
Rational root_magnetization_exact(const ModelParams& params, int n, OracleOptions options = {});

/// Same sum in floating point; works for any coupling.
BigFloat root_magnetization(const ModelParams& params, int n, Precision prec = kDefaultPrecision,
                            OracleOptions options = {});

/// Z_n = sum_sigma e^{-beta H}, exactly, as t^{-H_max/2} * (integer polynomial in t).
SurdValue partition_function_exact(const ModelParams& params, int n, OracleOptions options = {});

BigFloat partition_function(const ModelParams& params, int n, Precision prec = kDefaultPrecision,
                            OracleOptions options = {});

}  // namespace bethe
