#pragma once

// Two-sided envelope of the critical ratio sequence,
//
//   1 - k_upper / sqrt(n)  >=  r_{n-1}  >=  1 - k_lower / sqrt(n),
//   k_upper = 1 - r_0,   k_lower = sqrt(6) d / sqrt(d^2 - 1),
//
// together with the threshold and residual functions whose signs make the
// envelope propagate from one height to the next. Every function here is
// evaluated at b = (d+1)/(d-1); quantities involving d-th roots are computed
// in MPFR at the requested precision.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bethe/big_float.hpp"
#include "bethe/model.hpp"
#include "bethe/polynomial.hpp"
#include "bethe/rational.hpp"
#include "bethe/recursion.hpp"

namespace bethe {

/// Absolute slack below which an inequality is reported as a near-tie
/// instead of a pass or a violation.
BigFloat tie_tolerance(Precision prec);

struct BoundEnvelope {
    int d = 0;
    Rational k_upper;                         ///< 1 - r_0, exact
    BigFloat k_lower;                         ///< sqrt(6) d / sqrt(d^2 - 1)
    std::uint64_t trivial_regime_cutoff = 0;  ///< ceil(6 d^2 / (d^2 - 1))
};

/// ceil(6 d^2 / (d^2 - 1)); the lower envelope is vacuous up to this height.
std::uint64_t trivial_regime_cutoff(int d);

/// sqrt(6) d / sqrt(d^2 - 1).
BigFloat lower_envelope_constant(int d, Precision prec = kDefaultPrecision);

BoundEnvelope make_envelope(int d, Precision prec = kDefaultPrecision);

struct EnvelopeBounds {
    BigFloat lower;  ///< 0 in the trivial regime
    BigFloat upper;
    bool lower_trivial = false;
};

/// Bounds for r_{n-1}. Throws DomainError for n = 0.
EnvelopeBounds sandwich_envelope(const BoundEnvelope& env, std::uint64_t n, Precision prec = kDefaultPrecision);

struct SandwichViolation {
    std::uint64_t n = 0;
    BigFloat ratio;  ///< r_{n-1}
    BigFloat lower;
    BigFloat upper;
};

struct SandwichReport {
    int d = 0;
    std::uint64_t n_checked = 0;
    std::vector<SandwichViolation> violations;
    std::vector<std::uint64_t> near_ties;      ///< heights with |slack| below tie_tolerance
    std::optional<BigFloat> min_slack_upper;   ///< min over n of (1 - k_upper/sqrt(n)) - r_{n-1}
    std::optional<BigFloat> min_slack_lower;   ///< min over strict-regime n of r_{n-1} - lower

    [[nodiscard]] bool passed() const { return violations.empty(); }
};

/// Streaming envelope check. Feed r_{n-1} (index n - 1) in any order.
class SandwichChecker {
public:
    SandwichChecker(BoundEnvelope env, Precision prec);

    void observe(const FloatRatio& ratio);
    [[nodiscard]] const SandwichReport& report() const { return report_; }

private:
    BoundEnvelope env_;
    Precision prec_;
    BigFloat tolerance_;
    SandwichReport report_;
};

/// Checks a stored series computed at criticality. Throws DomainError when
/// the parameters are not critical or d differs from the envelope.
SandwichReport check_sandwich(const ModelParams& params, const std::vector<FloatRatio>& series,
                              const BoundEnvelope& env);

/// Runs the recursion to height n_max and checks every r_{n-1} on the fly.
SandwichReport check_sandwich(const ModelParams& params, std::uint64_t n_max, Precision prec,
                              const BoundEnvelope& env);

/// The threshold below which g(z) <= 1 - k/sqrt(n):
///   (-(d+1) w + (d-1)) / ((d-1) w - (d+1)),  w = (1 - k/sqrt(n))^{1/d}.
/// Requires d >= 2, n >= 1 and 0 < k <= sqrt(n).
BigFloat ratio_threshold(int d, std::uint64_t n, const BigFloat& k);

/// f(z) = [(d+1) z + (d-1)]^d - [(d-1) z + (d+1)]^d + (k/sqrt(n)) [(d-1) z + (d+1)]^d,
/// whose unique positive zero is ratio_threshold(d, n, k).
BigFloat threshold_polynomial(int d, std::uint64_t n, const BigFloat& k, const BigFloat& z);

/// Residual whose non-positivity on r >= 1 lets the lower envelope propagate:
///   2 sqrt(d^2 (6 r^2 - 1) + 1) ((1 - 1/r)^{1/d} - 1) + sqrt(6) ((1 - d)(1 - 1/r)^{1/d} + d + 1).
BigFloat lower_step_residual(int d, const BigFloat& r);

/// Integer polynomial of degree 2d + 2 whose non-negativity on (0, 1) is
/// equivalent to lower_step_residual <= 0:
///   4 (1-z)^2 (-d^2 (z^{2d} - 2 z^d - 5) + (z^d - 1)^2) - 6 (z^d - 1)^2 ((1-d) z + d + 1)^2.
/// Guarded to 2 <= d <= 200.
IntPolynomial lower_step_polynomial(int d);

struct FactorizationFailure {
    enum class Kind { NonzeroRemainder, NonPositiveCoefficient };
    Kind kind;
    std::size_t index;  ///< division step (0-4) or quotient coefficient index
    std::string message;
};

struct FactorizationCheck {
    IntPolynomial quotient;  ///< p / (1 - z)^5 when the division is exact
    std::optional<FactorizationFailure> failure;

    [[nodiscard]] bool passed() const { return !failure.has_value(); }
};

/// Divides p by (1 - z)^5 with five synthetic divisions at z = 1 and checks
/// that every quotient coefficient is a strictly positive integer.
FactorizationCheck factor_positivity_check(const IntPolynomial& p);

/// Residual whose non-positivity lets the upper envelope propagate:
///   (d (k - 2 sqrt(n-1)) - k) (((sqrt(n) - k)/sqrt(n))^{1/d} - 1) - 2k,
/// for d >= 2, 0 < k < 1, real n >= 1.
BigFloat upper_step_residual(int d, const BigFloat& k, const BigFloat& n);

/// d/dn of upper_step_residual in closed form; requires n > 1 and 0 <= k < 1.
BigFloat upper_step_residual_slope(int d, const BigFloat& n, const BigFloat& k);

/// Numerator controlling the sign of d/dk of the slope above:
///   -d^2 k^2 sqrt(n-1) - 2 d^2 k n + 2 d^2 k sqrt(n-1) sqrt(n) + 2 d^2 sqrt(n)
///   + 2 d k n - 2 d k sqrt(n-1) sqrt(n) - 2 d k + k^2 sqrt(n-1),
/// for d >= 2, n >= 1, 0 <= k <= 1.
BigFloat upper_step_slope_numerator(int d, const BigFloat& n, const BigFloat& k);

// ---------------------------------------------------------------------------
// Grid verification suites. The quantifiers "for all n, k" are sampled on the
// fixed grids below; a suite passes when it records zero violations.

struct GridReport {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t near_ties = 0;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
    std::optional<double> min_slack;

    [[nodiscard]] bool passed() const { return violations.empty(); }
};

struct ThresholdEquivalenceGrid {
    std::uint64_t samples = 4000;
    std::uint64_t seed = 0x5eed'b37e'0001ULL;
    int d_max = 6;
    std::uint64_t n_max = 10'000;
};

struct LowerPropagationGrid {
    int d_min = 2;
    int d_max = 10;
    std::uint64_t n_max = 100'000;
};

struct UpperPropagationGrid {
    int d_min = 2;
    int d_max = 10;
    std::uint64_t n_max = 100'000;
    std::vector<double> k_values{0.05, 0.25, 0.5, 0.75, 0.95, 1.0};  ///< 1 - r_0 is always added
};

struct ResidualMonotonicityGrid {
    std::vector<int> d_values{2, 3, 5};
    std::vector<double> k_values{0.1, 0.5, 0.9};
    int log2_n_max = 20;
    double limit_n = 1e8;
    double limit_tolerance = 1e-2;
};

struct SlopeGrid {
    int d_min = 2;
    int d_max = 10;
    std::vector<double> zero_n_values{1.5, 2, 3, 5, 10, 100, 1000, 100000};
    std::uint64_t s_n_max = 100;
    int s_k_steps = 20;  ///< k = i / s_k_steps for i = 1 .. s_k_steps - 1
};

struct SignStructureGrid {
    std::uint64_t samples = 200;
    std::uint64_t seed = 0x5eed'b37e'0002ULL;
    int d_max = 10;
    std::uint64_t n_max = 100'000;
    int z_points = 400;
};

struct ProofGrids {
    ThresholdEquivalenceGrid equivalence;
    LowerPropagationGrid lower;
    UpperPropagationGrid upper;
    ResidualMonotonicityGrid residual;
    SlopeGrid slope;
    SignStructureGrid sign;
};

/// z <= ratio_threshold(d, n, k)  <=>  g(z) <= 1 - k/sqrt(n), random samples.
GridReport verify_threshold_equivalence(const ThresholdEquivalenceGrid& grid, Precision prec = kDefaultPrecision);

/// ratio_threshold(d, n, k_lower) <= 1 - k_lower/sqrt(n-1) for n > cutoff.
/// The boundary height n = cutoff is evaluated too and reported as a note.
GridReport verify_lower_propagation(const LowerPropagationGrid& grid, Precision prec = kDefaultPrecision);

/// ratio_threshold(d, n, k) >= 1 - k/sqrt(n-1) for 2 <= n <= n_max, k <= 1.
GridReport verify_upper_propagation(const UpperPropagationGrid& grid, Precision prec = kDefaultPrecision);

/// upper_step_residual is <= 0, increasing in n, and tends to 0.
GridReport verify_residual_monotonicity(const ResidualMonotonicityGrid& grid, Precision prec = kDefaultPrecision);

/// slope(k = 0) == 0 and numerator(k) > numerator(1) >= 0.
GridReport verify_slope_signs(const SlopeGrid& grid, Precision prec = kDefaultPrecision);

/// f(0) < 0, f(1) = (k/sqrt(n)) 2^d d^d > 0, one sign change on (0, 1) located
/// at the threshold (dense grid + bisection).
GridReport verify_sign_structure(const SignStructureGrid& grid, Precision prec = kDefaultPrecision);

/// Runs factor_positivity_check on lower_step_polynomial(d) for d_min..d_max.
GridReport verify_polynomial_factorizations(int d_min, int d_max);

/// r_0 equals the upper envelope at n = 1, exactly.
GridReport verify_envelope_base_case(int d_min, int d_max);

/// All proof-inequality suites in a fixed order.
std::vector<GridReport> verify_proof_inequalities(const ProofGrids& grids, Precision prec = kDefaultPrecision);

}  // namespace bethe
