#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "bethe/big_float.hpp"
#include "bethe/model.hpp"
#include "bethe/rational.hpp"
#include "bethe/recursion.hpp"

namespace bethe {

struct HeightWindow {
    std::uint64_t n_min = 0;
    std::uint64_t n_max = 0;
};

/// Heights n_min, round(n_min * ratio), ... , n_max; rounded, deduplicated,
/// always containing both endpoints.
std::vector<std::uint64_t> geometric_heights(std::uint64_t n_min, std::uint64_t n_max, double ratio = 1.2);

inline constexpr double kDefaultSamplingRatio = 1.2;
inline constexpr HeightWindow kDefaultFitWindow{1'000, 1'000'000};

struct FitResult {
    double rho_hat = 0.0;         ///< minus the log-log slope
    double standard_error = 0.0;  ///< of the slope
    HeightWindow window;
    double residual_max = 0.0;    ///< max |log m - fitted| over the window
    std::size_t points = 0;
};

/// Unweighted least squares of log m_n on log n over rows inside the window.
/// Throws DomainError when the window leaves the series or holds < 10 rows.
FitResult fit_exponent(const FloatSeries& series, HeightWindow window);

struct ArmConstants {
    BigFloat lower_constant;  ///< min over the window of sqrt(n) m_n
    BigFloat upper_constant;  ///< max over the window of sqrt(n) m_n
    HeightWindow window;
};

/// Extremes of sqrt(n) m_n at criticality. Throws DomainError unless the
/// window starts above k_lower^2 = 6 d^2/(d^2 - 1), and VerificationError if
/// the extremes leave [k_upper / 2, k_lower].
ArmConstants arm_constants(const FloatSeries& series, HeightWindow window);

struct EnclosureReport {
    int d = 0;
    std::uint64_t first_height = 0;  ///< smallest n > k_lower^2
    std::uint64_t n_checked = 0;
    std::vector<std::uint64_t> violations;
    BigFloat min_scaled;  ///< min of sqrt(n) m_n
    BigFloat max_scaled;  ///< max of sqrt(n) m_n

    [[nodiscard]] bool passed() const { return violations.empty(); }
};

/// Pointwise k_upper / (2 sqrt(n)) < m_n < k_lower / sqrt(n) for every
/// k_lower^2 < n <= n_max at the critical coupling.
EnclosureReport check_magnetization_enclosure(int d, std::uint64_t n_max, Precision prec = kDefaultPrecision);

/// Visitor-style variant that also hands every (n, m_n) to `observe`; used to
/// share one long run between the enclosure check and a fit.
template <class Observer>
EnclosureReport check_magnetization_enclosure(int d, std::uint64_t n_max, Precision prec, Observer&& observe);

struct ScanRow {
    BigFloat beta;
    BigFloat magnetization;  ///< m_n at the requested height
};

/// m_n for each beta, rows sorted by beta. Throws DomainError for an empty
/// grid, a non-positive beta or n = 0.
std::vector<ScanRow> scan_beta(int d, std::vector<BigFloat> betas, std::uint64_t n,
                               Precision prec = kDefaultPrecision);

/// Evenly spaced betas including both ends.
std::vector<BigFloat> linear_beta_grid(const BigFloat& beta_min, const BigFloat& beta_max, int steps);

struct BetacOptions {
    std::uint64_t height = 100'000;  ///< classification height N
    double threshold = 1e-2;         ///< supercritical iff m_N > threshold
    double bracket_lo = 1e-3;
    double bracket_hi = 2.0;
    Precision precision = kDefaultPrecision;
};

struct BetacEstimate {
    BigFloat beta_hat;
    BigFloat reference;  ///< atanh(1/d)
    BigFloat deviation;  ///< |beta_hat - reference|
    std::vector<std::pair<BigFloat, bool>> trace;  ///< (beta, supercritical) in evaluation order
};

/// Classifies one coupling by running the recursion to the classification height.
bool is_supercritical(int d, const BigFloat& beta, const BetacOptions& options);

/// Bisection on beta until the bracket is narrower than tol (tol >= 1e-8).
/// Throws VerificationError if the bracket ends are misclassified or the
/// classifications along the trace are not monotone in beta.
BetacEstimate estimate_betac(int d, double tol, const BetacOptions& options = {});

/// g'(1) = d (b - 1)/(b + 1) = d tanh(beta); exactly 1 at criticality.
/// Exact for rational t, float otherwise.
std::variant<Rational, BigFloat> fixed_point_slope(const ModelParams& params, Precision prec = kDefaultPrecision);

// ---------------------------------------------------------------------------

template <class Observer>
EnclosureReport check_magnetization_enclosure(int d, std::uint64_t n_max, Precision prec, Observer&& observe) {
    require_supported_precision(prec);
    const ModelParams params = ModelParams::critical(d);
    const long dl = d;
    const BigFloat k_lower_sq = BigFloat(6L * dl * dl, prec) / (dl * dl - 1);
    const BigFloat k_lower = sqrt(k_lower_sq);
    const BigFloat half_k_upper = BigFloat(Rational(1 - initial_ratio_exact(params).value), prec) / 2L;

    EnclosureReport report{d, 0, 0, {}, BigFloat(prec), BigFloat(prec)};
    bool first = true;
    for_each_ratio(params, n_max, prec, [&](const FloatRatio& r) {
        const std::uint64_t n = r.index + 1;
        const BigFloat m = magnetization_rooted(r);
        observe(n, m);
        if (!(BigFloat(static_cast<long>(n), prec) > k_lower_sq)) return;
        const BigFloat scaled = m * sqrt(BigFloat(static_cast<long>(n), prec));
        if (first) {
            report.first_height = n;
            report.min_scaled = scaled;
            report.max_scaled = scaled;
            first = false;
        } else {
            if (scaled < report.min_scaled) report.min_scaled = scaled;
            if (scaled > report.max_scaled) report.max_scaled = scaled;
        }
        ++report.n_checked;
        if (!(scaled > half_k_upper) || !(scaled < k_lower)) report.violations.push_back(n);
    });
    return report;
}

}  // namespace bethe
