#include "bethe/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "bethe/detail/parallel.hpp"
#include "bethe/errors.hpp"

namespace bethe {

std::vector<std::uint64_t> geometric_heights(std::uint64_t n_min, std::uint64_t n_max, double ratio) {
    if (n_min == 0 || n_min > n_max) throw DomainError("geometric heights need 1 <= n_min <= n_max");
    if (!(ratio > 1.0)) throw DomainError("geometric ratio must exceed 1");
    std::vector<std::uint64_t> out;
    for (double h = static_cast<double>(n_min); h < static_cast<double>(n_max); h *= ratio) {
        const auto rounded = static_cast<std::uint64_t>(std::llround(h));
        if (out.empty() || rounded > out.back()) out.push_back(rounded);
    }
    if (out.empty() || out.back() != n_max) {
        if (!out.empty() && out.back() > n_max) out.pop_back();
        out.push_back(n_max);
    }
    return out;
}

FitResult fit_exponent(const FloatSeries& series, HeightWindow window) {
    if (window.n_min >= window.n_max) throw DomainError("fit window needs n_min < n_max");
    if (series.rows.empty() || window.n_min < series.rows.front().n || window.n_max > series.rows.back().n) {
        throw DomainError("fit window [" + std::to_string(window.n_min) + ", " + std::to_string(window.n_max) +
                          "] is not covered by the series");
    }
    std::vector<long double> xs;
    std::vector<long double> ys;
    for (const auto& row : series.rows) {
        if (row.n < window.n_min || row.n > window.n_max) continue;
        if (!(row.magnetization > 0L)) throw DomainError("magnetization must be positive for a log-log fit");
        xs.push_back(std::log(static_cast<long double>(row.n)));
        ys.push_back(mpfr_get_ld(log(row.magnetization).raw(), MPFR_RNDN));
    }
    if (xs.size() < 10) {
        throw DomainError("fit window holds " + std::to_string(xs.size()) + " rows; at least 10 are required");
    }

    const auto count = static_cast<long double>(xs.size());
    long double mean_x = 0;
    long double mean_y = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= count;
    mean_y /= count;
    long double sxx = 0;
    long double sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
        sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    }
    const long double slope = sxy / sxx;
    const long double intercept = mean_y - slope * mean_x;
    long double ssr = 0;
    long double residual_max = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const long double residual = ys[i] - (intercept + slope * xs[i]);
        ssr += residual * residual;
        residual_max = std::max(residual_max, std::fabs(residual));
    }
    const long double variance = xs.size() > 2 ? ssr / (count - 2) : 0;

    FitResult fit;
    fit.rho_hat = static_cast<double>(-slope);
    fit.standard_error = static_cast<double>(std::sqrt(variance / sxx));
    fit.window = window;
    fit.residual_max = static_cast<double>(residual_max);
    fit.points = xs.size();
    return fit;
}

ArmConstants arm_constants(const FloatSeries& series, HeightWindow window) {
    const ModelParams& params = series.params;
    if (!params.is_critical()) throw DomainError("arm constants are defined at the critical coupling");
    const int d = params.d();
    const long dl = d;
    const Precision prec = series.precision.bits > 0 ? series.precision : kDefaultPrecision;
    const BigFloat k_lower_sq = BigFloat(6L * dl * dl, prec) / (dl * dl - 1);
    if (!(BigFloat(static_cast<long>(window.n_min), prec) > k_lower_sq)) {
        throw DomainError("window must start above 6 d^2/(d^2 - 1) = " + k_lower_sq.to_string(8));
    }
    if (window.n_min > window.n_max) throw DomainError("window needs n_min <= n_max");

    std::optional<BigFloat> lo;
    std::optional<BigFloat> hi;
    for (const auto& row : series.rows) {
        if (row.n < window.n_min || row.n > window.n_max) continue;
        const BigFloat scaled = row.magnetization * sqrt(BigFloat(static_cast<long>(row.n), prec));
        if (!lo || scaled < *lo) lo = scaled;
        if (!hi || scaled > *hi) hi = scaled;
    }
    if (!lo) throw DomainError("no series rows inside the window");

    const BigFloat half_k_upper = BigFloat(Rational(1 - initial_ratio_exact(params).value), prec) / 2L;
    const BigFloat k_lower = sqrt(k_lower_sq);
    if (*lo < half_k_upper || *hi > k_lower) {
        throw VerificationError("sqrt(n) m_n left [" + half_k_upper.to_string(10) + ", " + k_lower.to_string(10) +
                                "]: observed [" + lo->to_string(10) + ", " + hi->to_string(10) + "]");
    }
    return ArmConstants{std::move(*lo), std::move(*hi), window};
}

EnclosureReport check_magnetization_enclosure(int d, std::uint64_t n_max, Precision prec) {
    return check_magnetization_enclosure(d, n_max, prec, [](std::uint64_t, const BigFloat&) {});
}

namespace {

BigFloat magnetization_at(int d, const BigFloat& beta, std::uint64_t n, Precision prec) {
    const ModelParams params(d, FloatBeta{beta.with_precision(prec)});
    FloatRatioIterator it(params, prec);
    while (it.current().index + 1 < n) it.advance();
    return magnetization_rooted(it.current());
}

}  // namespace

std::vector<ScanRow> scan_beta(int d, std::vector<BigFloat> betas, std::uint64_t n, Precision prec) {
    require_supported_precision(prec);
    if (betas.empty()) throw DomainError("beta grid is empty");
    if (n == 0) throw DomainError("scan height must be >= 1");
    for (const BigFloat& b : betas) {
        if (!(b > 0L)) throw DomainError("beta grid values must be > 0");
    }
    std::sort(betas.begin(), betas.end(), [](const BigFloat& a, const BigFloat& b) { return a < b; });
    return detail::ordered_parallel_map(betas.size(), [&](std::size_t i) {
        return ScanRow{betas[i].with_precision(prec), magnetization_at(d, betas[i], n, prec)};
    });
}

std::vector<BigFloat> linear_beta_grid(const BigFloat& beta_min, const BigFloat& beta_max, int steps) {
    if (steps < 1) throw DomainError("beta grid needs at least one step");
    if (beta_max < beta_min) throw DomainError("beta_max must not be below beta_min");
    std::vector<BigFloat> out;
    if (steps == 1) {
        out.push_back(beta_min);
        return out;
    }
    const BigFloat width = beta_max - beta_min;
    for (int i = 0; i < steps; ++i) {
        out.push_back(beta_min + width * static_cast<long>(i) / static_cast<long>(steps - 1));
    }
    return out;
}

bool is_supercritical(int d, const BigFloat& beta, const BetacOptions& options) {
    const Precision prec = options.precision;
    const ModelParams params(d, FloatBeta{beta.with_precision(prec)});
    const BigFloat threshold(options.threshold, prec);
    FloatRatioIterator it(params, prec);
    const BigFloat first_gap = it.current().gap;
    bool decreasing_known = false;
    for (;;) {
        const BigFloat m = magnetization_rooted(it.current());
        // m_n is non-increasing in n once r_1 > r_0.
        if (decreasing_known && !(m > threshold)) return false;
        if (it.current().index + 1 >= options.height) return m > threshold;
        it.advance();
        if (it.current().index == 1) decreasing_known = it.current().gap < first_gap;
    }
}

BetacEstimate estimate_betac(int d, double tol, const BetacOptions& options) {
    if (d < 2) throw DomainError("branching number d must be >= 2");
    if (!(tol >= 1e-8)) throw ConfigError("betac tolerance must be >= 1e-8");
    require_supported_precision(options.precision);
    const Precision prec = options.precision;

    BetacEstimate out{BigFloat(prec), critical_beta(d, prec).beta, BigFloat(prec), {}};
    BigFloat lo(options.bracket_lo, prec);
    BigFloat hi(options.bracket_hi, prec);
    const bool lo_super = is_supercritical(d, lo, options);
    out.trace.emplace_back(lo, lo_super);
    const bool hi_super = is_supercritical(d, hi, options);
    out.trace.emplace_back(hi, hi_super);
    if (lo_super || !hi_super) {
        throw VerificationError("bracket [" + lo.to_string(6) + ", " + hi.to_string(6) +
                                "] does not straddle the transition for d = " + std::to_string(d));
    }
    const BigFloat width_tol(tol, prec);
    while (hi - lo >= width_tol) {
        BigFloat mid = (lo + hi) / 2L;
        const bool super = is_supercritical(d, mid, options);
        out.trace.emplace_back(mid, super);
        (super ? hi : lo) = std::move(mid);
    }

    // Every supercritical coupling on the trace must lie above every subcritical one.
    std::optional<BigFloat> max_sub;
    std::optional<BigFloat> min_super;
    for (const auto& [beta, super] : out.trace) {
        if (super) {
            if (!min_super || beta < *min_super) min_super = beta;
        } else if (!max_sub || beta > *max_sub) {
            max_sub = beta;
        }
    }
    if (max_sub && min_super && !(*max_sub < *min_super)) {
        throw VerificationError("classifier is not monotone in beta: subcritical at " + max_sub->to_string(12) +
                                " but supercritical at " + min_super->to_string(12));
    }

    out.beta_hat = (lo + hi) / 2L;
    out.deviation = abs(out.beta_hat - out.reference);
    return out;
}

std::variant<Rational, BigFloat> fixed_point_slope(const ModelParams& params, Precision prec) {
    const long d = params.d();
    if (auto b = params.exact_b()) return canonical(Rational(d * (*b - 1) / (*b + 1)));
    return static_cast<BigFloat>(tanh(params.beta(prec)) * d);
}

}  // namespace bethe
