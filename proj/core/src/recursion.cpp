#include "bethe/recursion.hpp"

#include <string>
#include <utility>

#include "bethe/errors.hpp"

namespace bethe {

namespace {

/// Working precision for the scalar map forms.
Precision guarded(Precision p) { return Precision{p.bits + 32}; }

Rational require_exact_b(const ModelParams& params) {
    auto b = params.exact_b();
    if (!b) throw ModeError("exact mode needs a rational t = e^{2 beta}; got beta = " + params.describe_beta());
    return *b;
}

void require_unit_interval(const Rational& r) {
    if (r <= 0 || r > 1) throw DomainError("ratio must lie in (0, 1], got " + to_string(r));
}

void require_gap(const BigFloat& gap) {
    if (!gap.is_finite() || gap < 0L || gap >= 1L) {
        throw DomainError("ratio must lie in (0, 1], got gap 1 - r = " + gap.to_string(20));
    }
}

/// 1 - (1 - u)^d = u * sum_{j<d} v^j with v = 1 - u; every term is positive.
BigFloat one_minus_power(const BigFloat& u, const BigFloat& v, int d) {
    BigFloat acc(1L, u.precision());
    for (int j = 1; j < d; ++j) acc = acc * v + 1L;
    return u * acc;
}

}  // namespace

std::uint64_t max_exact_height(int d) {
    if (d < 2) throw DomainError("branching number d must be >= 2");
    if (d == 2) return 16;
    if (d == 3) return 10;
    return 6;
}

ExactRatio initial_ratio_exact(const ModelParams& params) {
    const Rational t = require_exact_b(params);
    const int d = params.d();
    const Rational base = (pow(t, static_cast<unsigned long>(d)) + t) / (pow(t, static_cast<unsigned long>(d + 1)) + 1);
    return ExactRatio{0, pow(canonical(base), static_cast<unsigned long>(d))};
}

FloatRatio initial_ratio(const ModelParams& params, Precision prec) {
    require_supported_precision(prec);
    if (params.exact_b()) {
        const ExactRatio exact = initial_ratio_exact(params);
        return FloatRatio{0, BigFloat(Rational(1 - exact.value), prec)};
    }
    // 1 - (b^d + b)/(b^{d+1} + 1) = (b^d - 1)(b - 1)/(b^{d+1} + 1)
    const int d = params.d();
    const BigFloat two_beta = 2L * params.beta(prec);
    const BigFloat b = exp(two_beta);
    const BigFloat u = expm1(static_cast<long>(d) * two_beta) * expm1(two_beta) / (pow(b, d + 1) + 1L);
    return FloatRatio{0, one_minus_power(u, 1L - u, d)};
}

Rational g_map(const Rational& r, const Rational& b, int d) {
    require_unit_interval(r);
    // With r = p/q and b = a/c: (b r + 1)/(b + r) = (a p + c q)/(a q + c p).
    const Integer& p = r.get_num();
    const Integer& q = r.get_den();
    const Integer& a = b.get_num();
    const Integer& c = b.get_den();
    Rational base(a * p + c * q, a * q + c * p);
    base.canonicalize();
    return pow(base, static_cast<unsigned long>(d));
}

BigFloat g_map(const BigFloat& r, const BigFloat& b, int d) {
    if (!(r > 0L) || r > 1L) throw DomainError("ratio must lie in (0, 1], got " + r.to_string(20));
    const Precision out = r.precision();
    const Precision work = guarded(out);
    const BigFloat rw = r.with_precision(work);
    const BigFloat bw = b.with_precision(work);
    return pow((bw * rw + 1L) / (bw + rw), static_cast<unsigned long>(d)).with_precision(out);
}

Rational g_map_expanded(const Rational& r, const Rational& b, int d) {
    require_unit_interval(r);
    const Rational inner = r + (1 - r * r) / (b + r);
    return pow(canonical(inner), static_cast<unsigned long>(d));
}

BigFloat g_map_expanded(const BigFloat& r, const BigFloat& b, int d) {
    if (!(r > 0L) || r > 1L) throw DomainError("ratio must lie in (0, 1], got " + r.to_string(20));
    const Precision out = r.precision();
    const Precision work = guarded(out);
    const BigFloat rw = r.with_precision(work);
    const BigFloat bw = b.with_precision(work);
    return pow(rw + (1L - rw * rw) / (bw + rw), static_cast<unsigned long>(d)).with_precision(out);
}

ExactRatio g_step(const ExactRatio& r, const ModelParams& params) {
    return ExactRatio{r.index + 1, g_map(r.value, require_exact_b(params), params.d())};
}

FloatRatio g_step(const FloatRatio& r, const ModelParams& params) {
    require_gap(r.gap);
    FloatRatioIterator it(params, r.precision());
    it.reset(r);
    it.advance();
    return it.current();
}

FloatRatioIterator::FloatRatioIterator(const ModelParams& params, Precision prec)
    : d_(params.d()),
      check_increase_(params.is_critical()),
      b_plus_one_(prec),
      b_minus_one_(prec),
      b_(prec),
      state_(initial_ratio(params, prec)),
      den_(prec),
      u_(prec),
      v_(prec),
      acc_(prec),
      next_(prec) {
    b_ = params.b(prec);
    if (auto exact = params.exact_b()) {
        b_plus_one_ = BigFloat(Rational(*exact + 1), prec);
        b_minus_one_ = BigFloat(Rational(*exact - 1), prec);
    } else {
        const BigFloat two_beta = 2L * params.beta(prec);
        b_plus_one_ = b_ + 1L;
        b_minus_one_ = expm1(two_beta);
    }
}

void FloatRatioIterator::reset(const FloatRatio& state) {
    require_gap(state.gap);
    state_.index = state.index;
    state_.gap = state.gap.with_precision(b_.precision());
    increasing_ = false;
}

void FloatRatioIterator::advance() {
    constexpr mpfr_rnd_t rnd = MPFR_RNDN;
    const mpfr_srcptr s = state_.gap.raw();

    // den = b + r = (b + 1) - s
    mpfr_sub(den_.raw(), b_plus_one_.raw(), s, rnd);
    // u = 1 - (b r + 1)/(b + r) = (b - 1) s / den
    mpfr_mul(u_.raw(), b_minus_one_.raw(), s, rnd);
    mpfr_div(u_.raw(), u_.raw(), den_.raw(), rnd);
    // v = (b r + 1)/(b + r) = ((b + 1) - b s) / den
    mpfr_mul(v_.raw(), b_.raw(), s, rnd);
    mpfr_sub(v_.raw(), b_plus_one_.raw(), v_.raw(), rnd);
    mpfr_div(v_.raw(), v_.raw(), den_.raw(), rnd);
    // next gap = 1 - v^d = u (1 + v + ... + v^{d-1})
    mpfr_set_ui(acc_.raw(), 1, rnd);
    for (int j = 1; j < d_; ++j) {
        mpfr_mul(acc_.raw(), acc_.raw(), v_.raw(), rnd);
        mpfr_add_ui(acc_.raw(), acc_.raw(), 1, rnd);
    }
    mpfr_mul(next_.raw(), u_.raw(), acc_.raw(), rnd);

    const bool positive_coupling = b_minus_one_.sign() > 0;
    if (positive_coupling && (next_.sign() <= 0 || !next_.is_finite())) {
        throw PrecisionError("ratio reached 1 at index " + std::to_string(state_.index + 1) +
                             "; 1 - r_n is below the representable range");
    }
    if (check_increase_) {
        const int cmp = mpfr_cmp(next_.raw(), s);
        if (state_.index == 0) {
            increasing_ = cmp < 0;
        } else if (increasing_ && cmp >= 0) {
            throw PrecisionError("critical ratio sequence stopped increasing at index " +
                                 std::to_string(state_.index + 1) + " (precision " +
                                 std::to_string(b_.precision().bits) + " bits)");
        }
    }
    mpfr_swap(state_.gap.raw(), next_.raw());
    ++state_.index;
}

std::vector<ExactRatio> iterate_ratio_exact(const ModelParams& params, std::uint64_t n_max) {
    const std::uint64_t limit = max_exact_height(params.d());
    if (n_max > limit) {
        throw SizeError("exact mode is limited to height " + std::to_string(limit) + " for d = " +
                        std::to_string(params.d()) + " (numerator digits grow like d^n); use float mode");
    }
    const Rational b = require_exact_b(params);
    std::vector<ExactRatio> out;
    out.reserve(n_max);
    if (n_max == 0) return out;
    out.push_back(initial_ratio_exact(params));
    while (out.size() < n_max) {
        const ExactRatio& last = out.back();
        out.push_back(ExactRatio{last.index + 1, g_map(last.value, b, params.d())});
    }
    return out;
}

std::vector<FloatRatio> iterate_ratio(const ModelParams& params, std::uint64_t n_max, Precision prec) {
    std::vector<FloatRatio> out;
    out.reserve(n_max);
    for_each_ratio(params, n_max, prec, [&](const FloatRatio& r) { out.push_back(r); });
    return out;
}

Rational magnetization_rooted(const Rational& r) {
    require_unit_interval(r);
    return canonical(Rational((1 - r) / (1 + r)));
}

Rational magnetization_rooted(const ExactRatio& r) { return magnetization_rooted(r.value); }

BigFloat magnetization_rooted(const FloatRatio& r) {
    require_gap(r.gap);
    return r.gap / (2L - r.gap);
}

BigFloat magnetization_regular(const FloatRatio& r, int d) {
    require_gap(r.gap);
    if (d < 2) throw DomainError("branching number d must be >= 2");
    // (1 - r^q)/(1 + r^q) = tanh(-(q/2) log r) with q = (d+1)/d.
    const BigFloat log_r = log1p(-r.gap);
    return tanh(-log_r * static_cast<long>(d + 1) / static_cast<long>(2 * d));
}

void magnetization_regular(const ExactRatio&, int) {
    throw ModeError("regular-tree magnetization involves d-th roots; use float mode");
}

XYPair xy_direct(const ModelParams& params, std::uint64_t n) {
    const int d = params.d();
    const std::uint64_t limit = max_exact_height(d);
    if (n + 1 > limit) {
        throw SizeError("xy_direct is limited to n <= " + std::to_string(limit - 1) + " for d = " + std::to_string(d));
    }
    const Rational t = require_exact_b(params);
    const auto ud = static_cast<unsigned long>(d);
    const long half_d = static_cast<long>(d) * (d + 1) / 2;
    const long half_dm = static_cast<long>(d) * (d - 1) / 2;

    // x_0 = (t^{(d+1)/2} + t^{-(d+1)/2})^d = t^{-d(d+1)/2} (t^{d+1} + 1)^d, likewise y_0.
    XYPair out;
    out.x = pow(Rational(pow(t, ud + 1) + 1), ud) * pow(t, -half_d);
    out.y = pow(Rational(pow(t, ud - 1) + 1), ud) * pow(t, -half_dm);
    for (std::uint64_t k = 1; k <= n; ++k) {
        // e^{beta} x + e^{-beta} y = t^{-1/2} (t x + y)
        Rational x_next = pow(canonical(t * out.x + out.y), ud);
        Rational y_next = pow(canonical(t * out.y + out.x), ud);
        out.x = std::move(x_next);
        out.y = std::move(y_next);
        out.half_power = static_cast<std::int64_t>(d) * (out.half_power - 1);
    }
    out.index = n;
    return out;
}

ExactSeries magnetization_series_exact(const ModelParams& params, std::uint64_t n_max) {
    ExactSeries series{params, NumberMode::Exact, Precision{0}, {}};
    for (const ExactRatio& r : iterate_ratio_exact(params, n_max)) {
        series.rows.push_back({r.index + 1, r.value, magnetization_rooted(r)});
    }
    return series;
}

FloatSeries magnetization_series(const ModelParams& params, const std::vector<std::uint64_t>& heights, Precision prec) {
    require_supported_precision(prec);
    FloatSeries series{params, NumberMode::Float, prec, {}};
    std::uint64_t previous = 0;
    for (std::uint64_t h : heights) {
        if (h <= previous) throw DomainError("heights must be strictly increasing and >= 1");
        previous = h;
    }
    if (heights.empty()) return series;
    series.rows.reserve(heights.size());
    auto next = heights.begin();
    for_each_ratio(params, heights.back(), prec, [&](const FloatRatio& r) {
        if (r.index + 1 == *next) {
            series.rows.push_back({*next, r.value(), magnetization_rooted(r)});
            ++next;
        }
    });
    return series;
}

FloatSeries magnetization_series(const ModelParams& params, std::uint64_t n_max, Precision prec) {
    std::vector<std::uint64_t> heights(n_max);
    for (std::uint64_t i = 0; i < n_max; ++i) heights[i] = i + 1;
    return magnetization_series(params, heights, prec);
}

}  // namespace bethe
