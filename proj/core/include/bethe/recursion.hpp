#pragma once

// Ratio recursion for the plus-boundary root magnetization.
//
// With x_n, y_n the root partition sums conditioned on sigma_0 = +1 / -1 one
// level above the height-n volume, r_n = y_n / x_n satisfies
//
//   r_0 = ((t^d + t) / (t^{d+1} + 1))^d,   r_{n+1} = g(r_n) = ((b r + 1) / (b + r))^d,
//
// with b = t = e^{2 beta}, and <sigma_0>^+_{n+1} = (1 - r_n) / (1 + r_n).
// x_n and y_n themselves grow like d^n digits; only xy_direct() builds them.

#include <cstdint>
#include <vector>

#include "bethe/big_float.hpp"
#include "bethe/model.hpp"
#include "bethe/rational.hpp"

namespace bethe {

enum class NumberMode { Exact, Float };

/// r_n in exact arithmetic, kept in lowest terms.
struct ExactRatio {
    std::uint64_t index = 0;
    Rational value;
};

/// r_n in floating point, stored as the gap 1 - r_n.
struct FloatRatio {
    std::uint64_t index = 0;
    BigFloat gap;  ///< 1 - r_n, in (0, 1)

    [[nodiscard]] BigFloat value() const { return 1L - gap; }
    [[nodiscard]] Precision precision() const { return gap.precision(); }
};

/// Largest height for which exact-mode iteration and xy_direct() run:
/// 16 for d = 2, 10 for d = 3, 6 for d >= 4.
std::uint64_t max_exact_height(int d);

/// r_0. Throws ModeError when the coupling is not rational.
ExactRatio initial_ratio_exact(const ModelParams& params);
FloatRatio initial_ratio(const ModelParams& params, Precision prec = kDefaultPrecision);

/// g(r) = ((b r + 1)/(b + r))^d for 0 < r <= 1.
Rational g_map(const Rational& r, const Rational& b, int d);
BigFloat g_map(const BigFloat& r, const BigFloat& b, int d);

/// g written as in the original recursion, (r + (1 - r^2)/(b + r))^d.
Rational g_map_expanded(const Rational& r, const Rational& b, int d);
BigFloat g_map_expanded(const BigFloat& r, const BigFloat& b, int d);

/// One application of g; the result has index + 1. Throws DomainError for
/// r outside (0, 1].
ExactRatio g_step(const ExactRatio& r, const ModelParams& params);
FloatRatio g_step(const FloatRatio& r, const ModelParams& params);

/// Streams r_0, r_1, ... in floating point.
///
/// At criticality the sequence must increase strictly; the iterator checks
/// this on every step and throws PrecisionError if rounding breaks it. It
/// also throws PrecisionError if the gap 1 - r_n stops being positive.
class FloatRatioIterator {
public:
    FloatRatioIterator(const ModelParams& params, Precision prec);

    [[nodiscard]] const FloatRatio& current() const { return state_; }
    void advance();

    /// Restarts from an arbitrary ratio (used to build synthetic series).
    void reset(const FloatRatio& state);

private:
    int d_;
    bool check_increase_;
    bool increasing_ = false;
    BigFloat b_plus_one_;
    BigFloat b_minus_one_;
    BigFloat b_;
    FloatRatio state_;
    BigFloat den_;
    BigFloat u_;
    BigFloat v_;
    BigFloat acc_;
    BigFloat next_;
};

/// r_0 .. r_{n_max - 1} exactly. Throws SizeError when n_max exceeds
/// max_exact_height(d) and ModeError for a non-rational coupling.
std::vector<ExactRatio> iterate_ratio_exact(const ModelParams& params, std::uint64_t n_max);

/// r_0 .. r_{n_max - 1} in floating point; see FloatRatioIterator.
std::vector<FloatRatio> iterate_ratio(const ModelParams& params, std::uint64_t n_max,
                                      Precision prec = kDefaultPrecision);

/// Calls visit(state) for r_0 .. r_{n_max - 1} without storing the sequence.
template <class Visitor>
void for_each_ratio(const ModelParams& params, std::uint64_t n_max, Precision prec, Visitor&& visit) {
    if (n_max == 0) {
        require_supported_precision(prec);
        return;
    }
    FloatRatioIterator it(params, prec);
    for (std::uint64_t k = 0;; ++k) {
        visit(it.current());
        if (k + 1 == n_max) break;
        it.advance();
    }
}

/// <sigma_0>^+_{n+1} = (1 - r_n)/(1 + r_n) on the rooted tree.
Rational magnetization_rooted(const ExactRatio& r);
BigFloat magnetization_rooted(const FloatRatio& r);
Rational magnetization_rooted(const Rational& r);

/// Root magnetization on the (d+1)-regular tree built from the same r_n:
/// (1 - r^{(d+1)/d}) / (1 + r^{(d+1)/d}). Float only.
BigFloat magnetization_regular(const FloatRatio& r, int d);
/// Always throws ModeError: the d-th root is irrational in general.
[[noreturn]] void magnetization_regular(const ExactRatio& r, int d);

/// x_n, y_n built directly from their definitions at a rational coupling.
///
/// The true values are x * t^{half_power/2} and y * t^{half_power/2}; only the
/// ratio and the magnetization are meaningful, the common scale is a
/// bookkeeping convention that keeps everything rational.
struct XYPair {
    std::uint64_t index = 0;
    Rational x;
    Rational y;
    std::int64_t half_power = 0;
};

XYPair xy_direct(const ModelParams& params, std::uint64_t n);

template <class Num>
struct MagnetizationRow {
    std::uint64_t n = 0;  ///< height, >= 1
    Num ratio;            ///< r_{n-1}
    Num magnetization;    ///< <sigma_0>^+_n
};

template <class Num>
struct MagnetizationSeries {
    ModelParams params;
    NumberMode mode = NumberMode::Float;
    Precision precision{0};  ///< zero in exact mode
    std::vector<MagnetizationRow<Num>> rows;
};

using ExactSeries = MagnetizationSeries<Rational>;
using FloatSeries = MagnetizationSeries<BigFloat>;

/// Heights 1..n_max exactly.
ExactSeries magnetization_series_exact(const ModelParams& params, std::uint64_t n_max);

/// Rows at the given heights (strictly increasing, each >= 1).
FloatSeries magnetization_series(const ModelParams& params, const std::vector<std::uint64_t>& heights,
                                 Precision prec = kDefaultPrecision);

/// Rows at every height 1..n_max.
FloatSeries magnetization_series(const ModelParams& params, std::uint64_t n_max,
                                 Precision prec = kDefaultPrecision);

}  // namespace bethe
