#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace bethe {

/// Mantissa precision of a multiple-precision float, in bits.
struct Precision {
    mpfr_prec_t bits;

    friend constexpr bool operator==(Precision, Precision) = default;
    friend constexpr auto operator<=>(Precision, Precision) = default;
};

inline constexpr Precision kDefaultPrecision{128};
inline constexpr Precision kMinPrecision{64};
inline constexpr Precision kMaxPrecision{4096};

/// Throws ConfigError unless kMinPrecision <= p <= kMaxPrecision.
void require_supported_precision(Precision p);

/// Value-semantic owner of an mpfr_t.
///
/// Every operation rounds to nearest, ties to even. Binary operators produce
/// a result at the larger of the two operand precisions; operations mixing a
/// BigFloat with an integer or rational keep the BigFloat's precision.
class BigFloat {
public:
    explicit BigFloat(Precision prec = kDefaultPrecision);
    BigFloat(long value, Precision prec);
    BigFloat(double value, Precision prec);
    BigFloat(const mpq_class& value, Precision prec);
    BigFloat(const mpz_class& value, Precision prec);

    /// Parses a decimal literal ("0.25", "1e-3"); throws ConfigError on junk.
    static BigFloat parse(std::string_view text, Precision prec);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    /// Same value rounded to a different precision.
    [[nodiscard]] BigFloat with_precision(Precision prec) const;

    [[nodiscard]] Precision precision() const { return Precision{mpfr_get_prec(value_)}; }
    [[nodiscard]] mpfr_ptr raw() { return value_; }
    [[nodiscard]] mpfr_srcptr raw() const { return value_; }

    [[nodiscard]] double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    [[nodiscard]] long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }

    /// Scientific notation with `digits` significant decimal digits.
    [[nodiscard]] std::string to_string(int digits) const;

    [[nodiscard]] bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    [[nodiscard]] bool is_finite() const { return mpfr_number_p(value_) != 0; }
    [[nodiscard]] int sign() const { return mpfr_sgn(value_); }

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);

    friend BigFloat operator-(const BigFloat& x);
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

    friend BigFloat operator+(const BigFloat& a, long b);
    friend BigFloat operator+(long a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, long b);
    friend BigFloat operator-(long a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, long b);
    friend BigFloat operator*(long a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, long b);
    friend BigFloat operator/(long a, const BigFloat& b);

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);
    friend bool operator==(const BigFloat& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
    friend std::partial_ordering operator<=>(const BigFloat& a, long b);

    // A double would otherwise convert silently to long.
    friend bool operator==(const BigFloat&, double) = delete;
    friend std::partial_ordering operator<=>(const BigFloat&, double) = delete;
    friend BigFloat operator+(const BigFloat&, double) = delete;
    friend BigFloat operator-(const BigFloat&, double) = delete;
    friend BigFloat operator*(const BigFloat&, double) = delete;
    friend BigFloat operator/(const BigFloat&, double) = delete;
    friend BigFloat operator+(double, const BigFloat&) = delete;
    friend BigFloat operator-(double, const BigFloat&) = delete;
    friend BigFloat operator*(double, const BigFloat&) = delete;
    friend BigFloat operator/(double, const BigFloat&) = delete;

private:
    mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
/// Real k-th root; for negative x and odd k returns the negative root.
BigFloat root(const BigFloat& x, unsigned long k);
BigFloat pow(const BigFloat& x, unsigned long k);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log1p(const BigFloat& x);
BigFloat expm1(const BigFloat& x);
BigFloat tanh(const BigFloat& x);
BigFloat atanh(const BigFloat& x);

/// |a - b| / |b|; returns |a| when b is zero.
BigFloat relative_error(const BigFloat& a, const BigFloat& b);

/// 2^exponent at the given precision.
BigFloat exp2i(long exponent, Precision prec);

}  // namespace bethe
