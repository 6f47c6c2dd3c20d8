#include "bethe/big_float.hpp"

#include <algorithm>
#include <string>

#include "bethe/errors.hpp"

namespace bethe {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision().bits, b.precision().bits);
}

template <class Fn>
BigFloat unary(const BigFloat& x, Fn fn) {
    BigFloat out(x.precision());
    fn(out.raw(), x.raw(), kRound);
    return out;
}

std::partial_ordering from_cmp(int c) {
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

}  // namespace

void require_supported_precision(Precision p) {
    if (p < kMinPrecision || p > kMaxPrecision) {
        throw ConfigError("precision_bits must be in [64, 4096], got " + std::to_string(p.bits));
    }
}

BigFloat::BigFloat(Precision prec) {
    mpfr_init2(value_, prec.bits);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, Precision prec) {
    mpfr_init2(value_, prec.bits);
    mpfr_set_si(value_, value, kRound);
}

BigFloat::BigFloat(double value, Precision prec) {
    mpfr_init2(value_, prec.bits);
    mpfr_set_d(value_, value, kRound);
}

BigFloat::BigFloat(const mpq_class& value, Precision prec) {
    mpfr_init2(value_, prec.bits);
    mpfr_set_q(value_, value.get_mpq_t(), kRound);
}

BigFloat::BigFloat(const mpz_class& value, Precision prec) {
    mpfr_init2(value_, prec.bits);
    mpfr_set_z(value_, value.get_mpz_t(), kRound);
}

BigFloat BigFloat::parse(std::string_view text, Precision prec) {
    BigFloat out(prec);
    const std::string buffer(text);
    char* end = nullptr;
    if (!buffer.empty()) {
        mpfr_strtofr(out.value_, buffer.c_str(), &end, 10, kRound);
    }
    if (buffer.empty() || end != buffer.c_str() + buffer.size() || !out.is_finite()) {
        throw ConfigError("not a decimal number: '" + buffer + "'");
    }
    return out;
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRound);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, kRound);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::with_precision(Precision prec) const {
    BigFloat out(prec);
    mpfr_set(out.value_, value_, kRound);
    return out;
}

std::string BigFloat::to_string(int digits) const {
    char* buffer = nullptr;
    mpfr_asprintf(&buffer, "%.*Re", std::max(digits - 1, 0), value_);
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) { return *this = *this + rhs; }
BigFloat& BigFloat::operator-=(const BigFloat& rhs) { return *this = *this - rhs; }
BigFloat& BigFloat::operator*=(const BigFloat& rhs) { return *this = *this * rhs; }
BigFloat& BigFloat::operator/=(const BigFloat& rhs) { return *this = *this / rhs; }

BigFloat operator-(const BigFloat& x) { return unary(x, mpfr_neg); }

#define BETHE_BINARY_OP(op, fn)                                   \
    BigFloat operator op(const BigFloat& a, const BigFloat& b) {  \
        BigFloat out(Precision{wider(a, b)});                     \
        fn(out.value_, a.value_, b.value_, kRound);               \
        return out;                                               \
    }
BETHE_BINARY_OP(+, mpfr_add)
BETHE_BINARY_OP(-, mpfr_sub)
BETHE_BINARY_OP(*, mpfr_mul)
BETHE_BINARY_OP(/, mpfr_div)
#undef BETHE_BINARY_OP

BigFloat operator+(const BigFloat& a, long b) {
    BigFloat out(a.precision());
    mpfr_add_si(out.value_, a.value_, b, kRound);
    return out;
}
BigFloat operator+(long a, const BigFloat& b) { return b + a; }
BigFloat operator-(const BigFloat& a, long b) {
    BigFloat out(a.precision());
    mpfr_sub_si(out.value_, a.value_, b, kRound);
    return out;
}
BigFloat operator-(long a, const BigFloat& b) {
    BigFloat out(b.precision());
    mpfr_si_sub(out.value_, a, b.value_, kRound);
    return out;
}
BigFloat operator*(const BigFloat& a, long b) {
    BigFloat out(a.precision());
    mpfr_mul_si(out.value_, a.value_, b, kRound);
    return out;
}
BigFloat operator*(long a, const BigFloat& b) { return b * a; }
BigFloat operator/(const BigFloat& a, long b) {
    BigFloat out(a.precision());
    mpfr_div_si(out.value_, a.value_, b, kRound);
    return out;
}
BigFloat operator/(long a, const BigFloat& b) {
    BigFloat out(b.precision());
    mpfr_si_div(out.value_, a, b.value_, kRound);
    return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
    return from_cmp(mpfr_cmp(a.value_, b.value_));
}

std::partial_ordering operator<=>(const BigFloat& a, long b) {
    if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
    return from_cmp(mpfr_cmp_si(a.value_, b));
}

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat log1p(const BigFloat& x) { return unary(x, mpfr_log1p); }
BigFloat expm1(const BigFloat& x) { return unary(x, mpfr_expm1); }
BigFloat tanh(const BigFloat& x) { return unary(x, mpfr_tanh); }
BigFloat atanh(const BigFloat& x) { return unary(x, mpfr_atanh); }

BigFloat root(const BigFloat& x, unsigned long k) {
    BigFloat out(x.precision());
    mpfr_rootn_ui(out.raw(), x.raw(), k, kRound);
    return out;
}

BigFloat pow(const BigFloat& x, unsigned long k) {
    BigFloat out(x.precision());
    mpfr_pow_ui(out.raw(), x.raw(), k, kRound);
    return out;
}

BigFloat pow(const BigFloat& x, const BigFloat& y) {
    BigFloat out(Precision{std::max(x.precision().bits, y.precision().bits)});
    mpfr_pow(out.raw(), x.raw(), y.raw(), kRound);
    return out;
}

BigFloat relative_error(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) return abs(a);
    return abs(a - b) / abs(b);
}

BigFloat exp2i(long exponent, Precision prec) {
    BigFloat out(prec);
    mpfr_set_ui_2exp(out.raw(), 1, exponent, kRound);
    return out;
}

}  // namespace bethe
