#include "bethe/bounds.hpp"

#include <string>
#include <utility>

#include "bethe/errors.hpp"

namespace bethe {

namespace {

void require_branching(int d) {
    if (d < 2) throw DomainError("branching number d must be >= 2, got " + std::to_string(d));
}

BigFloat sqrt_of(std::uint64_t n, Precision prec) { return sqrt(BigFloat(static_cast<long>(n), prec)); }

}  // namespace

BigFloat tie_tolerance(Precision prec) { return exp2i(-64, prec); }

std::uint64_t trivial_regime_cutoff(int d) {
    require_branching(d);
    const auto d2 = static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d);
    return (6 * d2 + (d2 - 1) - 1) / (d2 - 1);
}

BigFloat lower_envelope_constant(int d, Precision prec) {
    require_branching(d);
    const long dl = d;
    return sqrt(BigFloat(6L, prec)) * dl / sqrt(BigFloat(dl * dl - 1, prec));
}

BoundEnvelope make_envelope(int d, Precision prec) {
    require_branching(d);
    require_supported_precision(prec);
    const ExactRatio r0 = initial_ratio_exact(ModelParams::critical(d));
    return BoundEnvelope{d, canonical(Rational(1 - r0.value)), lower_envelope_constant(d, prec),
                         trivial_regime_cutoff(d)};
}

EnvelopeBounds sandwich_envelope(const BoundEnvelope& env, std::uint64_t n, Precision prec) {
    if (n == 0) throw DomainError("envelope heights start at n = 1");
    const BigFloat root_n = sqrt_of(n, prec);
    EnvelopeBounds out{BigFloat(prec), 1L - BigFloat(env.k_upper, prec) / root_n, false};
    if (n <= env.trivial_regime_cutoff) {
        out.lower_trivial = true;
    } else {
        out.lower = 1L - env.k_lower.with_precision(prec) / root_n;
        if (out.lower < 0L) out.lower = BigFloat(prec);
    }
    return out;
}

SandwichChecker::SandwichChecker(BoundEnvelope env, Precision prec)
    : env_(std::move(env)), prec_(prec), tolerance_(tie_tolerance(prec)) {
    require_supported_precision(prec);
    report_.d = env_.d;
}

void SandwichChecker::observe(const FloatRatio& ratio) {
    const std::uint64_t n = ratio.index + 1;
    const BigFloat root_n = sqrt_of(n, prec_);
    const BigFloat gap = ratio.gap.with_precision(prec_);

    // r <= 1 - k_upper/sqrt(n)  <=>  gap >= k_upper/sqrt(n); slack = upper - r.
    const BigFloat slack_upper = gap - BigFloat(env_.k_upper, prec_) / root_n;
    bool violated = slack_upper < -tolerance_;
    bool tie = abs(slack_upper) <= tolerance_;
    if (!report_.min_slack_upper || slack_upper < *report_.min_slack_upper) report_.min_slack_upper = slack_upper;

    if (n > env_.trivial_regime_cutoff) {
        // r >= 1 - k_lower/sqrt(n)  <=>  gap <= k_lower/sqrt(n); slack = r - lower.
        const BigFloat slack_lower = env_.k_lower.with_precision(prec_) / root_n - gap;
        violated = violated || slack_lower < -tolerance_;
        tie = tie || abs(slack_lower) <= tolerance_;
        if (!report_.min_slack_lower || slack_lower < *report_.min_slack_lower) report_.min_slack_lower = slack_lower;
    }

    ++report_.n_checked;
    if (violated) {
        const EnvelopeBounds bounds = sandwich_envelope(env_, n, prec_);
        report_.violations.push_back({n, ratio.value().with_precision(prec_), bounds.lower, bounds.upper});
    } else if (tie) {
        report_.near_ties.push_back(n);
    }
}

SandwichReport check_sandwich(const ModelParams& params, const std::vector<FloatRatio>& series,
                              const BoundEnvelope& env) {
    if (!params.is_critical()) throw DomainError("the envelope only holds at the critical coupling");
    if (params.d() != env.d) throw DomainError("series and envelope have different branching numbers");
    if (series.empty()) return SandwichReport{env.d, 0, {}, {}, {}, {}};
    SandwichChecker checker(env, series.front().precision());
    for (const FloatRatio& r : series) checker.observe(r);
    return checker.report();
}

SandwichReport check_sandwich(const ModelParams& params, std::uint64_t n_max, Precision prec,
                              const BoundEnvelope& env) {
    if (!params.is_critical()) throw DomainError("the envelope only holds at the critical coupling");
    if (params.d() != env.d) throw DomainError("series and envelope have different branching numbers");
    SandwichChecker checker(env, prec);
    for_each_ratio(params, n_max, prec, [&](const FloatRatio& r) { checker.observe(r); });
    return checker.report();
}

BigFloat ratio_threshold(int d, std::uint64_t n, const BigFloat& k) {
    require_branching(d);
    if (n == 0) throw DomainError("threshold needs n >= 1");
    const Precision prec = k.precision();
    if (!(k > 0L) || k * k > BigFloat(static_cast<long>(n), prec)) {
        throw DomainError("threshold needs 0 < k <= sqrt(n), got k = " + k.to_string(20));
    }
    const long dl = d;
    const BigFloat base = 1L - k / sqrt_of(n, prec);
    const BigFloat w = base.is_zero() ? BigFloat(prec) : root(base, static_cast<unsigned long>(d));
    const BigFloat numerator = -(dl + 1) * w + (dl - 1);
    const BigFloat denominator = (dl - 1) * w - (dl + 1);
    if (!(denominator < 0L)) throw VerificationError("threshold denominator is not negative");
    return numerator / denominator;
}

BigFloat threshold_polynomial(int d, std::uint64_t n, const BigFloat& k, const BigFloat& z) {
    require_branching(d);
    if (n == 0) throw DomainError("threshold needs n >= 1");
    const long dl = d;
    const auto ud = static_cast<unsigned long>(d);
    const BigFloat lead = pow((dl + 1) * z + (dl - 1), ud);
    const BigFloat tail = pow((dl - 1) * z + (dl + 1), ud);
    return lead - tail + k / sqrt_of(n, z.precision()) * tail;
}

BigFloat lower_step_residual(int d, const BigFloat& r) {
    require_branching(d);
    if (!(r >= 1L)) throw DomainError("residual is defined for r >= 1, got " + r.to_string(20));
    const long dl = d;
    const Precision prec = r.precision();
    const BigFloat base = 1L - 1L / r;
    const BigFloat w = base.is_zero() ? BigFloat(prec) : root(base, static_cast<unsigned long>(d));
    const BigFloat radicand = (dl * dl) * (6L * r * r - 1L) + 1L;
    return 2L * sqrt(radicand) * (w - 1L) + sqrt(BigFloat(6L, prec)) * ((1 - dl) * w + (dl + 1));
}

IntPolynomial lower_step_polynomial(int d) {
    if (d < 2 || d > 200) throw DomainError("polynomial construction is guarded to 2 <= d <= 200");
    const auto ud = static_cast<std::size_t>(d);
    const Integer dd(static_cast<long>(d));
    const IntPolynomial one_minus_z{1, -1};
    const IntPolynomial zd = IntPolynomial::monomial(Integer(1), ud);
    const IntPolynomial z2d = IntPolynomial::monomial(Integer(1), 2 * ud);
    const IntPolynomial zd_minus_one = zd - IntPolynomial{1};
    const IntPolynomial linear{static_cast<long>(d) + 1, 1 - static_cast<long>(d)};

    const IntPolynomial bracket = Integer(-dd * dd) * (z2d - Integer(2) * zd - IntPolynomial{5}) + pow(zd_minus_one, 2);
    const IntPolynomial first = Integer(4) * pow(one_minus_z, 2) * bracket;
    const IntPolynomial second = Integer(6) * pow(zd_minus_one, 2) * pow(linear, 2);
    return first - second;
}

FactorizationCheck factor_positivity_check(const IntPolynomial& p) {
    FactorizationCheck out;
    IntPolynomial q = p;
    for (std::size_t step = 0; step < 5; ++step) {
        LinearDivision division = divide_by_linear(q, Integer(1));
        if (division.remainder != 0) {
            out.failure = FactorizationFailure{FactorizationFailure::Kind::NonzeroRemainder, step,
                                               "remainder " + division.remainder.get_str() + " at division " +
                                                   std::to_string(step + 1) + " by (1 - z)"};
            return out;
        }
        q = std::move(division.quotient);
    }
    // (1 - z)^5 = -(z - 1)^5
    out.quotient = -q;
    const auto& coeffs = out.quotient.coefficients();
    if (coeffs.empty()) {
        out.failure = FactorizationFailure{FactorizationFailure::Kind::NonPositiveCoefficient, 0, "zero quotient"};
        return out;
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] <= 0) {
            out.failure = FactorizationFailure{FactorizationFailure::Kind::NonPositiveCoefficient, i,
                                               "quotient coefficient " + std::to_string(i) + " is " + coeffs[i].get_str()};
            return out;
        }
    }
    return out;
}

BigFloat upper_step_residual(int d, const BigFloat& k, const BigFloat& n) {
    require_branching(d);
    if (!(k > 0L) || !(k < 1L)) throw DomainError("residual needs 0 < k < 1");
    if (!(n >= 1L)) throw DomainError("residual needs n >= 1");
    const long dl = d;
    const BigFloat root_n = sqrt(n);
    const BigFloat u = root((root_n - k) / root_n, static_cast<unsigned long>(d));
    const BigFloat factor = dl * (k - 2L * sqrt(n - 1L)) - k;
    return factor * (u - 1L) - 2L * k;
}

BigFloat upper_step_residual_slope(int d, const BigFloat& n, const BigFloat& k) {
    require_branching(d);
    if (!(k >= 0L) || !(k < 1L)) throw DomainError("slope needs 0 <= k < 1");
    if (!(n > 1L)) throw DomainError("slope needs n > 1 (it is singular at n = 1)");
    const long dl = d;
    const BigFloat root_n = sqrt(n);
    const BigFloat root_nm1 = sqrt(n - 1L);
    const BigFloat base = (root_n - k) / root_n;
    const BigFloat u = root(base, static_cast<unsigned long>(d));
    const BigFloat factor = dl * (k - 2L * root_nm1) - k;
    // 1/(2n) - (sqrt(n) - k)/(2 n sqrt(n)), simplified
    const BigFloat inner = k / (2L * n * root_n);
    // base^{1/d - 1} = u / base
    const BigFloat first = inner * factor * (u / base) / dl;
    const BigFloat second = dl * (u - 1L) / root_nm1;
    return first - second;
}

BigFloat upper_step_slope_numerator(int d, const BigFloat& n, const BigFloat& k) {
    require_branching(d);
    if (!(k >= 0L) || !(k <= 1L)) throw DomainError("numerator needs 0 <= k <= 1");
    if (!(n >= 1L)) throw DomainError("numerator needs n >= 1");
    const long d2 = static_cast<long>(d) * d;
    const long dl = d;
    const BigFloat root_n = sqrt(n);
    const BigFloat root_nm1 = sqrt(n - 1L);
    const BigFloat k2 = k * k;
    const BigFloat cross = root_nm1 * root_n;
    return -d2 * k2 * root_nm1 - 2L * d2 * k * n + 2L * d2 * k * cross + 2L * d2 * root_n + 2L * dl * k * n -
           2L * dl * k * cross - 2L * dl * k + k2 * root_nm1;
}

}  // namespace bethe
