#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "bethe/bounds.hpp"
#include "bethe/detail/parallel.hpp"
#include "bethe/errors.hpp"

namespace bethe {

namespace {

/// Collects slack observations and classifies each against the tie tolerance.
class SlackLog {
public:
    SlackLog(std::string name, Precision prec) : tolerance_(tie_tolerance(prec)) { report_.name = std::move(name); }

    /// slack >= 0 means the inequality holds.
    void record(const BigFloat& slack, const std::string& where) {
        ++report_.checked;
        const double s = slack.to_double();
        if (!report_.min_slack || s < *report_.min_slack) report_.min_slack = s;
        if (slack < -tolerance_ || !slack.is_finite()) {
            report_.violations.push_back(where + " slack=" + slack.to_string(6));
        } else if (abs(slack) <= tolerance_) {
            ++report_.near_ties;
        }
    }

    /// Strict inequality: slack must exceed the tolerance.
    void record_strict(const BigFloat& slack, const std::string& where) {
        ++report_.checked;
        const double s = slack.to_double();
        if (!report_.min_slack || s < *report_.min_slack) report_.min_slack = s;
        if (!(slack > tolerance_)) {
            if (abs(slack) <= tolerance_) ++report_.near_ties;
            report_.violations.push_back(where + " slack=" + slack.to_string(6));
        }
    }

    void fail(const std::string& message) {
        ++report_.checked;
        report_.violations.push_back(message);
    }

    void pass() { ++report_.checked; }
    void note(std::string text) { report_.notes.push_back(std::move(text)); }
    [[nodiscard]] GridReport& report() { return report_; }

    /// Appends another log's findings.
    void merge(const GridReport& part) {
        report_.checked += part.checked;
        report_.near_ties += part.near_ties;
        report_.violations.insert(report_.violations.end(), part.violations.begin(), part.violations.end());
        report_.notes.insert(report_.notes.end(), part.notes.begin(), part.notes.end());
        if (part.min_slack && (!report_.min_slack || *part.min_slack < *report_.min_slack)) {
            report_.min_slack = part.min_slack;
        }
    }

private:
    BigFloat tolerance_;
    GridReport report_;
};

std::string at(int d, std::uint64_t n) { return "d=" + std::to_string(d) + " n=" + std::to_string(n); }

std::string at(int d, std::uint64_t n, const BigFloat& k) { return at(d, n) + " k=" + k.to_string(10); }

std::string at_real(int d, const BigFloat& n, const BigFloat& k) {
    return "d=" + std::to_string(d) + " n=" + n.to_string(10) + " k=" + k.to_string(10);
}

struct ThresholdSample {
    int d;
    std::uint64_t n;
    BigFloat k;
    BigFloat threshold;
};

/// Draws (d, n, k) with k^2 <= n by rejection until the threshold is positive.
template <class Rng>
ThresholdSample draw_threshold_sample(Rng& rng, int d_max, std::uint64_t n_max, Precision prec) {
    std::uniform_int_distribution<int> d_dist(2, d_max);
    std::uniform_int_distribution<std::uint64_t> n_dist(1, n_max);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (;;) {
        const int d = d_dist(rng);
        const std::uint64_t n = n_dist(rng);
        const double fraction = unit(rng);
        if (fraction <= 0.0) continue;
        const BigFloat k = BigFloat(fraction, prec) * sqrt(BigFloat(static_cast<long>(n), prec));
        if (!(k > 0L)) continue;
        BigFloat threshold = ratio_threshold(d, n, k);
        if (threshold > 0L) return ThresholdSample{d, n, k, std::move(threshold)};
    }
}

std::vector<int> d_range(int d_min, int d_max) {
    std::vector<int> out;
    for (int d = d_min; d <= d_max; ++d) out.push_back(d);
    return out;
}

}  // namespace

GridReport verify_threshold_equivalence(const ThresholdEquivalenceGrid& grid, Precision prec) {
    require_supported_precision(prec);
    SlackLog log("threshold-equivalence", prec);
    std::mt19937_64 rng(grid.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> offset_exp(-8.0, -2.0);
    const BigFloat tolerance = tie_tolerance(prec);
    for (std::uint64_t i = 0; i < grid.samples; ++i) {
        const ThresholdSample s = draw_threshold_sample(rng, grid.d_max, grid.n_max, prec);
        // Alternate uniform z with z placed just either side of the threshold.
        BigFloat z(prec);
        if (i % 2 == 0) {
            z = BigFloat(unit(rng), prec);
        } else {
            const double rel = std::pow(10.0, offset_exp(rng)) * (unit(rng) < 0.5 ? -1.0 : 1.0);
            z = s.threshold * BigFloat(1.0 + rel, prec);
        }
        if (!(z > 0L) || !(z < 1L)) continue;
        if (abs(z - s.threshold) <= tolerance) {
            log.note("skipped tie z ~ threshold at " + at(s.d, s.n, s.k));
            continue;
        }
        const BigFloat b(critical_b(s.d), prec);
        const BigFloat bound = 1L - s.k / sqrt(BigFloat(static_cast<long>(s.n), prec));
        const BigFloat image = g_map(z, b, s.d);
        const bool below_threshold = z <= s.threshold;
        // The inequality g(z) <= bound must hold exactly when z <= threshold;
        // signed slack is positive when the implication is honored.
        const BigFloat slack = below_threshold ? bound - image : image - bound;
        log.record(slack, at(s.d, s.n, s.k) + " z=" + z.to_string(10));
    }
    return std::move(log.report());
}

GridReport verify_lower_propagation(const LowerPropagationGrid& grid, Precision prec) {
    require_supported_precision(prec);
    const std::vector<int> ds = d_range(grid.d_min, grid.d_max);
    auto parts = detail::ordered_parallel_map(ds.size(), [&](std::size_t i) {
        const int d = ds[i];
        SlackLog part("", prec);
        const BigFloat k = lower_envelope_constant(d, prec);
        const std::uint64_t cutoff = trivial_regime_cutoff(d);
        for (std::uint64_t n = cutoff; n <= grid.n_max; ++n) {
            const BigFloat threshold = ratio_threshold(d, n, k);
            const BigFloat bound = 1L - k / sqrt(BigFloat(static_cast<long>(n - 1), prec));
            const BigFloat slack = bound - threshold;
            if (n == cutoff) {
                std::ostringstream note;
                note << "boundary " << at(d, n) << (slack >= 0L ? " holds" : " fails")
                     << " slack=" << slack.to_string(6);
                part.note(note.str());
                continue;
            }
            part.record(slack, at(d, n));
        }
        return part.report();
    });
    SlackLog log("lower-envelope-propagation", prec);
    for (const GridReport& p : parts) log.merge(p);
    return std::move(log.report());
}

GridReport verify_upper_propagation(const UpperPropagationGrid& grid, Precision prec) {
    require_supported_precision(prec);
    const std::vector<int> ds = d_range(grid.d_min, grid.d_max);
    auto parts = detail::ordered_parallel_map(ds.size(), [&](std::size_t i) {
        const int d = ds[i];
        SlackLog part("", prec);
        std::vector<BigFloat> ks;
        ks.emplace_back(Rational(1 - initial_ratio_exact(ModelParams::critical(d)).value), prec);
        for (double k : grid.k_values) ks.emplace_back(k, prec);
        for (const BigFloat& k : ks) {
            if (k > 1L) {
                part.fail("k > 1 is outside the sampled statement: " + k.to_string(10));
                continue;
            }
            for (std::uint64_t n = 2; n <= grid.n_max; ++n) {
                const BigFloat threshold = ratio_threshold(d, n, k);
                const BigFloat bound = 1L - k / sqrt(BigFloat(static_cast<long>(n - 1), prec));
                part.record(threshold - bound, at(d, n, k));
            }
        }
        return part.report();
    });
    SlackLog log("upper-envelope-propagation", prec);
    for (const GridReport& p : parts) log.merge(p);
    return std::move(log.report());
}

GridReport verify_residual_monotonicity(const ResidualMonotonicityGrid& grid, Precision prec) {
    require_supported_precision(prec);
    SlackLog log("upper-residual-monotonicity", prec);
    for (int d : grid.d_values) {
        for (double kv : grid.k_values) {
            const BigFloat k(kv, prec);
            BigFloat previous(prec);
            for (int j = 0; j <= grid.log2_n_max; ++j) {
                const BigFloat n = exp2i(j, prec);
                const BigFloat q = upper_step_residual(d, k, n);
                log.record(-q, "non-positive " + at_real(d, n, k));
                if (j > 0) log.record_strict(q - previous, "increasing " + at_real(d, n, k));
                previous = q;
            }
            const BigFloat far(grid.limit_n, prec);
            const BigFloat q_far = upper_step_residual(d, k, far);
            log.record(BigFloat(grid.limit_tolerance, prec) - abs(q_far), "limit " + at_real(d, far, k));
        }
    }
    return std::move(log.report());
}

GridReport verify_slope_signs(const SlopeGrid& grid, Precision prec) {
    require_supported_precision(prec);
    SlackLog log("upper-residual-slope-signs", prec);
    const BigFloat zero(prec);
    const BigFloat one(1L, prec);
    const BigFloat tolerance = tie_tolerance(prec);
    for (int d = grid.d_min; d <= grid.d_max; ++d) {
        for (double nv : grid.zero_n_values) {
            const BigFloat n(nv, prec);
            const BigFloat slope = upper_step_residual_slope(d, n, zero);
            if (abs(slope) <= tolerance) {
                log.pass();
            } else {
                log.fail("slope at k=0 is " + slope.to_string(6) + " at " + at_real(d, n, zero));
            }
        }
        for (std::uint64_t nn = 1; nn <= grid.s_n_max; ++nn) {
            const BigFloat n(static_cast<long>(nn), prec);
            const BigFloat at_one = upper_step_slope_numerator(d, n, one);
            log.record(at_one, "numerator(1) >= 0 " + at(d, nn));
            for (int i = 1; i < grid.s_k_steps; ++i) {
                const BigFloat k = BigFloat(static_cast<long>(i), prec) / static_cast<long>(grid.s_k_steps);
                log.record_strict(upper_step_slope_numerator(d, n, k) - at_one, "numerator(k) > numerator(1) " + at(d, nn, k));
            }
        }
    }
    return std::move(log.report());
}

GridReport verify_sign_structure(const SignStructureGrid& grid, Precision prec) {
    require_supported_precision(prec);
    SlackLog log("threshold-polynomial-sign-structure", prec);
    std::mt19937_64 rng(grid.seed);
    const BigFloat zero(prec);
    const BigFloat one(1L, prec);
    const BigFloat root_tolerance = exp2i(-(prec.bits / 2), prec);
    for (std::uint64_t i = 0; i < grid.samples; ++i) {
        const ThresholdSample s = draw_threshold_sample(rng, grid.d_max, grid.n_max, prec);
        const std::string where = at(s.d, s.n, s.k);

        log.record_strict(-threshold_polynomial(s.d, s.n, s.k, zero), "f(0) < 0 " + where);

        const BigFloat f_one = threshold_polynomial(s.d, s.n, s.k, one);
        const BigFloat expected = s.k / sqrt(BigFloat(static_cast<long>(s.n), prec)) *
                                  pow(BigFloat(2L * s.d, prec), static_cast<unsigned long>(s.d));
        if (relative_error(f_one, expected) > exp2i(-(prec.bits - 16), prec)) {
            log.fail("f(1) != (k/sqrt(n)) 2^d d^d at " + where);
        } else {
            log.record_strict(f_one, "f(1) > 0 " + where);
        }

        int changes = 0;
        BigFloat bracket_lo(prec);
        BigFloat bracket_hi(prec);
        BigFloat previous_z = zero;
        BigFloat previous_f = threshold_polynomial(s.d, s.n, s.k, zero);
        for (int j = 1; j <= grid.z_points; ++j) {
            const BigFloat z = BigFloat(static_cast<long>(j), prec) / static_cast<long>(grid.z_points);
            const BigFloat fz = threshold_polynomial(s.d, s.n, s.k, z);
            if (fz.sign() != previous_f.sign() && fz.sign() != 0) {
                ++changes;
                bracket_lo = previous_z;
                bracket_hi = z;
            }
            previous_z = z;
            previous_f = fz;
        }
        if (changes != 1) {
            log.fail(std::to_string(changes) + " sign changes on (0, 1) at " + where);
            continue;
        }
        // Bisection with f(lo) < 0 <= f(hi).
        while (bracket_hi - bracket_lo > root_tolerance) {
            const BigFloat mid = (bracket_lo + bracket_hi) / 2L;
            if (threshold_polynomial(s.d, s.n, s.k, mid) < 0L) {
                bracket_lo = mid;
            } else {
                bracket_hi = mid;
            }
        }
        const BigFloat located = (bracket_lo + bracket_hi) / 2L;
        if (abs(located - s.threshold) <= root_tolerance) {
            log.pass();
        } else {
            log.fail("root " + located.to_string(20) + " != threshold " + s.threshold.to_string(20) + " at " + where);
        }
    }
    return std::move(log.report());
}

GridReport verify_polynomial_factorizations(int d_min, int d_max) {
    SlackLog log("polynomial-factorization", kDefaultPrecision);
    const std::vector<int> ds = d_range(d_min, d_max);
    auto checks = detail::ordered_parallel_map(ds.size(), [&](std::size_t i) {
        return factor_positivity_check(lower_step_polynomial(ds[i]));
    });
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const FactorizationCheck& check = checks[i];
        if (check.passed()) {
            log.pass();
            if (ds[i] <= 3) log.note("d=" + std::to_string(ds[i]) + " quotient " + check.quotient.to_string());
        } else {
            log.fail("d=" + std::to_string(ds[i]) + ": " + check.failure->message);
        }
    }
    return std::move(log.report());
}

GridReport verify_envelope_base_case(int d_min, int d_max) {
    SlackLog log("envelope-base-case", kDefaultPrecision);
    for (int d = d_min; d <= d_max; ++d) {
        const Rational r0 = initial_ratio_exact(ModelParams::critical(d)).value;
        const BoundEnvelope env = make_envelope(d);
        const Rational upper_at_one = 1 - env.k_upper;
        if (upper_at_one == r0) {
            log.pass();
        } else {
            log.fail("d=" + std::to_string(d) + ": upper envelope at n=1 is " + to_string(upper_at_one) +
                     ", r_0 is " + to_string(r0));
        }
    }
    return std::move(log.report());
}

std::vector<GridReport> verify_proof_inequalities(const ProofGrids& grids, Precision prec) {
    std::vector<GridReport> out;
    out.push_back(verify_threshold_equivalence(grids.equivalence, prec));
    out.push_back(verify_lower_propagation(grids.lower, prec));
    out.push_back(verify_upper_propagation(grids.upper, prec));
    out.push_back(verify_residual_monotonicity(grids.residual, prec));
    out.push_back(verify_slope_signs(grids.slope, prec));
    out.push_back(verify_sign_structure(grids.sign, prec));
    return out;
}

}  // namespace bethe
