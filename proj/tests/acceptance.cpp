// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bethe/analysis.hpp"
#include "bethe/bounds.hpp"
#include "bethe/oracle.hpp"
#include "bethe/recursion.hpp"

namespace {

using namespace bethe;

struct Outcome {
    bool passed = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

const Precision kP = kDefaultPrecision;

Outcome oracle_equivalence() {
    std::ostringstream detail;
    bool ok = true;
    const std::vector<std::pair<int, int>> cases{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
    for (const auto& [d, n] : cases) {
        const ModelParams p = ModelParams::critical(d);
        const Rational brute = root_magnetization_exact(p, n);
        const Rational recursed = magnetization_rooted(iterate_ratio_exact(p, static_cast<std::uint64_t>(n)).back());
        const bool same = brute == recursed;
        ok = ok && same;
        detail << "(" << d << "," << n << ")=" << to_string(brute) << (same ? "" : " MISMATCH " + to_string(recursed))
               << " ";
    }
    const ModelParams two = ModelParams::critical(2);
    ok = ok && root_magnetization_exact(two, 1) == Rational(20, 29);
    ok = ok && root_magnetization_exact(two, 2) == Rational(580, 941);
    return {ok, detail.str()};
}

Outcome sandwich() {
    bool ok = true;
    std::optional<BigFloat> min_upper;
    std::optional<BigFloat> min_lower;
    std::size_t violations = 0;
    std::size_t ties = 0;
    for (int d = 2; d <= 10; ++d) {
        const SandwichReport r = check_sandwich(ModelParams::critical(d), 100'000, kP, make_envelope(d, kP));
        ok = ok && r.passed() && r.n_checked == 100'000;
        violations += r.violations.size();
        ties += r.near_ties.size();
        if (!min_upper || *r.min_slack_upper < *min_upper) min_upper = r.min_slack_upper;
        if (!min_lower || *r.min_slack_lower < *min_lower) min_lower = r.min_slack_lower;
    }
    std::ostringstream detail;
    detail << "d=2..10 n<=1e5 violations=" << violations << " near_ties=" << ties
           << " min_slack_upper=" << min_upper->to_string(6) << " min_slack_lower=" << min_lower->to_string(6);
    return {ok, detail.str()};
}

/// One critical run to 1e6, reused by several criteria.
struct LongRun {
    FloatSeries fit_rows;
    EnclosureReport enclosure;
    BigFloat final_magnetization;
};

LongRun long_run(int d, Precision prec) {
    const auto heights = geometric_heights(1000, 1'000'000, kDefaultSamplingRatio);
    const std::set<std::uint64_t> wanted(heights.begin(), heights.end());
    LongRun out{FloatSeries{ModelParams::critical(d), NumberMode::Float, prec, {}},
                EnclosureReport{d, 0, 0, {}, BigFloat(prec), BigFloat(prec)}, BigFloat(prec)};
    out.enclosure = check_magnetization_enclosure(d, 1'000'000, prec, [&](std::uint64_t n, const BigFloat& m) {
        if (wanted.count(n) != 0) out.fit_rows.rows.push_back({n, 1L - m, m});
        if (n == 1'000'000) out.final_magnetization = m;
    });
    return out;
}

std::optional<LongRun> binary_run;

const LongRun& binary_long_run() {
    if (!binary_run) binary_run = long_run(2, kP);
    return *binary_run;
}

Outcome exponent_fit() {
    std::ostringstream detail;
    bool ok = true;
    for (int d : {2, 3}) {
        const FitResult fit =
            d == 2 ? fit_exponent(binary_long_run().fit_rows, kDefaultFitWindow)
                   : fit_exponent(long_run(3, kP).fit_rows, kDefaultFitWindow);
        const double deviation = std::abs(fit.rho_hat - 0.5);
        ok = ok && deviation <= 0.05;
        char buf[160];
        std::snprintf(buf, sizeof buf, "d=%d rho_hat=%.6f se=%.2e points=%zu ", d, fit.rho_hat, fit.standard_error,
                      fit.points);
        detail << buf;
    }
    return {ok, detail.str()};
}

Outcome enclosure() {
    const EnclosureReport& r = binary_long_run().enclosure;
    std::ostringstream detail;
    detail << "d=2 n in (8,1e6] checked=" << r.n_checked << " violations=" << r.violations.size()
           << " sqrt(n) m_n in [" << r.min_scaled.to_string(8) << ", " << r.max_scaled.to_string(8)
           << "] vs (20/49, 2 sqrt 2)";
    return {r.passed() && r.first_height == 9 && r.n_checked == 1'000'000 - 8, detail.str()};
}

Outcome factorization() {
    const GridReport r = verify_polynomial_factorizations(2, 200);
    const bool two = factor_positivity_check(lower_step_polynomial(2)).quotient == IntPolynomial{30, 18};
    const bool three = factor_positivity_check(lower_step_polynomial(3)).quotient == IntPolynomial{88, 168, 120, 56};
    std::ostringstream detail;
    detail << "d=2..200 checked=" << r.checked << " failures=" << r.violations.size()
           << " q2=" << factor_positivity_check(lower_step_polynomial(2)).quotient.to_string()
           << " q3=" << factor_positivity_check(lower_step_polynomial(3)).quotient.to_string();
    return {r.passed() && r.checked == 199 && two && three, detail.str()};
}

Outcome proof_grids() {
    std::ostringstream detail;
    bool ok = true;
    for (const GridReport& r : verify_proof_inequalities(ProofGrids{}, kP)) {
        ok = ok && r.passed() && r.checked > 0;
        detail << r.name << ":" << r.checked << "/" << r.violations.size() << " ";
        if (!r.violations.empty()) detail << "[" << r.violations.front() << "] ";
    }
    return {ok, detail.str()};
}

Outcome critical_temperature() {
    std::ostringstream detail;
    bool ok = true;
    for (int d : {2, 3, 5}) {
        const BetacEstimate e = estimate_betac(d, 1e-6);
        ok = ok && e.deviation <= BigFloat(1e-4, kP);
        detail << "d=" << d << " beta_hat=" << e.beta_hat.to_string(8) << " dev=" << e.deviation.to_string(3) << " ";
    }
    for (int d = 2; d <= 50; ++d) {
        const auto slope = fixed_point_slope(ModelParams::critical(d));
        ok = ok && std::holds_alternative<Rational>(slope) && std::get<Rational>(slope) == 1;
    }
    detail << "slope(b_c)=1/1 for d=2..50";
    return {ok, detail.str()};
}

Outcome precision_validation() {
    const ModelParams p = ModelParams::critical(2);
    const Rational exact = iterate_ratio_exact(p, 13).back().value;
    const BigFloat fl = iterate_ratio(p, 13, kP).back().value();
    const BigFloat rel12 = relative_error(fl, BigFloat(exact, kP));
    const bool small_ok = rel12 <= exp2i(-100, kP);

    const Precision wide{256};
    const LongRun wide_run = long_run(2, wide);
    const BigFloat rel_long =
        relative_error(binary_long_run().final_magnetization.with_precision(wide), wide_run.final_magnetization);
    const bool long_ok = rel_long <= BigFloat(1e-20, wide);
    std::ostringstream detail;
    detail << "n=12 rel=" << rel12.to_string(3) << " (<= 2^-100)  n=1e6 m=" << wide_run.final_magnetization.to_string(25)
           << " rel(128,256)=" << rel_long.to_string(3) << " (<= 1e-20)";
    return {small_ok && long_ok, detail.str()};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "oracle-equivalence", 30, oracle_equivalence},
        {2, "sandwich-envelope", 120, sandwich},
        {3, "exponent-fit", 300, exponent_fit},
        {4, "arm-constants", 300, enclosure},
        {5, "polynomial-factorization", 60, factorization},
        {6, "proof-grids", 0, proof_grids},
        {7, "critical-temperature", 0, critical_temperature},
        {8, "precision-validation", 0, precision_validation},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.budget_seconds <= 0 || seconds < c.budget_seconds;
        const bool passed = outcome.passed && in_time;
        if (!passed) ++failures;
        std::printf("%s [%d] %s: %s (%.2f s%s)\n", passed ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    outcome.detail.c_str(), seconds, in_time ? "" : ", over budget");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
