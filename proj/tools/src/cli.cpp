#include "bethe/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "bethe/analysis.hpp"
#include "bethe/bounds.hpp"
#include "bethe/errors.hpp"
#include "bethe/oracle.hpp"
#include "bethe/recursion.hpp"
#include "table_writer.hpp"

#ifndef BETHE_ARTIFACT_VERSION
#define BETHE_ARTIFACT_VERSION "0.0.0"
#endif

namespace bethe::cli {

Environment Environment::from_process() {
    Environment env;
    if (const char* bits = std::getenv("BETHE_PRECISION_BITS")) env.precision_bits = std::string(bits);
    return env;
}

namespace {

/// Flags shared by every subcommand.
struct CommonFlags {
    int d = 2;
    std::string beta = "critical";
    std::string t;
    long precision_bits = 0;
    std::string format = "csv";
    std::string output;
    int digits = 20;

    CLI::Option* d_option = nullptr;
    CLI::Option* precision_option = nullptr;
};

struct MagnetizeFlags {
    std::uint64_t n = 0;
    std::string mode = "float";
    std::string sample;
};

struct OracleFlags {
    int n = 1;
    std::string mode;
};

struct VerifyFlags {
    std::string target;
    int d_max = 0;
    std::uint64_t n_max = 100'000;
    bool inject_fault = false;
};

struct FitFlags {
    std::string window = "1000:1000000";
    std::string sample = "geometric:1.2";
};

struct ScanFlags {
    std::string beta_min;
    std::string beta_max;
    int steps = 0;
    std::uint64_t n = 10'000;
};

struct BetacFlags {
    double tol = 1e-5;
    std::uint64_t n = 100'000;
};

/// Validated run configuration.
struct RunConfig {
    Precision precision = kDefaultPrecision;
    OutputFormat format = OutputFormat::Csv;
    int digits = 20;
};

void add_common(CLI::App& sub, CommonFlags& flags, bool coupling) {
    flags.d_option = sub.add_option("--d", flags.d, "branching number (children per vertex)")
                         ->check(CLI::Range(2, 100'000))
                         ->capture_default_str();
    if (coupling) {
        auto* beta = sub.add_option("--beta", flags.beta, "'critical' or a positive decimal inverse temperature")
                         ->capture_default_str();
        sub.add_option("--t", flags.t, "coupling as an exact rational t = e^{2 beta}, e.g. 5/2")->excludes(beta);
    }
    flags.precision_option =
        sub.add_option("--precision", flags.precision_bits, "float mantissa bits in [64, 4096] (default 128)");
    sub.add_option("--format", flags.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub.add_option("--output", flags.output, "write data to this file instead of stdout");
    sub.add_option("--digits", flags.digits, "significant digits for floats")
        ->check(CLI::Range(6, 50))
        ->capture_default_str();
}

long parse_bits(const std::string& text) {
    std::size_t used = 0;
    long bits = 0;
    try {
        bits = std::stol(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw ConfigError("BETHE_PRECISION_BITS is not an integer: '" + text + "'");
    return bits;
}

RunConfig resolve(const CommonFlags& flags, const Environment& env) {
    RunConfig cfg;
    long bits = kDefaultPrecision.bits;
    if (flags.precision_option->count() > 0) {
        bits = flags.precision_bits;
    } else if (env.precision_bits) {
        bits = parse_bits(*env.precision_bits);
    }
    cfg.precision = Precision{bits};
    require_supported_precision(cfg.precision);
    cfg.format = flags.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    cfg.digits = flags.digits;
    return cfg;
}

ModelParams model_from(const CommonFlags& flags, Precision prec) {
    if (!flags.t.empty()) return ModelParams(flags.d, RationalT{parse_rational(flags.t)});
    if (flags.beta == "critical") return ModelParams::critical(flags.d);
    return ModelParams(flags.d, FloatBeta{BigFloat::parse(flags.beta, prec)});
}

nlohmann::ordered_json make_meta(std::optional<int> d, const std::string& beta, NumberMode mode,
                                 std::optional<Precision> prec) {
    nlohmann::ordered_json meta;
    meta["d"] = d ? nlohmann::ordered_json(*d) : nlohmann::ordered_json(nullptr);
    meta["beta"] = beta;
    meta["mode"] = mode == NumberMode::Exact ? "exact" : "float";
    meta["precision_bits"] = prec ? nlohmann::ordered_json(prec->bits) : nlohmann::ordered_json(nullptr);
    meta["artifact_version"] = BETHE_ARTIFACT_VERSION;
    return meta;
}

std::string fmt(const BigFloat& x, int digits) { return x.to_string(digits); }

std::string fmt(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", std::min(digits, 17) - 1, x);
    return buf;
}

/// Parses "geometric:R" into R > 1.
double parse_sample(const std::string& text) {
    const std::string prefix = "geometric:";
    if (text.rfind(prefix, 0) != 0) throw ConfigError("--sample must look like geometric:1.2, got '" + text + "'");
    const double ratio = BigFloat::parse(text.substr(prefix.size()), kDefaultPrecision).to_double();
    if (!(ratio > 1.0)) throw ConfigError("--sample ratio must exceed 1");
    return ratio;
}

HeightWindow parse_window(const std::string& text) {
    const auto colon = text.find(':');
    auto as_height = [&](const std::string& part) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != part.size()) throw ConfigError("--window must look like 1000:1000000");
        return static_cast<std::uint64_t>(v);
    };
    if (colon == std::string::npos) throw ConfigError("--window must look like 1000:1000000");
    const HeightWindow w{as_height(text.substr(0, colon)), as_height(text.substr(colon + 1))};
    if (w.n_min == 0 || w.n_min >= w.n_max) throw ConfigError("--window needs 1 <= a < b");
    return w;
}

/// Either the caller's stream or the --output file.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (path.empty()) return;
        file_.open(path, std::ios::binary | std::ios::trunc);
        if (!file_) throw ConfigError("cannot open --output file '" + path + "'");
        stream_ = &file_;
    }
    std::ostream& stream() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

int cmd_magnetize(const CommonFlags& common, const MagnetizeFlags& flags, const Environment& env, std::ostream& out) {
    const RunConfig cfg = resolve(common, env);
    const ModelParams params = model_from(common, cfg.precision);
    const bool exact = flags.mode == "exact";

    std::optional<std::set<std::uint64_t>> sampled;
    if (!flags.sample.empty()) {
        const double ratio = parse_sample(flags.sample);
        sampled.emplace();
        if (flags.n > 0) {
            for (std::uint64_t h : geometric_heights(1, flags.n, ratio)) sampled->insert(h);
        }
    }
    auto keep = [&](std::uint64_t n) { return !sampled || sampled->count(n) != 0; };

    std::optional<ExactSeries> exact_rows;
    if (exact) exact_rows = magnetization_series_exact(params, flags.n);

    Sink sink(common.output, out);
    const auto writer = make_writer(cfg.format, sink.stream(), {"n", "r_prev", "m_n"},
                                    make_meta(params.d(), params.describe_beta(cfg.digits),
                                              exact ? NumberMode::Exact : NumberMode::Float,
                                              exact ? std::nullopt : std::optional<Precision>(cfg.precision)));
    if (exact) {
        for (const auto& row : exact_rows->rows) {
            if (keep(row.n)) writer->row({std::to_string(row.n), to_string(row.ratio), to_string(row.magnetization)});
        }
    } else {
        for_each_ratio(params, flags.n, cfg.precision, [&](const FloatRatio& r) {
            const std::uint64_t n = r.index + 1;
            if (!keep(n)) return;
            writer->row({std::to_string(n), fmt(r.value(), cfg.digits), fmt(magnetization_rooted(r), cfg.digits)});
        });
    }
    writer->finish();
    return kExitOk;
}

int cmd_oracle(const CommonFlags& common, const OracleFlags& flags, const Environment& env, std::ostream& out,
               std::ostream& err) {
    const RunConfig cfg = resolve(common, env);
    const ModelParams params = model_from(common, cfg.precision);
    if (flags.n < 1) throw DomainError("oracle height must be >= 1");
    build_tree(params.d(), flags.n);  // size guard before any output

    const bool exact = flags.mode.empty() ? params.exact_b().has_value() : flags.mode == "exact";
    const BigFloat tolerance = exp2i(16 - static_cast<long>(cfg.precision.bits), cfg.precision);

    Sink sink(common.output, out);
    const auto writer = make_writer(cfg.format, sink.stream(), {"n", "oracle", "recursion", "verdict"},
                                    make_meta(params.d(), params.describe_beta(cfg.digits),
                                              exact ? NumberMode::Exact : NumberMode::Float,
                                              exact ? std::nullopt : std::optional<Precision>(cfg.precision)));
    bool all_match = true;
    if (exact) {
        const auto ratios = iterate_ratio_exact(params, static_cast<std::uint64_t>(flags.n));
        for (int n = 1; n <= flags.n; ++n) {
            const Rational brute = root_magnetization_exact(params, n);
            const Rational recursed = magnetization_rooted(ratios[static_cast<std::size_t>(n - 1)]);
            const bool match = brute == recursed;
            all_match = all_match && match;
            writer->row({std::to_string(n), to_string(brute), to_string(recursed), match ? "MATCH" : "MISMATCH"});
        }
    } else {
        const auto ratios = iterate_ratio(params, static_cast<std::uint64_t>(flags.n), cfg.precision);
        for (int n = 1; n <= flags.n; ++n) {
            const BigFloat brute = root_magnetization(params, n, cfg.precision);
            const BigFloat recursed = magnetization_rooted(ratios[static_cast<std::size_t>(n - 1)]);
            const bool match = relative_error(brute, recursed) <= tolerance;
            all_match = all_match && match;
            writer->row({std::to_string(n), fmt(brute, cfg.digits), fmt(recursed, cfg.digits),
                         match ? "MATCH" : "MISMATCH"});
        }
    }
    writer->finish();
    err << "oracle: " << (all_match ? "MATCH" : "MISMATCH") << (exact ? " (exact)" : " (float, rel <= 2^(16-prec))")
        << " for n = 1.." << flags.n << '\n';
    return all_match ? kExitOk : kExitVerificationFailed;
}

/// Row layout shared by every verify suite.
struct VerifyRow {
    std::string suite;
    std::string d;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::uint64_t near_ties = 0;
    std::string min_slack;
    std::string detail;
};

SandwichReport faulty_sandwich(int d, std::uint64_t n_max, Precision prec) {
    const ModelParams params = ModelParams::critical(d);
    SandwichChecker checker(make_envelope(d, prec), prec);
    FloatRatioIterator it(params, prec);
    it.reset(FloatRatio{0, BigFloat(1e-9, prec)});  // r_0 = 1 - 1e-9
    for (std::uint64_t k = 0; k < n_max; ++k) {
        if (k > 0) it.advance();
        checker.observe(it.current());
    }
    return checker.report();
}

VerifyRow sandwich_row(int d, std::uint64_t n_max, bool inject_fault, const RunConfig& cfg) {
    const SandwichReport r = inject_fault ? faulty_sandwich(d, n_max, cfg.precision)
                                          : check_sandwich(ModelParams::critical(d), n_max, cfg.precision,
                                                           make_envelope(d, cfg.precision));
    VerifyRow row{"sandwich", std::to_string(d), r.n_checked, r.violations.size(), r.near_ties.size(), "", ""};
    std::ostringstream detail;
    if (r.min_slack_upper) {
        const BigFloat overall =
            r.min_slack_lower && *r.min_slack_lower < *r.min_slack_upper ? *r.min_slack_lower : *r.min_slack_upper;
        row.min_slack = fmt(overall, cfg.digits);
        detail << "upper=" << r.min_slack_upper->to_string(8);
        if (r.min_slack_lower) detail << " lower=" << r.min_slack_lower->to_string(8);
    }
    if (!r.violations.empty()) detail << " first_violation_n=" << r.violations.front().n;
    if (inject_fault) detail << " (fault injected: r_0 = 1 - 1e-9)";
    row.detail = detail.str();
    return row;
}

VerifyRow grid_row(const GridReport& r, const std::string& d) {
    VerifyRow row{r.name, d, r.checked, r.violations.size(), r.near_ties, "", ""};
    if (r.min_slack) row.min_slack = fmt(*r.min_slack, 17);
    if (!r.violations.empty()) {
        row.detail = r.violations.front();
    } else if (!r.notes.empty()) {
        row.detail = r.notes.front();
    }
    return row;
}

std::vector<VerifyRow> factorization_rows(int d_max) {
    if (d_max < 2 || d_max > 200) throw ConfigError("--d-max for poly must be in [2, 200]");
    std::vector<VerifyRow> rows;
    for (int d = 2; d <= d_max; ++d) {
        const FactorizationCheck check = factor_positivity_check(lower_step_polynomial(d));
        VerifyRow row{"factorization", std::to_string(d), 1, check.passed() ? 0U : 1U, 0, "", ""};
        if (check.passed()) {
            const auto& coeffs = check.quotient.coefficients();
            row.min_slack = std::min_element(coeffs.begin(), coeffs.end())->get_str();
            row.detail = d <= 3 ? check.quotient.to_string() : "degree " + std::to_string(check.quotient.degree());
        } else {
            row.detail = check.failure->message;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_verify(const CommonFlags& common, const VerifyFlags& flags, const Environment& env, std::ostream& out,
               std::ostream& err) {
    const RunConfig cfg = resolve(common, env);
    const bool single_d = common.d_option->count() > 0;
    const bool bounds = flags.target == "bounds" || flags.target == "all";
    const bool poly = flags.target == "poly" || flags.target == "all";
    if (flags.n_max < 1) throw ConfigError("--n-max must be >= 1");
    if (flags.inject_fault && !bounds) throw ConfigError("--inject-fault applies to the bounds suite");
    const int bounds_d_max = flags.d_max > 0 ? flags.d_max : 10;
    const int poly_d_max = flags.d_max > 0 ? flags.d_max : 200;
    if (bounds && !single_d && bounds_d_max < 2) throw ConfigError("--d-max must be >= 2");

    std::vector<VerifyRow> rows;
    if (bounds) {
        const int lo = single_d ? common.d : 2;
        const int hi = single_d ? common.d : bounds_d_max;
        for (int d = lo; d <= hi; ++d) rows.push_back(sandwich_row(d, flags.n_max, flags.inject_fault, cfg));
        rows.push_back(grid_row(verify_envelope_base_case(lo, hi), ""));
    }
    if (poly) {
        for (VerifyRow& r : factorization_rows(single_d && !bounds ? common.d : poly_d_max)) {
            if (!single_d || bounds || r.d == std::to_string(common.d)) rows.push_back(std::move(r));
        }
    }
    if (flags.target == "all") {
        ProofGrids grids;
        grids.lower.n_max = flags.n_max;
        grids.upper.n_max = flags.n_max;
        for (const GridReport& r : verify_proof_inequalities(grids, cfg.precision)) rows.push_back(grid_row(r, ""));
    }

    Sink sink(common.output, out);
    const auto writer = make_writer(
        cfg.format, sink.stream(), {"suite", "d", "checked", "violations", "near_ties", "min_slack", "status", "detail"},
        make_meta(single_d ? std::optional<int>(common.d) : std::nullopt, "critical", NumberMode::Float,
                  cfg.precision));
    std::uint64_t failed = 0;
    for (const VerifyRow& r : rows) {
        const bool ok = r.violations == 0;
        if (!ok) ++failed;
        writer->row({r.suite, r.d, std::to_string(r.checked), std::to_string(r.violations),
                     std::to_string(r.near_ties), r.min_slack, ok ? "PASS" : "FAIL", r.detail});
    }
    writer->finish();
    err << "verify " << flags.target << ": " << rows.size() - failed << "/" << rows.size() << " suites passed\n";
    return failed == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_fit(const CommonFlags& common, const FitFlags& flags, const Environment& env, std::ostream& out) {
    const RunConfig cfg = resolve(common, env);
    const ModelParams params = model_from(common, cfg.precision);
    const HeightWindow window = parse_window(flags.window);
    const double ratio = parse_sample(flags.sample);
    const FloatSeries series = magnetization_series(params, geometric_heights(window.n_min, window.n_max, ratio),
                                                    cfg.precision);
    const FitResult fit = fit_exponent(series, window);
    std::string c_hat;
    std::string big_c_hat;
    if (params.is_critical() && window.n_min > trivial_regime_cutoff(params.d())) {
        const ArmConstants arm = arm_constants(series, window);
        c_hat = fmt(arm.lower_constant, cfg.digits);
        big_c_hat = fmt(arm.upper_constant, cfg.digits);
    }

    Sink sink(common.output, out);
    const auto writer = make_writer(
        cfg.format, sink.stream(),
        {"d", "n_min", "n_max", "points", "rho_hat", "stderr", "residual_max", "c_hat", "C_hat"},
        make_meta(params.d(), params.describe_beta(cfg.digits), NumberMode::Float, cfg.precision));
    writer->row({std::to_string(params.d()), std::to_string(window.n_min), std::to_string(window.n_max),
                 std::to_string(fit.points), fmt(fit.rho_hat, cfg.digits), fmt(fit.standard_error, cfg.digits),
                 fmt(fit.residual_max, cfg.digits), c_hat, big_c_hat});
    writer->finish();
    return kExitOk;
}

int cmd_scan(const CommonFlags& common, const ScanFlags& flags, const Environment& env, std::ostream& out) {
    const RunConfig cfg = resolve(common, env);
    const BigFloat lo = BigFloat::parse(flags.beta_min, cfg.precision);
    const BigFloat hi = BigFloat::parse(flags.beta_max, cfg.precision);
    const auto rows = scan_beta(common.d, linear_beta_grid(lo, hi, flags.steps), flags.n, cfg.precision);

    Sink sink(common.output, out);
    const auto writer = make_writer(cfg.format, sink.stream(), {"beta", "m_n"},
                                    make_meta(common.d, "grid", NumberMode::Float, cfg.precision));
    for (const ScanRow& r : rows) writer->row({fmt(r.beta, cfg.digits), fmt(r.magnetization, cfg.digits)});
    writer->finish();
    return kExitOk;
}

int cmd_betac(const CommonFlags& common, const BetacFlags& flags, const Environment& env, std::ostream& out) {
    const RunConfig cfg = resolve(common, env);
    BetacOptions options;
    options.height = flags.n;
    options.precision = cfg.precision;
    if (flags.n < 1) throw ConfigError("--n must be >= 1");
    const BetacEstimate e = estimate_betac(common.d, flags.tol, options);

    Sink sink(common.output, out);
    const auto writer = make_writer(cfg.format, sink.stream(),
                                    {"d", "beta_hat", "reference", "deviation", "evaluations"},
                                    make_meta(common.d, "bisection", NumberMode::Float, cfg.precision));
    writer->row({std::to_string(common.d), fmt(e.beta_hat, cfg.digits), fmt(e.reference, cfg.digits),
                 fmt(e.deviation, cfg.digits), std::to_string(e.trace.size())});
    writer->finish();
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
    CLI::App app("Critical root magnetization of the Ising model on rooted Cayley trees", "bethe");
    app.require_subcommand(1);

    CommonFlags magnetize_common;
    MagnetizeFlags magnetize;
    auto* magnetize_cmd = app.add_subcommand("magnetize", "m_n = <sigma_0>^+_n for n = 1..N");
    add_common(*magnetize_cmd, magnetize_common, true);
    magnetize_cmd->add_option("--n", magnetize.n, "largest height N")->required();
    magnetize_cmd->add_option("--mode", magnetize.mode, "exact or float")
        ->check(CLI::IsMember({"exact", "float"}))
        ->capture_default_str();
    magnetize_cmd->add_option("--sample", magnetize.sample, "emit only geometric:R heights");

    CommonFlags oracle_common;
    OracleFlags oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force sum vs recursion for n = 1..N");
    add_common(*oracle_cmd, oracle_common, true);
    oracle_cmd->add_option("--n", oracle.n, "largest height N")->required();
    oracle_cmd->add_option("--mode", oracle.mode, "exact or float (default: exact for rational t)")
        ->check(CLI::IsMember({"exact", "float"}));

    CommonFlags verify_common;
    VerifyFlags verify;
    auto* verify_cmd = app.add_subcommand("verify", "bound and inequality suites");
    add_common(*verify_cmd, verify_common, false);
    verify_cmd->add_option("target", verify.target, "bounds, poly or all")
        ->required()
        ->check(CLI::IsMember({"bounds", "poly", "all"}));
    verify_cmd->add_option("--d-max", verify.d_max, "largest d (default 10 for bounds, 200 for poly)");
    verify_cmd->add_option("--n-max", verify.n_max, "largest height")->capture_default_str();
    verify_cmd->add_flag("--inject-fault", verify.inject_fault, "start the bounds run from r_0 = 1 - 1e-9");

    CommonFlags fit_common;
    FitFlags fit;
    auto* fit_cmd = app.add_subcommand("fit", "log-log fit of m_n against n");
    add_common(*fit_cmd, fit_common, true);
    fit_cmd->add_option("--window", fit.window, "a:b height window")->capture_default_str();
    fit_cmd->add_option("--sample", fit.sample, "geometric:R height sampling")->capture_default_str();

    CommonFlags scan_common;
    ScanFlags scan;
    auto* scan_cmd = app.add_subcommand("scan", "m_n over an evenly spaced beta grid");
    add_common(*scan_cmd, scan_common, false);
    scan_cmd->add_option("--beta-min", scan.beta_min)->required();
    scan_cmd->add_option("--beta-max", scan.beta_max)->required();
    scan_cmd->add_option("--steps", scan.steps)->required()->check(CLI::PositiveNumber);
    scan_cmd->add_option("--n", scan.n, "height")->capture_default_str();

    CommonFlags betac_common;
    BetacFlags betac;
    auto* betac_cmd = app.add_subcommand("betac", "bisection estimate of the critical beta");
    add_common(*betac_cmd, betac_common, false);
    betac_cmd->add_option("--tol", betac.tol, "bracket width")->capture_default_str();
    betac_cmd->add_option("--n", betac.n, "classification height")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*magnetize_cmd) return cmd_magnetize(magnetize_common, magnetize, env, out);
        if (*oracle_cmd) return cmd_oracle(oracle_common, oracle, env, out, err);
        if (*verify_cmd) return cmd_verify(verify_common, verify, env, out, err);
        if (*fit_cmd) return cmd_fit(fit_common, fit, env, out);
        if (*scan_cmd) return cmd_scan(scan_common, scan, env, out);
        if (*betac_cmd) return cmd_betac(betac_common, betac, env, out);
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ModeError& e) {
        err << "mode error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SizeError& e) {
        err << "size guard: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitVerificationFailed;
    } catch (const PrecisionError& e) {
        err << "precision failure: " << e.what() << '\n';
        return kExitVerificationFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerificationFailed;
    }
    return kExitUsage;
}

}  // namespace bethe::cli
