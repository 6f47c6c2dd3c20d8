#pragma once

#include <optional>
#include <string>
#include <variant>

#include "bethe/big_float.hpp"
#include "bethe/rational.hpp"

namespace bethe {

/// beta = atanh(1/d), i.e. b = e^{2 beta} = (d+1)/(d-1).
struct CriticalBeta {};

/// An arbitrary positive inverse temperature; float modes only.
struct FloatBeta {
    BigFloat beta;
};

/// Coupling given through t = e^{2 beta} as an exact rational; allows exact mode.
struct RationalT {
    Rational t;
};

using BetaSpec = std::variant<CriticalBeta, FloatBeta, RationalT>;

/// Branching number and inverse temperature of the Ising model on the rooted
/// Cayley tree (every vertex has d children).
class ModelParams {
public:
    /// Throws DomainError for d < 2 or a non-positive coupling (b <= 1).
    ModelParams(int d, BetaSpec spec);

    static ModelParams critical(int d) { return ModelParams(d, CriticalBeta{}); }

    /// The decoupled point beta = 0 (b = 1). Only used to probe symmetry
    /// limits; the regular constructor rejects it.
    static ModelParams zero_coupling(int d);

    [[nodiscard]] int d() const { return d_; }
    [[nodiscard]] const BetaSpec& beta_spec() const { return spec_; }

    /// True when b equals (d+1)/(d-1) exactly.
    [[nodiscard]] bool is_critical() const;

    /// b = e^{2 beta} when it is rational (critical or RationalT).
    [[nodiscard]] std::optional<Rational> exact_b() const;

    /// b at the requested precision.
    [[nodiscard]] BigFloat b(Precision prec) const;

    /// beta at the requested precision.
    [[nodiscard]] BigFloat beta(Precision prec) const;

    /// Short human-readable description: "critical", "t=3/1", "0.25".
    [[nodiscard]] std::string describe_beta(int digits = 20) const;

private:
    struct Unchecked {};
    ModelParams(int d, BetaSpec spec, Unchecked) : d_(d), spec_(std::move(spec)) {}

    int d_;
    BetaSpec spec_;
};

/// b_c = (d+1)/(d-1).
Rational critical_b(int d);

struct CriticalPoint {
    BigFloat beta;  ///< atanh(1/d)
    Rational b;     ///< (d+1)/(d-1), exact
};

/// Critical coupling of the d-ary tree. Throws DomainError for d < 2.
CriticalPoint critical_beta(int d, Precision prec = kDefaultPrecision);

}  // namespace bethe
