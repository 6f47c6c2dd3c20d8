#include "bethe/model.hpp"

#include <string>
#include <utility>

#include "bethe/errors.hpp"

namespace bethe {

namespace {

void require_branching(int d) {
    if (d < 2) throw DomainError("branching number d must be >= 2, got " + std::to_string(d));
}

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

ModelParams::ModelParams(int d, BetaSpec spec) : d_(d), spec_(std::move(spec)) {
    require_branching(d_);
    std::visit(Overloaded{
                   [](const CriticalBeta&) {},
                   [](const FloatBeta& f) {
                       if (!f.beta.is_finite() || f.beta <= 0L) throw DomainError("beta must be > 0");
                   },
                   [](const RationalT& r) {
                       if (r.t <= 1) throw DomainError("t = e^{2 beta} must be > 1, got " + to_string(r.t));
                   },
               },
               spec_);
    if (auto* r = std::get_if<RationalT>(&spec_)) r->t.canonicalize();
}

ModelParams ModelParams::zero_coupling(int d) {
    require_branching(d);
    return ModelParams(d, RationalT{Rational(1)}, Unchecked{});
}

Rational critical_b(int d) {
    require_branching(d);
    return canonical(Rational(d + 1, d - 1));
}

CriticalPoint critical_beta(int d, Precision prec) {
    require_branching(d);
    const BigFloat inv_d = BigFloat(1L, prec) / static_cast<long>(d);
    return CriticalPoint{atanh(inv_d), critical_b(d)};
}

bool ModelParams::is_critical() const {
    if (std::holds_alternative<CriticalBeta>(spec_)) return true;
    if (const auto* r = std::get_if<RationalT>(&spec_)) return r->t == critical_b(d_);
    return false;
}

std::optional<Rational> ModelParams::exact_b() const {
    if (std::holds_alternative<CriticalBeta>(spec_)) return critical_b(d_);
    if (const auto* r = std::get_if<RationalT>(&spec_)) return r->t;
    return std::nullopt;
}

BigFloat ModelParams::b(Precision prec) const {
    if (auto exact = exact_b()) return BigFloat(*exact, prec);
    const auto& f = std::get<FloatBeta>(spec_);
    return exp(2L * f.beta.with_precision(prec));
}

BigFloat ModelParams::beta(Precision prec) const {
    return std::visit(Overloaded{
                          [&](const CriticalBeta&) { return critical_beta(d_, prec).beta; },
                          [&](const FloatBeta& f) { return f.beta.with_precision(prec); },
                          [&](const RationalT& r) { return log(BigFloat(r.t, prec)) / 2L; },
                      },
                      spec_);
}

std::string ModelParams::describe_beta(int digits) const {
    return std::visit(Overloaded{
                          [](const CriticalBeta&) { return std::string("critical"); },
                          [&](const FloatBeta& f) { return f.beta.to_string(digits); },
                          [](const RationalT& r) { return "t=" + to_string(r.t); },
                      },
                      spec_);
}

}  // namespace bethe
