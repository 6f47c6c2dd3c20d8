#include "bethe/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace bethe {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t k) {
    std::vector<Integer> coeffs(k + 1);
    coeffs[k] = c;
    return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

Integer IntPolynomial::evaluate(const Integer& z) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Rational IntPolynomial::evaluate(const Rational& z) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + Rational(*it);
    return acc;
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Integer& c = coeffs_[i];
        if (c == 0) continue;
        const Integer mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const bool unit = mag == 1 && i > 0;
        if (!unit) out += mag.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += "z";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<Integer> out(a.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const Integer& c, const IntPolynomial& a) {
    std::vector<Integer> out(a.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * a.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial pow(const IntPolynomial& p, unsigned exponent) {
    IntPolynomial result{1};
    IntPolynomial base = p;
    while (exponent > 0) {
        if ((exponent & 1U) != 0) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

LinearDivision divide_by_linear(const IntPolynomial& p, const Integer& root) {
    const auto& c = p.coefficients();
    if (c.empty()) return {IntPolynomial{}, Integer(0)};
    // Horner from the top: q_{k-1} = c_k + root * q_k; the last carry is p(root).
    std::vector<Integer> quotient(c.size() - 1);
    Integer carry = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        quotient[k] = carry;
        carry = c[k] + root * carry;
    }
    return {IntPolynomial(std::move(quotient)), carry};
}

}  // namespace bethe
