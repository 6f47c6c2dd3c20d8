#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "bethe/rational.hpp"

namespace bethe {

/// Dense polynomial with arbitrary-precision integer coefficients, lowest
/// degree first. Trailing zero coefficients are always trimmed, so the zero
/// polynomial has no coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    /// c * z^k
    static IntPolynomial monomial(const Integer& c, std::size_t k);

    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<Integer>& coefficients() const { return coeffs_; }
    /// Coefficient of z^k (zero past the degree).
    [[nodiscard]] Integer coefficient(std::size_t k) const;

    [[nodiscard]] Integer evaluate(const Integer& z) const;
    [[nodiscard]] Rational evaluate(const Rational& z) const;

    /// "18*z + 30" style rendering, highest degree first.
    [[nodiscard]] std::string to_string() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const Integer& c, const IntPolynomial& a);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<Integer> coeffs_;
};

IntPolynomial pow(const IntPolynomial& p, unsigned exponent);

struct LinearDivision {
    IntPolynomial quotient;
    Integer remainder;
};

/// Synthetic division of p by (z - root).
LinearDivision divide_by_linear(const IntPolynomial& p, const Integer& root);

}  // namespace bethe
