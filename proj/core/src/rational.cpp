#include "bethe/rational.hpp"

#include <cctype>
#include <string>

#include "bethe/errors.hpp"

namespace bethe {

Rational canonical(Rational q) {
    q.canonicalize();
    return q;
}

Rational pow(const Rational& base, unsigned long exponent) {
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    // Powers of a reduced fraction stay reduced.
    Rational out;
    mpz_swap(out.get_num_mpz_t(), num.get_mpz_t());
    mpz_swap(out.get_den_mpz_t(), den.get_mpz_t());
    return out;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent >= 0) return pow(base, static_cast<unsigned long>(exponent));
    if (base == 0) throw DomainError("zero raised to a negative power");
    return pow(Rational(1) / base, static_cast<unsigned long>(-exponent));
}

std::string to_string(const Rational& q) {
    const Rational c = canonical(q);
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto is_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        }
        return true;
    };
    const std::string_view num_text = text.substr(0, slash);
    const std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num_text) || !is_int(den_text)) {
        throw ConfigError("not a rational number: '" + std::string(text) + "'");
    }
    const std::string num_str(num_text.front() == '+' ? num_text.substr(1) : num_text);
    const std::string den_str(den_text.front() == '+' ? den_text.substr(1) : den_text);
    Integer num(num_str, 10);
    Integer den(den_str, 10);
    if (den == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
    return canonical(Rational(num, den));
}

bool is_rational_square(const Rational& q) {
    const Rational c = canonical(q);
    return c >= 0 && mpz_perfect_square_p(c.get_num_mpz_t()) != 0 && mpz_perfect_square_p(c.get_den_mpz_t()) != 0;
}

}  // namespace bethe
