#include "recprs/rational.hpp"

#include <stdexcept>

#include "recprs/errors.hpp"

namespace recprs {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_exact_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("empty integer");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("not an integer: " + std::string(text));
    }
    std::string digits(text.substr(start));
    Integer v(digits, 10);
    return (text[0] == '-') ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw std::invalid_argument("signed denominator: " + std::string(text));
    return make_rational(parse_integer(text.substr(0, slash)), parse_integer(den_text));
}

int sign(const Rational& r) { return sgn(r); }

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw DivisionByZeroRule("negative power of zero");
        return pow(Rational(1) / base, -exponent);
    }
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    out.canonicalize();
    return out;
}

}  // namespace recprs
