#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace recprs {

using Integer = mpz_class;

// GMP keeps mpq_class canonical after every arithmetic operation; values built
// from raw parts must go through make_rational so the invariant holds there too.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// "num/den" with den >= 1, always including the denominator.
std::string to_exact_string(const Rational& r);

// Accepts "a", "-a", "a/b", "-a/b" with b != 0. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

int sign(const Rational& r);

Rational pow(const Rational& base, long exponent);

inline bool is_reduced(const Rational& r) {
    if (r.get_den() < 1) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return g == 1;
}

}  // namespace recprs
