#pragma once

#include <climits>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "recprs/rational.hpp"

namespace recprs {

/// Dense univariate polynomial over the rationals. Coefficient i multiplies
/// x^i. The stored vector never ends in a zero, so the zero polynomial is the
/// empty vector.
class Polynomial {
   public:
    /// Degree reported for the zero polynomial; compares below every real degree.
    static constexpr int kZeroDegree = INT_MIN;

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, int power);
    static Polynomial x() { return monomial(1, 1); }

    int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of x^i; zero past the degree.
    Rational coeff(int i) const;
    /// Leading coefficient. Throws ZeroPolynomial for the zero polynomial.
    const Rational& leading_coeff() const;
    std::span<const Rational> coeffs() const { return coeffs_; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& s);
    Polynomial& operator/=(const Rational& s);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

   private:
    void normalize();

    std::vector<Rational> coeffs_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rational& s);
Polynomial operator*(const Rational& s, Polynomial a);
Polynomial operator/(Polynomial a, const Rational& s);

inline Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
inline Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial pow(const Polynomial& base, unsigned exponent);

Polynomial derivative(const Polynomial& p);

/// Horner evaluation.
Rational eval(const Polynomial& p, const Rational& x0);

/// Classical long division: a = q*b + r with deg r < deg b.
/// Throws ZeroPolynomial when b is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

struct RemainderStep {
    Polynomial quotient;
    Polynomial next;
};

/// One generalized remainder step: returns (q, P) with
/// alpha*prev = q*cur + beta*P and deg P < deg cur. P may be zero.
RemainderStep remainder_step(const Polynomial& prev, const Polynomial& cur, const Rational& alpha,
                             const Rational& beta);

struct ContentPrimitive {
    Rational content;
    Polynomial primitive;
};

/// p = content * primitive, where primitive has coprime integer coefficients
/// and a positive leading coefficient.
ContentPrimitive content_primitive(const Polynomial& p);

/// True when a = s*b for some nonzero rational s (zero is proportional only to zero).
bool proportional(const Polynomial& a, const Polynomial& b);

/// Human-readable form, highest degree first, e.g. "3/2*x^2 - 1/3".
/// The output is accepted back by parse_polynomial.
std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace recprs
