#include "recprs/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "recprs/errors.hpp"

namespace recprs {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int power) {
    if (power < 0) throw IndexError("negative monomial power");
    std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading_coeff() const {
    if (coeffs_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Polynomial& Polynomial::operator/=(const Rational& s) {
    if (s == 0) throw DivisionByZeroRule("polynomial divided by zero");
    for (auto& c : coeffs_) c /= s;
    return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    out *= b;
    return out;
}
Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
Polynomial operator/(Polynomial a, const Rational& s) { return a /= s; }

Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial result = Polynomial::constant(1);
    Polynomial b = base;
    while (exponent > 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1u;
        if (exponent > 0) b *= b;
    }
    return result;
}

Polynomial derivative(const Polynomial& p) {
    auto c = p.coeffs();
    if (c.size() <= 1) return {};
    std::vector<Rational> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(out));
}

Rational eval(const Polynomial& p, const Rational& x0) {
    Rational acc = 0;
    auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x0 + *it;
    return acc;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    if (a.degree() < b.degree()) return {Polynomial{}, a};

    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    const auto bc = b.coeffs();
    const int db = b.degree();
    const Rational& lead = b.leading_coeff();
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);

    for (int i = a.degree(); i >= db; --i) {
        const Rational& top = rem[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        Rational q = top / lead;
        const int shift = i - db;
        quot[static_cast<std::size_t>(shift)] = q;
        for (int k = 0; k <= db; ++k) rem[static_cast<std::size_t>(shift + k)] -= q * bc[static_cast<std::size_t>(k)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

RemainderStep remainder_step(const Polynomial& prev, const Polynomial& cur, const Rational& alpha,
                             const Rational& beta) {
    if (alpha == 0 || beta == 0) throw DivisionByZeroRule("division rule with a zero scalar");
    if (cur.is_zero()) throw ZeroPolynomial("remainder step by the zero polynomial");
    if (prev.degree() < cur.degree())
        throw DegreeOrder("remainder step needs deg(prev) >= deg(cur)");
    auto [q, r] = divmod(prev * alpha, cur);
    return {std::move(q), std::move(r) / beta};
}

ContentPrimitive content_primitive(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("content of the zero polynomial");
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational content = make_rational(num_gcd, den_lcm);
    if (p.leading_coeff() < 0) content = -content;
    return {content, p / content};
}

bool proportional(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.degree() != b.degree()) return false;
    return a * b.leading_coeff() == b * a.leading_coeff();
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (c == 0) continue;
        const bool negative = c < 0;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        Rational mag = abs(c);
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace recprs
