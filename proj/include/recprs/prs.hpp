#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "recprs/polynomial.hpp"

namespace recprs {

/// Selects the scalars (alpha_i, beta_i) of every remainder step.
class DivisionRule {
   public:
    enum class Kind { Sturm, MonicEuclid, Primitive, SubresultantPrs, Explicit };

    static DivisionRule sturm() { return DivisionRule(Kind::Sturm); }
    static DivisionRule monic() { return DivisionRule(Kind::MonicEuclid); }
    static DivisionRule primitive() { return DivisionRule(Kind::Primitive); }
    static DivisionRule subresultant() { return DivisionRule(Kind::SubresultantPrs); }
    static DivisionRule explicit_pairs(std::vector<std::pair<Rational, Rational>> pairs);

    /// "sturm", "monic", "primitive", "subresultant". Throws InvalidRule otherwise.
    static DivisionRule from_name(std::string_view name);

    Kind kind() const { return kind_; }
    std::string_view name() const;
    const std::vector<std::pair<Rational, Rational>>& pairs() const { return pairs_; }

   private:
    explicit DivisionRule(Kind kind) : kind_(kind) {}

    Kind kind_;
    std::vector<std::pair<Rational, Rational>> pairs_;
};

/// One complete PRS (P_1, ..., P_l) with the bookkeeping of each step.
/// Indexing follows the usual 1-based notation through the accessors:
/// element(1) is F, alpha(3)/beta(3) belong to the step that produced P_3.
struct PrsLevel {
    std::vector<Polynomial> elements;
    std::vector<Rational> alphas;       // alphas[i-3] for i = 3..l
    std::vector<Rational> betas;        // betas[i-3]
    std::vector<Polynomial> quotients;  // quotients[i-3] is q_{i-1}
    std::vector<int> degrees;           // n_i
    std::vector<Rational> leading_coeffs;  // c_i
    std::vector<int> degree_gaps;       // d_i = n_i - n_{i+1}, i = 1..l-1

    int length() const { return static_cast<int>(elements.size()); }
    const Polynomial& element(int i) const { return elements.at(static_cast<std::size_t>(i - 1)); }
    const Polynomial& last() const { return elements.back(); }
    int n(int i) const { return degrees.at(static_cast<std::size_t>(i - 1)); }
    const Rational& c(int i) const { return leading_coeffs.at(static_cast<std::size_t>(i - 1)); }
    int d(int i) const { return degree_gaps.at(static_cast<std::size_t>(i - 1)); }
    const Rational& alpha(int i) const { return alphas.at(static_cast<std::size_t>(i - 3)); }
    const Rational& beta(int i) const { return betas.at(static_cast<std::size_t>(i - 3)); }
    const Polynomial& quotient(int i) const { return quotients.at(static_cast<std::size_t>(i - 3)); }
};

/// Chained PRSs: level k+1 runs on (last of level k, its derivative).
struct RecursivePRS {
    std::vector<PrsLevel> levels;  // levels[k-1] is level k
    std::vector<Rational> gammas;  // gammas[k-1]: last element of level k over the primitive gcd
    std::vector<int> j_values;     // j_0 = deg F, j_k = degree of the last element of level k
    bool complete = false;

    int t() const { return static_cast<int>(levels.size()); }
    const PrsLevel& level(int k) const { return levels.at(static_cast<std::size_t>(k - 1)); }
    int j(int k) const { return j_values.at(static_cast<std::size_t>(k)); }
    int m() const { return j_values.front(); }
    int n() const { return levels.front().n(2); }
};

/// Complete PRS of (F, G): stops at the last nonzero remainder.
PrsLevel prs(const Polynomial& F, const Polynomial& G, const DivisionRule& rule);

RecursivePRS rprs(const Polynomial& F, const Polynomial& G, const DivisionRule& rule);

/// rprs(P, P', Sturm).
RecursivePRS recursive_sturm(const Polynomial& P);

/// Primitive representative of gcd(F, G), computed through the primitive PRS.
Polynomial gcd_via_prs(const Polynomial& F, const Polynomial& G);

}  // namespace recprs
