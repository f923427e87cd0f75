#pragma once

#include <span>
#include <vector>

#include "recprs/polynomial.hpp"
#include "recprs/prs.hpp"

namespace recprs {

/// Leading-coefficient signs of one Sturm level at -inf and +inf.
struct LambdaPair {
    std::vector<Rational> at_minus_inf;  // (-1)^{n_i} lc(P_i)
    std::vector<Rational> at_plus_inf;   // lc(P_i)
};

/// Number of adjacent sign changes. Throws ZeroEntry if any entry is zero.
int sign_variations(std::span<const Rational> values);

LambdaPair lambda_pair(const PrsLevel& level);

struct RootCount {
    int total = 0;
    std::vector<int> per_level;  // V(lambda(-inf)) - V(lambda(+inf)) for each level
};

/// Real roots of P counted with multiplicity, summed over the levels of the
/// recursive Sturm sequence. Throws ConstantInput for deg(P) < 1.
RootCount count_real_roots_with_multiplicity(const Polynomial& P);

/// Same count from an already computed recursive Sturm sequence.
/// Throws InvalidRule when a level was not produced with (alpha, beta) = (1, -1).
RootCount count_real_roots_with_multiplicity(const RecursivePRS& sturm);

}  // namespace recprs
