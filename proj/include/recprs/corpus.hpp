#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "recprs/polynomial.hpp"

namespace recprs::corpus {

// Draws use rng() directly rather than std::uniform_int_distribution so a seed
// yields the same corpus with every standard library.
using Rng = std::mt19937_64;

long draw(Rng& rng, long lo, long hi);

/// Integer coefficients in [-bound, bound], nonzero leading coefficient.
Polynomial random_polynomial(Rng& rng, int degree, long bound);

/// Squarefree polynomial of the given degree with integer coefficients.
Polynomial random_squarefree(Rng& rng, int degree, long bound);

/// (F, G) with deg F = deg_f, deg G = deg_f - 1 and deg gcd(F, G) = gcd_degree.
std::pair<Polynomial, Polynomial> random_pair_with_gcd(Rng& rng, int deg_f, int gcd_degree, long bound);

struct MultiplicityCase {
    Polynomial P;
    Polynomial A;
    Polynomial B;
    int a = 0;
    int b = 0;
};

/// P = A^a * B^b with A, B squarefree and coprime, a, b in {2, 3}, deg P <= max_degree.
MultiplicityCase random_multiplicity_case(Rng& rng, int max_degree, long bound);

struct RootProductCase {
    Polynomial P;
    std::vector<std::pair<Rational, int>> real_roots;  // (root, multiplicity), roots distinct
    std::vector<Rational> square_offsets;              // c_j > 0 in factors x^2 + c_j
    int expected_total = 0;
};

/// P = prod (x - r_i)^{m_i} * prod (x^2 + c_j), rational r_i and positive c_j.
RootProductCase random_root_product(Rng& rng, int max_distinct_roots, int max_multiplicity, int max_quadratics);

}  // namespace recprs::corpus
