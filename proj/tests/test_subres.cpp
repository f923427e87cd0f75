#include <doctest.h>

#include "recprs/errors.hpp"
#include "recprs/subres.hpp"
#include "support.hpp"

using namespace recprs;
using namespace recprs::testing;

TEST_CASE("Sylvester matrix") {
    const ExactMatrix s = sylvester_matrix(poly("x^2-1"), poly("x-1"));
    CHECK(s == ExactMatrix::from_rows({{1, 1, 0}, {0, -1, 1}, {-1, 0, -1}}));
    CHECK(determinant(s) == 0);

    const ExactMatrix r = sylvester_matrix(poly("x^2+1"), poly("x"));
    CHECK(determinant(r) == cofactor_determinant(r));
    CHECK(determinant(r) == 1);

    const ExactMatrix big = sylvester_matrix(poly("x^5+2*x-1"), poly("3*x^2+1"));
    CHECK(big.rows() == 7);
    for (std::size_t c = 0; c < 2; ++c) CHECK(big(c, c) == 1);
    for (std::size_t c = 2; c < 7; ++c) CHECK(big(c - 2, c) == 3);
    CHECK_THROWS_AS(sylvester_matrix(poly("x"), poly("x^2")), DegreeOrder);
}

TEST_CASE("subresultant matrix shape") {
    const auto e = example_sequence();
    const Polynomial F = e.P, G = derivative(F);
    const ExactMatrix n5 = subres_matrix(F, G, 5);
    REQUIRE(n5.rows() == 10);
    REQUIRE(n5.cols() == 5);
    for (int r = 0; r < 10; ++r) {
        CHECK(n5(r, 0) == F.coeff(8 - r));
        CHECK(n5(r, 1) == F.coeff(9 - r));
        CHECK(n5(r, 2) == G.coeff(7 - r));
        CHECK(n5(r, 3) == G.coeff(8 - r));
        CHECK(n5(r, 4) == G.coeff(9 - r));
    }
    const ExactMatrix last = subres_matrix(F, G, 6);
    CHECK(last.rows() == 9);
    CHECK(last.cols() == 3);
    CHECK_THROWS_AS(subres_matrix(F, G, 7), IndexError);
    CHECK_THROWS_AS(subres_matrix(F, G, -1), IndexError);

    corpus::Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = static_cast<int>(corpus::draw(rng, 2, 8));
        const int n = static_cast<int>(corpus::draw(rng, 1, m));
        const int j = static_cast<int>(corpus::draw(rng, 0, n - 1));
        const ExactMatrix nj =
            subres_matrix(corpus::random_polynomial(rng, m, 5), corpus::random_polynomial(rng, n, 5), j);
        CHECK(nj.rows() == static_cast<std::size_t>(m + n - j));
        CHECK(nj.cols() == static_cast<std::size_t>(m + n - 2 * j));
        std::vector<std::size_t> rows;
        for (std::size_t r = 0; r + 1 < nj.cols(); ++r) rows.push_back(r);
        rows.push_back(nj.rows() - 1);
        const ExactMatrix sq = select_rows(nj, rows);
        CHECK(sq.is_square());
    }
}

TEST_CASE("subresultants vanish below the gcd degree") {
    corpus::Rng rng(42);
    for (int g = 1; g <= 3; ++g) {
        const auto [F, G] = corpus::random_pair_with_gcd(rng, 6, g, 9);
        for (int j = 0; j < g; ++j) CHECK(subresultant(F, G, j).is_zero());
        CHECK(subresultant(F, G, g).degree() == g);
    }
    const auto [F, G] = corpus::random_pair_with_gcd(rng, 5, 0, 9);
    const Polynomial s0 = subresultant(F, G, 0);
    CHECK(s0.degree() == 0);
    CHECK(s0 == Polynomial{determinant(sylvester_matrix(F, G))});
}

TEST_CASE("subresultant chain degrees and the remainder path") {
    const auto e = example_sequence();
    const Polynomial F = e.P, G = derivative(F);
    const SubresChain chain = subresultant_chain(F, G);
    CHECK(chain.entries.size() == 7);
    for (const auto& [j, s] : chain.entries) CHECK(s.degree() <= j);
    const PrsLevel level = prs(F, G, DivisionRule::sturm());
    CHECK(chain.entries.at(6) == subresultant_factor(level, 3, SubresPosition::AtDegree) * level.element(3));
    CHECK(chain.entries.at(5) == subresultant_factor(level, 4, SubresPosition::AtDegree) * level.element(4));
    for (int j = 0; j < 5; ++j) CHECK(chain.entries.at(j).is_zero());

    corpus::Rng rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const auto [f, g] = corpus::random_pair_with_gcd(rng, 5, 0, 9);
        const PrsLevel lv = prs(f, g, DivisionRule::sturm());
        const Polynomial s3 = subresultant(f, g, 3);
        CHECK(proportional(s3, lv.element(3)));
        CHECK(s3 == subresultant_factor(lv, 3, SubresPosition::BelowPreviousDegree) * lv.element(3));
    }
}

TEST_CASE("Sturm factors are signed products of leading coefficients") {
    const auto e = example_sequence();
    const PrsLevel level = prs(e.P, derivative(e.P), DivisionRule::sturm());
    // i = 3: c_3^0 * (-1)^1 * c_2^2 * (-1)^(2*1)
    CHECK(subresultant_factor(level, 3, SubresPosition::AtDegree) == -64);
    CHECK_THROWS_AS(subresultant_factor(level, 2, SubresPosition::AtDegree), IndexError);
    CHECK_THROWS_AS(subresultant_factor(level, 5, SubresPosition::AtDegree), IndexError);
}

TEST_CASE("fundamental theorem holds for every rule") {
    const auto e = example_sequence();
    for (const char* name : {"sturm", "monic", "primitive", "subresultant"}) {
        const VerificationReport report =
            verify_fundamental_theorem(e.P, derivative(e.P), DivisionRule::from_name(name));
        CHECK(report.passed());
        // j = 6 and j = 5 are each checked as n_i and as n_{i-1} - 1
        CHECK(report.checks.size() == 9);
    }
    corpus::Rng rng(44);
    const auto [F, G] = corpus::random_pair_with_gcd(rng, 3, 0, 9);
    const VerificationReport coprime = verify_fundamental_theorem(F, G, DivisionRule::sturm());
    CHECK(coprime.passed());
    for (const auto& c : coprime.checks) CHECK(c.claim != "zero below last degree");

    const auto [F2, G2] = corpus::random_pair_with_gcd(rng, 6, 2, 9);
    const VerificationReport shared = verify_fundamental_theorem(F2, G2, DivisionRule::primitive());
    CHECK(shared.passed());
    int zeros = 0;
    for (const auto& c : shared.checks)
        if (c.claim == "zero below last degree") {
            CHECK(c.lhs.is_zero());
            ++zeros;
        }
    CHECK(zeros == 2);
}

TEST_CASE("abnormal sequences") {
    const Polynomial F = poly("x^6 + x^3 + 1"), G = poly("x^5 + 2");
    for (const char* name : {"sturm", "monic", "primitive", "subresultant"}) {
        const PrsLevel level = prs(F, G, DivisionRule::from_name(name));
        bool gap = false;
        for (int i = 1; i < level.length(); ++i) gap = gap || level.d(i) > 1;
        CHECK(gap);
        CHECK(verify_fundamental_theorem(F, G, DivisionRule::from_name(name)).passed());
    }
}
