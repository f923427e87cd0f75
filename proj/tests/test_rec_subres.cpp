#include <doctest.h>

#include <thread>

#include "recprs/errors.hpp"
#include "recprs/rec_subres.hpp"
#include "recprs/subres.hpp"
#include "support.hpp"

using namespace recprs;
using namespace recprs::testing;

namespace {

RecSubresContext example_context() { return RecSubresContext(recursive_sturm(example_sequence().P)); }

bool is_zero_block(const ExactMatrix& m, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
    for (std::size_t r = r0; r < r0 + rows; ++r)
        for (std::size_t c = c0; c < c0 + cols; ++c)
            if (m(r, c) != 0) return false;
    return true;
}

bool block_equals(const ExactMatrix& m, std::size_t r0, std::size_t c0, const ExactMatrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (m(r0 + r, c0 + c) != b(r, c)) return false;
    return true;
}

}  // namespace

TEST_CASE("level one is the classical subresultant matrix") {
    const auto ctx = example_context();
    const auto e = example_sequence();
    for (int j : ctx.valid_js(1)) {
        CHECK(ctx.matrix(1, j).matrix == subres_matrix(e.P, derivative(e.P), j));
        CHECK(ctx.rec_subresultant(1, j) == subresultant(e.P, derivative(e.P), j));
        CHECK(ctx.similarity_factors(1, j).R == 1);
        CHECK(ctx.similarity_factors(1, j).u == 15 - 2 * j);
    }
    CHECK(ctx.valid_js(1) == std::vector<int>{6, 5, 4, 3, 2, 1, 0});
}

TEST_CASE("M^(1,5) blocks") {
    const auto ctx = example_context();
    const auto e = example_sequence();
    const Polynomial F = e.P, G = derivative(F);
    const RecSubresMatrix m = ctx.matrix(2, 3);
    const ExactMatrix& U = m.upper_block;
    const ExactMatrix& L = m.lower_block;
    const ExactMatrix& Ls = m.scaled_lower;
    REQUIRE(U.rows() == 4);
    REQUIRE(L.rows() == 6);
    REQUIRE(Ls.rows() == 5);
    CHECK(U.cols() == 5);
    CHECK(top_rows(ctx.matrix(1, 5).matrix, 4) == U);
    CHECK(bottom_rows(ctx.matrix(1, 5).matrix, 6) == L);
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c) CHECK(Ls(r, c) == Rational(static_cast<long>(5 - r)) * L(r, c));
    CHECK(Ls(0, 0) == 5 * F.coeff(4));
    CHECK(Ls(3, 2) == 2 * G.coeff(0));
    CHECK(Ls(4, 2) == 0);
}

TEST_CASE("M^(2,3) layout") {
    const auto ctx = example_context();
    const RecSubresMatrix m = ctx.matrix(2, 3);
    const ExactMatrix& M = m.matrix;
    REQUIRE(M.rows() == 18);
    REQUIRE(M.cols() == 15);
    for (std::size_t b = 0; b < 3; ++b) {
        CHECK(block_equals(M, 4 * b, 5 * b, m.upper_block));
        for (std::size_t c = 0; c < 3; ++c)
            if (c != b) CHECK(is_zero_block(M, 4 * b, 5 * c, 4, 5));
    }
    // lower container starts at row 12: one M_L, then two M_L' copies
    CHECK(block_equals(M, 12, 0, m.lower_block));
    CHECK(block_equals(M, 12, 5, m.scaled_lower));
    CHECK(is_zero_block(M, 17, 5, 1, 5));
    CHECK(is_zero_block(M, 12, 10, 1, 5));
    CHECK(block_equals(M, 13, 10, m.scaled_lower));
}

TEST_CASE("dimensions") {
    const std::vector<int> js{8, 5, 2, 0};
    CHECK(rec_subres_dims(8, 7, js, 1, 5) == MatrixDims{10, 5});
    CHECK(rec_subres_dims(8, 7, js, 2, 3) == MatrixDims{18, 15});
    CHECK(rec_subres_dims(8, 7, js, 3, 0) == MatrixDims{75, 75});
    CHECK_THROWS_AS(rec_subres_dims(8, 7, js, 2, 4), RangeError);
    CHECK_THROWS_AS(rec_subres_dims(8, 7, js, 1, 7), RangeError);
    CHECK_THROWS_AS(rec_subres_dims(8, 7, js, 4, 0), RangeError);
    CHECK_THROWS_AS(rec_subres_dims(8, 7, js, 1, -1), RangeError);

    const auto ctx = example_context();
    for (int k = 1; k <= 3; ++k)
        for (int j : ctx.valid_js(k)) {
            const ExactMatrix& M = ctx.matrix(k, j).matrix;
            const MatrixDims d = rec_subres_dims(8, 7, js, k, j);
            CHECK(M.rows() == d.rows);
            CHECK(M.cols() == d.cols);
            CHECK(M.rows() - M.cols() == static_cast<std::size_t>(j));
        }
    CHECK_THROWS_AS(ctx.matrix(2, 4), RangeError);
    CHECK_THROWS_AS(ctx.matrix(0, 0), RangeError);
}

TEST_CASE("similarity factors of the example") {
    const auto ctx = example_context();
    const SimilarityFactors f = ctx.similarity_factors(2, 3);
    const Rational a27 = 8, a36 = make_rational(75, 16), a24 = make_rational(128, 5);
    CHECK(ctx.similarity_factors(2, 0).B == ctx.similarity_factors(2, 2).B);
    CHECK(f.b == 3);
    CHECK(f.u == 15);
    CHECK(f.r == 1);
    const Rational B1 = -(a27 * a27) * (a36 * a36);
    CHECK(B1 == make_rational(-5625, 4));
    CHECK(f.R == B1 * B1 * B1 * f.r);

    const auto e = example_sequence();
    const Polynomial rhs = pow(a27 * a27 * a36 * a36, 3) * (a24 * a24) * e.levels[1][2];
    CHECK(ctx.rec_subresultant(2, 3) == rhs);
}

TEST_CASE("similarity and recursive fundamental theorem on the example") {
    const auto ctx = example_context();
    CHECK(ctx.verify_similarity(2, 3).passed());
    const VerificationReport all = ctx.verify_similarity_all();
    CHECK(all.passed());
    CHECK(all.checks.size() == 12);
    for (int k = 1; k <= 3; ++k) CHECK(ctx.verify_recursive_fundamental(k).passed());
    for (int k = 1; k <= 3; ++k)
        for (int j : ctx.valid_js(k)) CHECK(ctx.rec_subresultant(k, j).degree() <= j);
}

TEST_CASE("gap clause") {
    // level 1 drops from degree 7 to 4
    const RecSubresContext ctx(recursive_sturm(poly("(x^4+1)^2*(x-3)")));
    bool saw_gap = false;
    for (int k = 1; k <= ctx.rprs().t(); ++k) {
        const PrsLevel& lv = ctx.rprs().level(k);
        for (int i = 3; i <= lv.length(); ++i)
            for (int j = lv.n(i) + 1; j < lv.n(i - 1) - 1; ++j) {
                CHECK(ctx.rec_subresultant(k, j).is_zero());
                saw_gap = true;
            }
        CHECK(ctx.verify_recursive_fundamental(k).passed());
    }
    CHECK(ctx.verify_similarity_all().passed());
    CHECK(saw_gap);
}

TEST_CASE("randomized A^2 B inputs") {
    corpus::Rng rng(51);
    for (int trial = 0; trial < 6; ++trial) {
        const Polynomial A = corpus::random_squarefree(rng, 2, 6);
        const Polynomial B = corpus::random_squarefree(rng, 3, 6);
        if (gcd_via_prs(B, A).degree() > 0) continue;
        const RecSubresContext ctx(recursive_sturm(A * A * B));
        CHECK(ctx.verify_similarity_all().passed());
        for (int k = 1; k <= ctx.rprs().t(); ++k) CHECK(ctx.verify_recursive_fundamental(k).passed());
    }
}

TEST_CASE("other division rules") {
    const Polynomial P = poly("(x-1)^3*(x+2)^2*(x^2+1)");
    for (const char* name : {"monic", "primitive", "subresultant"}) {
        const RecSubresContext ctx(rprs(P, derivative(P), DivisionRule::from_name(name)));
        CHECK(ctx.verify_similarity_all().passed());
        for (int k = 1; k <= ctx.rprs().t(); ++k) CHECK(ctx.verify_recursive_fundamental(k).passed());
    }
}

TEST_CASE("shared context across threads") {
    const auto ctx = example_context();
    std::vector<Polynomial> results(6);
    std::vector<std::thread> workers;
    for (int w = 0; w < 6; ++w)
        workers.emplace_back([&, w] { results[static_cast<std::size_t>(w)] = ctx.rec_subresultant(2, w % 3); });
    for (auto& t : workers) t.join();
    for (std::size_t w = 0; w < results.size(); ++w) CHECK(results[w] == results[w % 3]);
    CHECK(dimension_audit().mismatched == 0);
    CHECK(dimension_audit().built > 0);
}

TEST_CASE("free functions") {
    const RecursivePRS rp = recursive_sturm(example_sequence().P);
    CHECK(rec_subres_matrix(rp, 2, 3).matrix.cols() == 15);
    CHECK(rec_subresultant(rp, 2, 2) == RecSubresContext(rp).rec_subresultant(2, 2));
    CHECK(similarity_factors(rp, 2, 3).b == 3);
    CHECK(verify_similarity(rp, 3, 0).passed());
    CHECK(verify_recursive_fundamental(rp, 2).passed());
}
