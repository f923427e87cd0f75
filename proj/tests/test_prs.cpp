#include <doctest.h>

#include "recprs/errors.hpp"
#include "recprs/prs.hpp"
#include "support.hpp"

using namespace recprs;
using namespace recprs::testing;

namespace {

void check_step_identities(const PrsLevel& level) {
    for (int i = 3; i <= level.length(); ++i) {
        CHECK(level.alpha(i) != 0);
        CHECK(level.beta(i) != 0);
        CHECK((level.alpha(i) * level.element(i - 2) - level.quotient(i) * level.element(i - 1) -
               level.beta(i) * level.element(i))
                  .is_zero());
    }
    for (int i = 2; i <= level.length(); ++i) CHECK(level.n(i) < level.n(i - 1));
}

}  // namespace

TEST_CASE("Sturm PRS of the example") {
    const auto e = example_sequence();
    const PrsLevel level = prs(e.P, derivative(e.P), DivisionRule::sturm());
    REQUIRE(level.length() == 4);
    CHECK(level.last() == e.levels[0][3]);
    check_step_identities(level);
    for (int i = 3; i <= 4; ++i) {
        CHECK(level.element(i) == -divmod(level.element(i - 2), level.element(i - 1)).second);
        CHECK(level.alpha(i) == 1);
        CHECK(level.beta(i) == -1);
    }
    CHECK(level.d(1) == 1);
    CHECK(level.c(3) == make_rational(75, 16));
}

TEST_CASE("prs on exact division stops at the gcd") {
    const PrsLevel level = prs(poly("x^2-1"), poly("x-1"), DivisionRule::sturm());
    CHECK(level.length() == 2);
    CHECK(level.last() == poly("x-1"));
}

TEST_CASE("division rules agree up to scale") {
    corpus::Rng rng(21);
    for (int trial = 0; trial < 15; ++trial) {
        const auto [F, G] = corpus::random_pair_with_gcd(rng, 6, 0, 9);
        const PrsLevel sturm = prs(F, G, DivisionRule::sturm());
        check_step_identities(sturm);
        for (auto rule : {DivisionRule::monic(), DivisionRule::primitive(), DivisionRule::subresultant()}) {
            const PrsLevel other = prs(F, G, rule);
            check_step_identities(other);
            REQUIRE(other.length() == sturm.length());
            for (int i = 1; i <= sturm.length(); ++i) CHECK(proportional(other.element(i), sturm.element(i)));
        }
        const PrsLevel monic = prs(F, G, DivisionRule::monic());
        for (int i = 3; i <= monic.length(); ++i) CHECK(monic.c(i) == 1);
        const PrsLevel prim = prs(F, G, DivisionRule::primitive());
        for (int i = 3; i <= prim.length(); ++i) CHECK(content_primitive(prim.element(i)).primitive == prim.element(i));
    }
}

TEST_CASE("subresultant rule keeps integer coefficients") {
    corpus::Rng rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        const auto [F, G] = corpus::random_pair_with_gcd(rng, 7, static_cast<int>(trial % 3), 9);
        const PrsLevel level = prs(F, G, DivisionRule::subresultant());
        for (const auto& p : level.elements)
            for (const auto& c : p.coeffs()) CHECK(c.get_den() == 1);
    }
}

TEST_CASE("explicit rule") {
    const Polynomial F = poly("x^4 + x + 1"), G = poly("x^3 - 2");
    const PrsLevel sturm = prs(F, G, DivisionRule::sturm());
    std::vector<std::pair<Rational, Rational>> pairs(static_cast<std::size_t>(sturm.length() - 2), {2, 3});
    const PrsLevel level = prs(F, G, DivisionRule::explicit_pairs(pairs));
    check_step_identities(level);
    CHECK(level.alpha(3) == 2);
    CHECK(level.beta(3) == 3);
    pairs.pop_back();
    CHECK_THROWS_AS(prs(F, G, DivisionRule::explicit_pairs(pairs)), InvalidRule);
    CHECK_THROWS_AS(DivisionRule::explicit_pairs({{0, 1}}), InvalidRule);
}

TEST_CASE("prs errors") {
    CHECK_THROWS_AS(prs(poly("x^2"), poly("x^2+1"), DivisionRule::sturm()), DegreeOrder);
    CHECK_THROWS_AS(prs(poly("x"), poly("x^2+1"), DivisionRule::sturm()), DegreeOrder);
    CHECK_THROWS_AS(prs(poly("x^2"), Polynomial{}, DivisionRule::sturm()), ZeroPolynomial);
    CHECK_THROWS_AS(DivisionRule::from_name("euclid"), InvalidRule);
    CHECK(DivisionRule::from_name("primitive").kind() == DivisionRule::Kind::Primitive);
}

TEST_CASE("recursive Sturm sequence of the example") {
    const auto e = example_sequence();
    const RecursivePRS rp = recursive_sturm(e.P);
    REQUIRE(rp.t() == 3);
    CHECK(rp.complete);
    for (int k = 1; k <= 3; ++k) {
        const auto& expected = e.levels[static_cast<std::size_t>(k - 1)];
        REQUIRE(rp.level(k).length() == static_cast<int>(expected.size()));
        for (std::size_t i = 0; i < expected.size(); ++i) CHECK(rp.level(k).elements[i] == expected[i]);
    }
    CHECK(rp.level(3).last() == Polynomial{make_rational(51200, 841)});
    CHECK(rp.j_values == std::vector<int>{8, 5, 2, 0});
    CHECK(rp.gammas[0] == make_rational(128, 25));
}

TEST_CASE("recursive PRS structure") {
    const RecursivePRS sq = rprs(poly("x^2-2"), poly("2*x"), DivisionRule::sturm());
    REQUIRE(sq.t() == 1);
    CHECK(sq.level(1).elements == std::vector<Polynomial>{poly("x^2-2"), poly("2*x"), poly("2")});

    const RecursivePRS lin = recursive_sturm(poly("x"));
    CHECK(lin.t() == 1);
    CHECK(lin.level(1).elements == std::vector<Polynomial>{poly("x"), poly("1")});

    const RecursivePRS dbl = recursive_sturm(poly("(x-1)^2"));
    REQUIRE(dbl.t() == 2);
    CHECK(dbl.level(1).length() == 2);
    CHECK(proportional(dbl.level(1).last(), poly("x-1")));
    CHECK(dbl.level(2).last().is_constant());

    CHECK_THROWS_AS(recursive_sturm(poly("5")), ConstantInput);

    corpus::Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const Polynomial P = corpus::random_multiplicity_case(rng, 10, 5).P;
        for (auto rule : {DivisionRule::sturm(), DivisionRule::monic(), DivisionRule::primitive(),
                          DivisionRule::subresultant()}) {
            const RecursivePRS rp = rprs(P, derivative(P), rule);
            CHECK(rp.complete);
            CHECK(rp.level(rp.t()).last().degree() == 0);
            for (int k = 1; k <= rp.t(); ++k) {
                check_step_identities(rp.level(k));
                CHECK(rp.j(k) < rp.j(k - 1));
                if (k < rp.t()) CHECK(rp.level(k).last().degree() > 0);
                if (k >= 2) {
                    CHECK(rp.level(k).element(1) == rp.level(k - 1).last());
                    CHECK(rp.level(k).element(2) == derivative(rp.level(k).element(1)));
                }
                const Polynomial g = gcd_via_prs(rp.level(k).element(1), rp.level(k).element(2));
                CHECK(rp.level(k).last() == rp.gammas[static_cast<std::size_t>(k - 1)] * g);
            }
        }
    }
}

TEST_CASE("gcd_via_prs") {
    const auto e = example_sequence();
    CHECK(gcd_via_prs(e.P, derivative(e.P)) == poly("x^5-2*x^4-10*x^3+8*x^2+33*x+18"));
    CHECK(gcd_via_prs(poly("(x-1)*(x-2)"), poly("x-1")) == poly("x-1"));
    CHECK(gcd_via_prs(poly("(x-1)*(x-2)*(x+4)"), poly("(x-1)*(x-3)")) == poly("x-1"));

    corpus::Rng rng(24);
    for (int trial = 0; trial < 20; ++trial) {
        const auto [A, B] = corpus::random_pair_with_gcd(rng, 5, 0, 9);
        const Polynomial H = content_primitive(corpus::random_polynomial(rng, 2, 9)).primitive;
        CHECK(gcd_via_prs(A * H, B * H) == H);
    }
}
