#include "recprs/corpus.hpp"

#include <algorithm>

#include "recprs/prs.hpp"

namespace recprs::corpus {

long draw(Rng& rng, long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng() % span);
}

Polynomial random_polynomial(Rng& rng, int degree, long bound) {
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = draw(rng, -bound, bound);
    while (c.back() == 0) c.back() = draw(rng, -bound, bound);
    return Polynomial(std::move(c));
}

namespace {

bool coprime(const Polynomial& a, const Polynomial& b) {
    if (a.degree() == b.degree()) return gcd_via_prs(a * Polynomial::x(), b).degree() == 0 && eval(b, 0) != 0;
    return a.degree() > b.degree() ? gcd_via_prs(a, b).degree() == 0 : gcd_via_prs(b, a).degree() == 0;
}

}  // namespace

Polynomial random_squarefree(Rng& rng, int degree, long bound) {
    while (true) {
        Polynomial p = random_polynomial(rng, degree, bound);
        if (degree <= 1 || gcd_via_prs(p, derivative(p)).degree() == 0) return p;
    }
}

std::pair<Polynomial, Polynomial> random_pair_with_gcd(Rng& rng, int deg_f, int gcd_degree, long bound) {
    while (true) {
        Polynomial h = gcd_degree > 0 ? random_polynomial(rng, gcd_degree, bound) : Polynomial::constant(1);
        Polynomial a = random_polynomial(rng, deg_f - gcd_degree, bound);
        Polynomial b = random_polynomial(rng, deg_f - 1 - gcd_degree, bound);
        if (b.degree() > 0 && !coprime(a, b)) continue;
        return {h * a, h * b};
    }
}

MultiplicityCase random_multiplicity_case(Rng& rng, int max_degree, long bound) {
    while (true) {
        MultiplicityCase c;
        c.a = static_cast<int>(draw(rng, 2, 3));
        c.b = static_cast<int>(draw(rng, 2, 3));
        const int deg_a_max = std::max(1, (max_degree - c.b) / c.a);
        const int deg_a = static_cast<int>(draw(rng, 1, deg_a_max));
        const int remaining = max_degree - c.a * deg_a;
        if (remaining < c.b) continue;
        const int deg_b = static_cast<int>(draw(rng, 1, remaining / c.b));
        c.A = random_squarefree(rng, deg_a, bound);
        c.B = random_squarefree(rng, deg_b, bound);
        if (!coprime(c.A, c.B)) continue;
        c.P = pow(c.A, static_cast<unsigned>(c.a)) * pow(c.B, static_cast<unsigned>(c.b));
        return c;
    }
}

RootProductCase random_root_product(Rng& rng, int max_distinct_roots, int max_multiplicity, int max_quadratics) {
    RootProductCase c;
    const int roots = static_cast<int>(draw(rng, 0, max_distinct_roots));
    const int quads = static_cast<int>(draw(rng, roots == 0 ? 1 : 0, max_quadratics));
    Polynomial P = Polynomial::constant(draw(rng, 1, 5) * (draw(rng, 0, 1) ? 1 : -1));
    while (static_cast<int>(c.real_roots.size()) < roots) {
        Rational r = make_rational(draw(rng, -9, 9), draw(rng, 1, 4));
        if (std::any_of(c.real_roots.begin(), c.real_roots.end(), [&](const auto& e) { return e.first == r; }))
            continue;
        const int mult = static_cast<int>(draw(rng, 1, max_multiplicity));
        c.real_roots.emplace_back(r, mult);
        c.expected_total += mult;
        P *= pow(Polynomial{-r, 1}, static_cast<unsigned>(mult));
    }
    for (int q = 0; q < quads; ++q) {
        Rational off = make_rational(draw(rng, 1, 9), draw(rng, 1, 3));
        c.square_offsets.push_back(off);
        P *= Polynomial{off, 0, 1};
    }
    c.P = std::move(P);
    return c;
}

}  // namespace recprs::corpus
