#include "recprs/subres.hpp"

#include <string>

#include "recprs/errors.hpp"

namespace recprs {

namespace {

void require_shape(const Polynomial& F, const Polynomial& G) {
    if (G.is_zero() || G.degree() < 1) throw DegreeOrder("subresultants need deg(G) >= 1");
    if (F.degree() < G.degree()) throw DegreeOrder("subresultants need deg(F) >= deg(G)");
}

// n-j columns of F then m-j columns of G, each shifted down one row per column.
ExactMatrix shifted_columns(const Polynomial& F, const Polynomial& G, int j) {
    const int m = F.degree();
    const int n = G.degree();
    const auto f_cols = static_cast<std::size_t>(n - j);
    const auto g_cols = static_cast<std::size_t>(m - j);
    ExactMatrix out(static_cast<std::size_t>(m + n - j), f_cols + g_cols);
    for (std::size_t c = 0; c < f_cols; ++c)
        for (int e = 0; e <= m; ++e) out(c + static_cast<std::size_t>(m - e), c) = F.coeff(e);
    for (std::size_t c = 0; c < g_cols; ++c)
        for (int e = 0; e <= n; ++e) out(c + static_cast<std::size_t>(n - e), f_cols + c) = G.coeff(e);
    return out;
}

// (-1)^e for possibly negative e.
Rational sign_power(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

ExactMatrix sylvester_matrix(const Polynomial& F, const Polynomial& G) {
    require_shape(F, G);
    return shifted_columns(F, G, 0);
}

ExactMatrix subres_matrix(const Polynomial& F, const Polynomial& G, int j) {
    require_shape(F, G);
    if (j < 0 || j >= G.degree())
        throw IndexError("subresultant index j=" + std::to_string(j) + " outside [0, " +
                         std::to_string(G.degree() - 1) + "]");
    return shifted_columns(F, G, j);
}

ExactMatrix subres_matrix_extended(const Polynomial& F, const Polynomial& G, int j) {
    require_shape(F, G);
    if (j < 0 || j > G.degree() || (j == G.degree() && F.degree() == G.degree()))
        throw IndexError("subresultant index j=" + std::to_string(j) + " outside the extended range");
    return shifted_columns(F, G, j);
}

Polynomial polynomial_from_minors(const ExactMatrix& m) {
    if (m.rows() < m.cols() || m.cols() == 0) throw IndexError("minor polynomial needs rows >= cols > 0");
    const std::size_t c = m.cols();
    const std::size_t j = m.rows() - c;
    std::vector<std::size_t> rows(c);
    for (std::size_t r = 0; r + 1 < c; ++r) rows[r] = r;
    std::vector<Rational> coeffs(j + 1);
    for (std::size_t tau = 0; tau <= j; ++tau) {
        rows.back() = c - 1 + j - tau;
        coeffs[tau] = determinant(select_rows(m, rows));
    }
    return Polynomial(std::move(coeffs));
}

Polynomial subresultant(const Polynomial& F, const Polynomial& G, int j) {
    return polynomial_from_minors(subres_matrix(F, G, j));
}

SubresChain subresultant_chain(const Polynomial& F, const Polynomial& G) {
    require_shape(F, G);
    SubresChain chain{F, G, {}};
    for (int j = 0; j < G.degree(); ++j) chain.entries.emplace(j, subresultant(F, G, j));
    return chain;
}

Rational subresultant_factor_unchecked(const PrsLevel& level, int i, SubresPosition which) {
    // Target degree the factor is evaluated at: n_i, or n_{i-1} - 1.
    const int target = (which == SubresPosition::AtDegree) ? level.n(i) : level.n(i - 1) - 1;
    Rational factor = (which == SubresPosition::AtDegree) ? pow(level.c(i), level.d(i - 1) - 1)
                                                          : pow(level.c(i - 1), 1 - level.d(i - 1));
    for (int l = 3; l <= i; ++l) {
        const long e1 = level.n(l - 1) - target;
        const long e2 = level.n(l - 2) - target;
        factor *= pow(Rational(level.beta(l) / level.alpha(l)), e1);
        factor *= pow(level.c(l - 1), level.d(l - 2) + level.d(l - 1));
        factor *= sign_power(e2 * e1);
    }
    return factor;
}

Rational subresultant_factor(const PrsLevel& level, int i, SubresPosition which) {
    if (i < 3 || i > level.length())
        throw IndexError("PRS element index i=" + std::to_string(i) + " outside [3, " +
                         std::to_string(level.length()) + "]");
    return subresultant_factor_unchecked(level, i, which);
}

VerificationReport verify_fundamental_theorem(const Polynomial& F, const Polynomial& G,
                                              const DivisionRule& rule) {
    const PrsLevel level = prs(F, G, rule);
    const SubresChain chain = subresultant_chain(F, G);
    VerificationReport report;
    report.subject = "fundamental theorem of subresultants (rule " + std::string(rule.name()) + ")";

    auto check_zero = [&](std::string claim, int j) {
        const Polynomial& s = chain.entries.at(j);
        report.checks.push_back({std::move(claim), 1, j, s, Polynomial{}, std::nullopt, s.is_zero()});
    };
    auto check_value = [&](std::string claim, int j, int i, SubresPosition which) {
        const Polynomial& s = chain.entries.at(j);
        Rational factor = subresultant_factor(level, i, which);
        Polynomial rhs = level.element(i) * factor;
        const bool pass = s == rhs;
        report.checks.push_back({std::move(claim), 1, j, s, std::move(rhs), std::move(factor), pass});
    };

    const int k = level.length();
    for (int j = 0; j < level.n(k); ++j) check_zero("zero below last degree", j);
    for (int i = 3; i <= k; ++i) {
        check_value("value at n_" + std::to_string(i), level.n(i), i, SubresPosition::AtDegree);
        for (int j = level.n(i) + 1; j < level.n(i - 1) - 1; ++j)
            check_zero("zero in gap before n_" + std::to_string(i), j);
        check_value("value at n_" + std::to_string(i - 1) + "-1", level.n(i - 1) - 1, i,
                    SubresPosition::BelowPreviousDegree);
    }
    return report;
}

}  // namespace recprs
