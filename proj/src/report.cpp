#include "recprs/report.hpp"

#include <stdexcept>

namespace recprs::json {

Json rational(const Rational& r) { return to_exact_string(r); }

Json polynomial(const Polynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(rational(c));
    return out;
}

Json matrix(const ExactMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (const auto& v : m.row(r)) row.push_back(rational(v));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

template <class T, class F>
Json array_of(const std::vector<T>& xs, F&& f) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(f(x));
    return out;
}

}  // namespace

Json prs_level(const PrsLevel& level) {
    Json out;
    out["elements"] = array_of(level.elements, polynomial);
    out["alphas"] = array_of(level.alphas, rational);
    out["betas"] = array_of(level.betas, rational);
    out["quotients"] = array_of(level.quotients, polynomial);
    out["degrees"] = level.degrees;
    out["leading_coeffs"] = array_of(level.leading_coeffs, rational);
    out["degree_gaps"] = level.degree_gaps;
    return out;
}

Json recursive_prs(const RecursivePRS& rp) {
    Json out;
    out["t"] = rp.t();
    out["complete"] = rp.complete;
    out["j_values"] = rp.j_values;
    out["gammas"] = array_of(rp.gammas, rational);
    out["levels"] = array_of(rp.levels, prs_level);
    return out;
}

Json similarity_factors(const SimilarityFactors& f) {
    Json out;
    out["u"] = f.u;
    out["B"] = rational(f.B);
    out["b"] = f.b;
    out["r"] = rational(f.r);
    out["R"] = rational(f.R);
    return out;
}

Json root_count(const RootCount& rc) {
    Json out;
    out["total"] = rc.total;
    out["per_level"] = rc.per_level;
    return out;
}

Json verification(const VerificationReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json item;
        item["claim"] = c.claim;
        item["k"] = c.k;
        item["j"] = c.j;
        item["lhs"] = polynomial(c.lhs);
        item["rhs"] = polynomial(c.rhs);
        item["factor"] = c.factor ? rational(*c.factor) : Json(nullptr);
        item["pass"] = c.pass;
        checks.push_back(std::move(item));
    }
    Json out;
    out["subject"] = report.subject;
    out["pass"] = report.passed();
    out["checks"] = std::move(checks);
    return out;
}

Polynomial polynomial_from(const Json& coeffs) {
    if (!coeffs.is_array()) throw std::invalid_argument("polynomial JSON must be an array of rational strings");
    std::vector<Rational> out;
    for (const auto& c : coeffs) {
        if (c.is_string()) {
            out.push_back(parse_rational(c.get<std::string>()));
        } else if (c.is_number_integer()) {
            out.push_back(Rational(Integer(std::to_string(c.get<long long>()))));
        } else {
            throw std::invalid_argument("polynomial coefficients must be rational strings");
        }
    }
    return Polynomial(std::move(out));
}

}  // namespace recprs::json
