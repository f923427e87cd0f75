#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "recprs/errors.hpp"
#include "recprs/parser.hpp"
#include "recprs/prs.hpp"
#include "recprs/rec_subres.hpp"
#include "recprs/report.hpp"
#include "recprs/root_count.hpp"
#include "recprs/subres.hpp"

namespace py = pybind11;
using namespace recprs;

namespace {

// Polynomials cross the boundary as low-degree-first lists of "num/den"
// strings; the Python package converts them to and from Fraction.
using Coeffs = std::vector<std::string>;

std::vector<Rational> to_rationals(const Coeffs& c) {
    std::vector<Rational> out;
    out.reserve(c.size());
    for (const auto& s : c) out.push_back(parse_rational(s));
    return out;
}

Polynomial to_poly(const Coeffs& c) { return Polynomial(to_rationals(c)); }

Coeffs from_poly(const Polynomial& p) {
    Coeffs out;
    for (const auto& c : p.coeffs()) out.push_back(to_exact_string(c));
    return out;
}

std::vector<Coeffs> from_matrix(const ExactMatrix& m) {
    std::vector<Coeffs> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Coeffs row;
        for (const auto& v : m.row(r)) row.push_back(to_exact_string(v));
        rows.push_back(std::move(row));
    }
    return rows;
}

RecSubresContext context(const Coeffs& F, const Coeffs& G, const std::string& rule) {
    return RecSubresContext(rprs(to_poly(F), to_poly(G), DivisionRule::from_name(rule)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact recursive polynomial remainder sequences and subresultants";

    auto& base = py::register_exception<Error>(m, "RecprsError", PyExc_ValueError);
    py::register_exception<SyntaxError>(m, "ParseError", base.ptr());

    m.def("parse_polynomial", [](const std::string& text) { return from_poly(parse_polynomial(text)); });
    m.def("to_string", [](const Coeffs& p) { return to_string(to_poly(p)); });
    m.def("derivative", [](const Coeffs& p) { return from_poly(derivative(to_poly(p))); });
    m.def("prs", [](const Coeffs& F, const Coeffs& G, const std::string& rule) {
        return json::prs_level(prs(to_poly(F), to_poly(G), DivisionRule::from_name(rule))).dump();
    });
    m.def("rprs", [](const Coeffs& F, const Coeffs& G, const std::string& rule) {
        return json::recursive_prs(rprs(to_poly(F), to_poly(G), DivisionRule::from_name(rule))).dump();
    });
    m.def("count_real_roots", [](const Coeffs& P) {
        const RootCount rc = count_real_roots_with_multiplicity(to_poly(P));
        return py::make_tuple(rc.total, rc.per_level);
    });
    m.def("subresultant",
          [](const Coeffs& F, const Coeffs& G, int j) { return from_poly(subresultant(to_poly(F), to_poly(G), j)); });
    m.def("subres_matrix",
          [](const Coeffs& F, const Coeffs& G, int j) { return from_matrix(subres_matrix(to_poly(F), to_poly(G), j)); });
    m.def("rec_subresultant", [](const Coeffs& F, const Coeffs& G, int k, int j, const std::string& rule) {
        return from_poly(context(F, G, rule).rec_subresultant(k, j));
    });
    m.def("rec_subres_matrix", [](const Coeffs& F, const Coeffs& G, int k, int j, const std::string& rule) {
        return from_matrix(context(F, G, rule).matrix(k, j).matrix);
    });
    m.def("similarity_factors", [](const Coeffs& F, const Coeffs& G, int k, int j, const std::string& rule) {
        return json::similarity_factors(context(F, G, rule).similarity_factors(k, j)).dump();
    });
    m.def("verify_fundamental", [](const Coeffs& F, const Coeffs& G, const std::string& rule) {
        return json::verification(verify_fundamental_theorem(to_poly(F), to_poly(G), DivisionRule::from_name(rule)))
            .dump();
    });
    m.def("verify_similarity_all", [](const Coeffs& F, const Coeffs& G, const std::string& rule) {
        return json::verification(context(F, G, rule).verify_similarity_all()).dump();
    });
    m.def("verify_recursive_fundamental", [](const Coeffs& F, const Coeffs& G, int k, const std::string& rule) {
        return json::verification(context(F, G, rule).verify_recursive_fundamental(k)).dump();
    });
    m.def("determinant", [](const std::vector<Coeffs>& rows) {
        std::vector<std::vector<Rational>> values;
        for (const auto& r : rows) values.push_back(to_rationals(r));
        return to_exact_string(determinant(ExactMatrix::from_rows(values)));
    });
}
