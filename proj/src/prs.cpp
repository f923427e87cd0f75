#include "recprs/prs.hpp"

#include <string>

#include "recprs/errors.hpp"

namespace recprs {

DivisionRule DivisionRule::explicit_pairs(std::vector<std::pair<Rational, Rational>> pairs) {
    for (const auto& [a, b] : pairs) {
        if (a == 0 || b == 0) throw InvalidRule("explicit division rule contains a zero scalar");
    }
    DivisionRule rule(Kind::Explicit);
    rule.pairs_ = std::move(pairs);
    return rule;
}

DivisionRule DivisionRule::from_name(std::string_view name) {
    if (name == "sturm") return sturm();
    if (name == "monic") return monic();
    if (name == "primitive") return primitive();
    if (name == "subresultant") return subresultant();
    throw InvalidRule("unknown division rule '" + std::string(name) + "'");
}

std::string_view DivisionRule::name() const {
    switch (kind_) {
        case Kind::Sturm: return "sturm";
        case Kind::MonicEuclid: return "monic";
        case Kind::Primitive: return "primitive";
        case Kind::SubresultantPrs: return "subresultant";
        case Kind::Explicit: return "explicit";
    }
    return "unknown";
}

namespace {

// Per-sequence state of the scalar selection. Explicit rules consume pairs
// across all levels of a recursive PRS, hence the shared cursor.
class RuleCursor {
   public:
    explicit RuleCursor(const DivisionRule& rule) : rule_(rule) {}

    void start_level() { psi_ = -1; }

    // alpha for the step producing P_i, before the remainder is known.
    Rational alpha(const PrsLevel& level, int i) const {
        switch (rule_.kind()) {
            case DivisionRule::Kind::SubresultantPrs: {
                const int delta = level.n(i - 2) - level.n(i - 1);
                return pow(level.c(i - 1), delta + 1);
            }
            case DivisionRule::Kind::Explicit:
                if (next_pair_ >= rule_.pairs().size())
                    throw InvalidRule("explicit division rule is shorter than the PRS");
                return rule_.pairs()[next_pair_].first;
            default:
                return 1;
        }
    }

    // beta for the step producing P_i given the unscaled remainder alpha*P_{i-2} mod P_{i-1}.
    Rational beta(const PrsLevel& level, int i, const Polynomial& remainder) {
        switch (rule_.kind()) {
            case DivisionRule::Kind::Sturm:
                return -1;
            case DivisionRule::Kind::MonicEuclid:
                return remainder.leading_coeff();
            case DivisionRule::Kind::Primitive:
                return content_primitive(remainder).content;
            case DivisionRule::Kind::SubresultantPrs: {
                // Collins / Brown-Traub: beta_3 = (-1)^(d_1+1), then
                // psi_i = (-c_{i-2})^{d_{i-3}} / psi_{i-1}^{d_{i-3}-1}, beta_i = -c_{i-2} psi_i^{d_{i-2}}.
                const int d_prev = level.n(i - 2) - level.n(i - 1);
                if (i == 3) return (d_prev % 2 == 0) ? Rational(-1) : Rational(1);
                const int d_prev2 = level.n(i - 3) - level.n(i - 2);
                psi_ = pow(Rational(-level.c(i - 2)), d_prev2) / pow(psi_, d_prev2 - 1);
                return -level.c(i - 2) * pow(psi_, d_prev);
            }
            case DivisionRule::Kind::Explicit:
                return rule_.pairs()[next_pair_++].second;
        }
        throw InvalidRule("unhandled division rule");
    }

   private:
    const DivisionRule& rule_;
    std::size_t next_pair_ = 0;
    Rational psi_ = -1;
};

void push_element(PrsLevel& level, Polynomial p) {
    level.degrees.push_back(p.degree());
    level.leading_coeffs.push_back(p.leading_coeff());
    if (!level.elements.empty()) level.degree_gaps.push_back(level.degrees.rbegin()[1] - p.degree());
    level.elements.push_back(std::move(p));
}

PrsLevel prs_with_cursor(const Polynomial& F, const Polynomial& G, RuleCursor& cursor) {
    if (F.is_zero() || G.is_zero()) throw ZeroPolynomial("PRS inputs must be nonzero");
    if (F.degree() <= G.degree()) throw DegreeOrder("PRS needs deg(F) > deg(G)");

    PrsLevel level;
    push_element(level, F);
    push_element(level, G);
    cursor.start_level();

    for (int i = 3;; ++i) {
        const Polynomial& prev = level.element(i - 2);
        const Polynomial& cur = level.element(i - 1);
        if (divmod(prev, cur).second.is_zero()) break;

        Rational alpha = cursor.alpha(level, i);
        auto [q, raw] = divmod(prev * alpha, cur);
        Rational beta = cursor.beta(level, i, raw);
        if (alpha == 0 || beta == 0) throw InvalidRule("division rule produced a zero scalar");

        level.alphas.push_back(alpha);
        level.betas.push_back(beta);
        level.quotients.push_back(std::move(q));
        push_element(level, std::move(raw) / beta);
    }
    return level;
}

}  // namespace

PrsLevel prs(const Polynomial& F, const Polynomial& G, const DivisionRule& rule) {
    RuleCursor cursor(rule);
    return prs_with_cursor(F, G, cursor);
}

Polynomial gcd_via_prs(const Polynomial& F, const Polynomial& G) {
    return content_primitive(prs(F, G, DivisionRule::primitive()).last()).primitive;
}

RecursivePRS rprs(const Polynomial& F, const Polynomial& G, const DivisionRule& rule) {
    RuleCursor cursor(rule);
    RecursivePRS out;
    out.j_values.push_back(F.degree());

    Polynomial first = F;
    Polynomial second = G;
    while (true) {
        PrsLevel level = prs_with_cursor(first, second, cursor);
        const Polynomial& last = level.last();
        Polynomial g = gcd_via_prs(first, second);
        out.gammas.push_back(last.leading_coeff() / g.leading_coeff());
        out.j_values.push_back(last.degree());
        out.levels.push_back(std::move(level));
        if (last.is_constant()) break;
        first = last;
        second = derivative(first);
    }
    out.complete = out.j_values.back() == 0;
    return out;
}

RecursivePRS recursive_sturm(const Polynomial& P) {
    if (P.degree() < 1) throw ConstantInput("recursive Sturm sequence needs deg(P) >= 1");
    return rprs(P, derivative(P), DivisionRule::sturm());
}

}  // namespace recprs
