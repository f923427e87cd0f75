#include "recprs/rec_subres.hpp"

#include <atomic>
#include <string>

#include "recprs/errors.hpp"
#include "recprs/subres.hpp"

namespace recprs {

namespace {

std::atomic<std::uint64_t> g_built{0};
std::atomic<std::uint64_t> g_mismatched{0};

std::string pair_string(int k, int j) { return "(k,j)=(" + std::to_string(k) + "," + std::to_string(j) + ")"; }

// Column count from the closed-form product; also used for the audit of
// matrices built at the extended index j = j_{k-1} - 1.
long closed_form_cols(int m, int n, std::span<const int> jv, int k, int j) {
    if (k == 1) return m + n - 2L * j;
    long cols = m + n - 2L * jv[1];
    for (int l = 2; l <= k - 1; ++l) cols *= 2L * jv[static_cast<std::size_t>(l - 1)] - 2L * jv[static_cast<std::size_t>(l)] - 1;
    return cols * (2L * jv[static_cast<std::size_t>(k - 1)] - 2L * j - 1);
}

}  // namespace

MatrixDims rec_subres_dims(int m, int n, std::span<const int> j_values, int k, int j) {
    if (k < 1 || static_cast<std::size_t>(k) > j_values.size() || (k >= 2 && j_values.size() < 2))
        throw RangeError("level k=" + std::to_string(k) + " outside the recursive PRS");
    if (j < 0 || j >= j_values[static_cast<std::size_t>(k - 1)] - 1 || (k == 1 && j >= n))
        throw RangeError("index " + pair_string(k, j) + " outside 0 <= j < j_{k-1} - 1");
    const long cols = closed_form_cols(m, n, j_values, k, j);
    return {static_cast<std::size_t>(cols + j), static_cast<std::size_t>(cols)};
}

DimensionAudit dimension_audit() { return {g_built.load(), g_mismatched.load()}; }

RecSubresContext::RecSubresContext(RecursivePRS rp) : rp_(std::move(rp)) {
    if (rp_.levels.empty()) throw RangeError("empty recursive PRS");
}

bool RecSubresContext::valid(int k, int j) const {
    if (k < 1 || k > rp_.t()) return false;
    if (j < 0 || j > rp_.j(k - 1) - 2) return false;
    return k != 1 || j < n();
}

std::vector<int> RecSubresContext::valid_js(int k) const {
    std::vector<int> out;
    if (k < 1 || k > rp_.t()) return out;
    for (int j = rp_.j(k - 1) - 2; j >= 0; --j)
        if (valid(k, j)) out.push_back(j);
    return out;
}

void RecSubresContext::require_valid(int k, int j) const {
    if (!valid(k, j)) throw RangeError("recursive subresultant index " + pair_string(k, j) + " out of range");
}

long RecSubresContext::column_count(int k, int j) const {
    if (k == 1) return m() + n() - 2L * j;
    const int jp = rp_.j(k - 1);
    return column_count(k - 1, jp) * (2L * jp - 2L * j - 1);
}

std::shared_ptr<const RecSubresMatrix> RecSubresContext::build(int k, int j) const {
    const auto key = std::make_pair(k, j);
    {
        std::lock_guard lock(mutex_);
        if (auto it = matrices_.find(key); it != matrices_.end()) return it->second;
    }

    auto out = std::make_shared<RecSubresMatrix>();
    out->k = k;
    out->j = j;
    const PrsLevel& first = rp_.level(1);
    if (k == 1) {
        out->matrix = subres_matrix_extended(first.element(1), first.element(2), j);
    } else {
        const int jp = rp_.j(k - 1);
        const auto prev = build(k - 1, jp);
        const ExactMatrix& pm = prev->matrix;
        const std::size_t c = pm.cols();
        const auto lower_rows = static_cast<std::size_t>(jp) + 1;

        out->upper_block = top_rows(pm, pm.rows() - lower_rows);
        out->lower_block = bottom_rows(pm, lower_rows);
        out->scaled_lower = top_rows(out->lower_block, lower_rows - 1);
        for (std::size_t r = 0; r + 1 < lower_rows; ++r) {
            const unsigned long tau = static_cast<unsigned long>(jp) - r;
            for (std::size_t col = 0; col < c; ++col) out->scaled_lower(r, col) *= tau;
        }

        const auto blocks = static_cast<std::size_t>(2 * jp - 2 * j - 1);
        const auto plain_copies = static_cast<std::size_t>(jp - j - 1);
        const std::size_t upper_h = out->upper_block.rows();
        BlockSpec spec;
        spec.total_cols = blocks * c;
        spec.total_rows = blocks * upper_h + static_cast<std::size_t>(2 * jp - j - 1);
        for (std::size_t s = 0; s < blocks; ++s) spec.placements.push_back({out->upper_block, s * upper_h, s * c});
        // Both staircases start at the top of the lower container and step
        // down one row per column block.
        for (std::size_t s = 0; s < plain_copies; ++s)
            spec.placements.push_back({out->lower_block, blocks * upper_h + s, s * c});
        for (std::size_t s = 0; s <= plain_copies; ++s)
            spec.placements.push_back({out->scaled_lower, blocks * upper_h + s, (plain_copies + s) * c});
        out->matrix = assemble(spec);
    }

    const long cols = closed_form_cols(m(), n(), rp_.j_values, k, j);
    g_built.fetch_add(1);
    if (out->matrix.cols() != static_cast<std::size_t>(cols) ||
        out->matrix.rows() != static_cast<std::size_t>(cols + j))
        g_mismatched.fetch_add(1);

    std::lock_guard lock(mutex_);
    return matrices_.emplace(key, std::move(out)).first->second;
}

RecSubresMatrix RecSubresContext::matrix(int k, int j) const {
    require_valid(k, j);
    return *build(k, j);
}

Polynomial RecSubresContext::rec_subresultant(int k, int j) const {
    require_valid(k, j);
    const auto key = std::make_pair(k, j);
    {
        std::lock_guard lock(mutex_);
        if (auto it = rec_subresultants_.find(key); it != rec_subresultants_.end()) return it->second;
    }
    Polynomial s = polynomial_from_minors(build(k, j)->matrix);
    std::lock_guard lock(mutex_);
    return rec_subresultants_.emplace(key, std::move(s)).first->second;
}

Rational RecSubresContext::trailing_factor(int k) const {
    const PrsLevel& level = rp_.level(k);
    return subresultant_factor_unchecked(level, level.length(), SubresPosition::AtDegree);
}

Rational RecSubresContext::similarity_R(int k, int j) const {
    if (k == 1) return 1;
    const int jp = rp_.j(k - 1);
    const long b = 2L * jp - 2L * j - 1;
    const long u_prev = column_count(k - 1, jp);
    const Rational r = (((u_prev - 1) * (b * (b - 1) / 2)) % 2 == 0) ? Rational(1) : Rational(-1);
    return pow(Rational(similarity_R(k - 1, jp) * trailing_factor(k - 1)), b) * r;
}

SimilarityFactors RecSubresContext::similarity_factors(int k, int j) const {
    require_valid(k, j);
    SimilarityFactors f;
    f.u = column_count(k, j);
    f.B = trailing_factor(k);
    f.b = 2L * rp_.j(k - 1) - 2L * j - 1;
    if (k == 1) {
        f.r = 1;
    } else {
        const long u_prev = column_count(k - 1, rp_.j(k - 1));
        f.r = (((u_prev - 1) * (f.b * (f.b - 1) / 2)) % 2 == 0) ? Rational(1) : Rational(-1);
    }
    f.R = similarity_R(k, j);
    return f;
}

VerificationReport RecSubresContext::verify_similarity(int k, int j) const {
    require_valid(k, j);
    const PrsLevel& level = rp_.level(k);
    Polynomial lhs = rec_subresultant(k, j);
    Rational R = similarity_R(k, j);
    Polynomial rhs = subresultant(level.element(1), level.element(2), j) * R;
    VerificationReport report;
    report.subject = "recursive subresultant similarity " + pair_string(k, j);
    const bool pass = lhs == rhs;
    report.checks.push_back({"rec_subresultant = R * S_j(P1,P2)", k, j, std::move(lhs), std::move(rhs),
                             std::move(R), pass});
    return report;
}

VerificationReport RecSubresContext::verify_similarity_all() const {
    VerificationReport report;
    report.subject = "recursive subresultant similarity, all (k,j)";
    for (int k = 1; k <= rp_.t(); ++k)
        for (int j : valid_js(k)) report.append(verify_similarity(k, j));
    return report;
}

VerificationReport RecSubresContext::verify_recursive_fundamental(int k) const {
    if (k < 1 || k > rp_.t()) throw RangeError("level k=" + std::to_string(k) + " outside the recursive PRS");
    const PrsLevel& level = rp_.level(k);
    VerificationReport report;
    report.subject = "recursive fundamental theorem, level " + std::to_string(k);

    auto check_zero = [&](std::string claim, int j) {
        Polynomial s = rec_subresultant(k, j);
        const bool pass = s.is_zero();
        report.checks.push_back({std::move(claim), k, j, std::move(s), Polynomial{}, std::nullopt, pass});
    };
    auto check_value = [&](std::string claim, int j, int i, SubresPosition which) {
        Polynomial s = rec_subresultant(k, j);
        Rational factor = subresultant_factor(level, i, which) * similarity_R(k, j);
        Polynomial rhs = level.element(i) * factor;
        const bool pass = s == rhs;
        report.checks.push_back({std::move(claim), k, j, std::move(s), std::move(rhs), std::move(factor), pass});
    };

    const int l = level.length();
    for (int j = 0; j < level.n(l); ++j) check_zero("zero below last degree", j);
    for (int i = 3; i <= l; ++i) {
        check_value("value at n_" + std::to_string(i), level.n(i), i, SubresPosition::AtDegree);
        for (int j = level.n(i) + 1; j < level.n(i - 1) - 1; ++j)
            check_zero("zero in gap before n_" + std::to_string(i), j);
        check_value("value at n_" + std::to_string(i - 1) + "-1", level.n(i - 1) - 1, i,
                    SubresPosition::BelowPreviousDegree);
    }
    return report;
}

RecSubresMatrix rec_subres_matrix(const RecursivePRS& rp, int k, int j) { return RecSubresContext(rp).matrix(k, j); }

Polynomial rec_subresultant(const RecursivePRS& rp, int k, int j) {
    return RecSubresContext(rp).rec_subresultant(k, j);
}

SimilarityFactors similarity_factors(const RecursivePRS& rp, int k, int j) {
    return RecSubresContext(rp).similarity_factors(k, j);
}

VerificationReport verify_similarity(const RecursivePRS& rp, int k, int j) {
    return RecSubresContext(rp).verify_similarity(k, j);
}

VerificationReport verify_recursive_fundamental(const RecursivePRS& rp, int k) {
    return RecSubresContext(rp).verify_recursive_fundamental(k);
}

}  // namespace recprs
