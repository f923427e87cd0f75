#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <utility>

#include "recprs/matrix.hpp"
#include "recprs/prs.hpp"
#include "recprs/verification.hpp"

namespace recprs {

/// The (k,j)-th recursive subresultant matrix together with the pieces of
/// M^(k-1, j_{k-1}) it was assembled from. For k = 1 the blocks are empty.
struct RecSubresMatrix {
    int k = 1;
    int j = 0;
    ExactMatrix matrix;
    ExactMatrix upper_block;   // M_U: M^(k-1,j_{k-1}) without its bottom j_{k-1}+1 rows
    ExactMatrix lower_block;   // M_L: those bottom rows
    ExactMatrix scaled_lower;  // M_L': row (j_{k-1}+1-tau) of M_L times tau, bottom row dropped
};

struct SimilarityFactors {
    long u = 0;    // column count of M^(k,j)
    Rational B;    // trailing subresultant factor of level k
    long b = 0;    // 2 j_{k-1} - 2 j - 1
    Rational r;    // +1 or -1
    Rational R;    // rec_subresultant(k,j) = R * S_j(P_1^(k), P_2^(k))
};

struct MatrixDims {
    std::size_t rows = 0;
    std::size_t cols = 0;
    friend bool operator==(const MatrixDims&, const MatrixDims&) = default;
};

/// Expected size of M^(k,j) from the degrees alone: (m+n-j) x (m+n-2j) at
/// k = 1, and for k >= 2 cols = (m+n-2j_1) prod_{l=2}^{k-1}(2j_{l-1}-2j_l-1) (2j_{k-1}-2j-1),
/// rows = cols + j. `j_values` starts with j_0 = m. Throws RangeError.
MatrixDims rec_subres_dims(int m, int n, std::span<const int> j_values, int k, int j);

/// Running totals of every recursive subresultant matrix assembled in this
/// process, compared against rec_subres_dims at construction time.
struct DimensionAudit {
    std::uint64_t built = 0;
    std::uint64_t mismatched = 0;
};
DimensionAudit dimension_audit();

/// Recursive subresultant machinery over one recursive PRS. Assembled
/// matrices and recursive subresultants are memoized; the cache is guarded so
/// a context may be shared between threads.
class RecSubresContext {
   public:
    explicit RecSubresContext(RecursivePRS rp);

    const RecursivePRS& rprs() const { return rp_; }
    int m() const { return rp_.m(); }
    int n() const { return rp_.n(); }

    /// True when 1 <= k <= t and 0 <= j <= j_{k-1} - 2 (and j < deg G at k = 1).
    bool valid(int k, int j) const;
    /// Valid j values of level k, descending.
    std::vector<int> valid_js(int k) const;

    RecSubresMatrix matrix(int k, int j) const;
    Polynomial rec_subresultant(int k, int j) const;
    SimilarityFactors similarity_factors(int k, int j) const;

    /// rec_subresultant(k,j) against R_{k,j} * S_j(P_1^(k), P_2^(k)).
    VerificationReport verify_similarity(int k, int j) const;
    /// verify_similarity for every valid (k, j).
    VerificationReport verify_similarity_all() const;
    /// Zero clauses and scaled-element values of level k, through recursive subresultants.
    VerificationReport verify_recursive_fundamental(int k) const;

   private:
    void require_valid(int k, int j) const;
    std::shared_ptr<const RecSubresMatrix> build(int k, int j) const;
    long column_count(int k, int j) const;
    Rational trailing_factor(int k) const;
    Rational similarity_R(int k, int j) const;

    RecursivePRS rp_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, int>, std::shared_ptr<const RecSubresMatrix>> matrices_;
    mutable std::map<std::pair<int, int>, Polynomial> rec_subresultants_;
};

RecSubresMatrix rec_subres_matrix(const RecursivePRS& rp, int k, int j);
Polynomial rec_subresultant(const RecursivePRS& rp, int k, int j);
SimilarityFactors similarity_factors(const RecursivePRS& rp, int k, int j);
VerificationReport verify_similarity(const RecursivePRS& rp, int k, int j);
VerificationReport verify_recursive_fundamental(const RecursivePRS& rp, int k);

}  // namespace recprs
