#pragma once

#include <map>

#include "recprs/matrix.hpp"
#include "recprs/polynomial.hpp"
#include "recprs/prs.hpp"
#include "recprs/verification.hpp"

namespace recprs {

/// (m+n) x (m+n) Sylvester matrix: n shifted columns of F, then m shifted
/// columns of G, highest coefficients on top. Needs deg F >= deg G >= 1.
ExactMatrix sylvester_matrix(const Polynomial& F, const Polynomial& G);

/// j-th subresultant matrix, (m+n-j) x (m+n-2j), for 0 <= j < n.
/// Throws IndexError for j out of range and DegreeOrder for m < n.
ExactMatrix subres_matrix(const Polynomial& F, const Polynomial& G, int j);

/// Same layout without the j < n restriction: j = n yields the m x (m-n)
/// matrix of G columns alone, whose minors give lc(G)^(m-n-1) * G.
ExactMatrix subres_matrix_extended(const Polynomial& F, const Polynomial& G, int j);

/// For a matrix with c columns and c + j rows, the polynomial whose x^tau
/// coefficient is det(top c-1 rows + row c-1+j-tau).
Polynomial polynomial_from_minors(const ExactMatrix& m);

/// S_j(F, G) built from determinants of square minors of the subresultant matrix.
Polynomial subresultant(const Polynomial& F, const Polynomial& G, int j);

struct SubresChain {
    Polynomial F;
    Polynomial G;
    std::map<int, Polynomial> entries;  // j -> S_j(F, G), j = 0..deg G - 1
};

SubresChain subresultant_chain(const Polynomial& F, const Polynomial& G);

/// Which subresultant of the fundamental theorem a factor belongs to.
enum class SubresPosition {
    AtDegree,            // S_{n_i} = factor * P_i
    BelowPreviousDegree  // S_{n_{i-1}-1} = factor * P_i
};

/// Scalar s with S_j(F, G) = s * P_i for the PRS element P_i, 3 <= i <= l.
/// Throws IndexError otherwise.
Rational subresultant_factor(const PrsLevel& level, int i, SubresPosition which);

/// Unchecked variant that also accepts i = 2 (empty product), used for the
/// trailing factor of two-element levels.
Rational subresultant_factor_unchecked(const PrsLevel& level, int i, SubresPosition which);

/// Compares every S_j(F, G), 0 <= j < deg G, against the value the complete
/// PRS under `rule` predicts: zero below the last degree and in degree gaps,
/// scaled PRS elements at n_i and n_{i-1} - 1.
VerificationReport verify_fundamental_theorem(const Polynomial& F, const Polynomial& G,
                                              const DivisionRule& rule);

}  // namespace recprs
