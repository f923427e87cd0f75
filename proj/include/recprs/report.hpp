#pragma once

#include <json.hpp>

#include "recprs/matrix.hpp"
#include "recprs/polynomial.hpp"
#include "recprs/prs.hpp"
#include "recprs/rec_subres.hpp"
#include "recprs/root_count.hpp"
#include "recprs/verification.hpp"

namespace recprs::json {

// nlohmann::ordered_json keeps keys in insertion order, so output is stable.
using Json = nlohmann::ordered_json;

Json rational(const Rational& r);
/// Low-degree-first array of "num/den" strings.
Json polynomial(const Polynomial& p);
/// Array of rows, each an array of "num/den" strings.
Json matrix(const ExactMatrix& m);
Json prs_level(const PrsLevel& level);
Json recursive_prs(const RecursivePRS& rp);
Json similarity_factors(const SimilarityFactors& f);
Json root_count(const RootCount& rc);
Json verification(const VerificationReport& report);

/// Inverse of polynomial(): accepts "num/den" or integer strings.
/// Throws std::invalid_argument on malformed input.
Polynomial polynomial_from(const Json& coeffs);

}  // namespace recprs::json
